#!/usr/bin/env python

"""
Exception types raised by unruhcoh.
"""


class UnruhcohError(Exception):
    "Base class for all package errors."


class RegistryError(UnruhcohError, ValueError):
    """
    Invalid mode layout: bad party ids, dimensions, labels, keep-sets
    or subsystem partitions.
    """


class TruncationCapExceeded(UnruhcohError):
    """
    A tolerance-based truncation would need more Rindler levels than
    the hard cap allows.
    """
    def __init__(self, r: float, tail_tol: float, cap: int):
        self.r = r
        self.tail_tol = tail_tol
        self.cap = cap
        super().__init__(
            f"tail_tol={tail_tol:g} at r={r:g} needs n_max > cap ({cap})")


class NumericBudgetExceeded(UnruhcohError):
    """
    The truncated state would hold more amplitudes than max_terms.
    """
    def __init__(self, nterms: int, max_terms: int):
        self.nterms = nterms
        self.max_terms = max_terms
        super().__init__(
            f"state needs {nterms} amplitudes (max_terms={max_terms})")


class UnsupportedPattern(UnruhcohError, ValueError):
    "No closed form exists for the requested acceleration pattern."
