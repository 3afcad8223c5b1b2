#!/usr/bin/env python

"""
l1-norm coherence of reduced density matrices: total, global and
local, and the numeric pipeline that builds, traces and measures a
StateSpec.

    C_T = sum_{i != j} |rho_ij|
    C_L = C_T(pi(rho))
    C_G = C_T(rho) - C_T(pi(rho))
"""

from dataclasses import dataclass, field
from typing import Dict, Optional
import math
import numpy as np
import scipy.sparse as sp
from loguru import logger
from unruhcoh.coherence.density import (
    DensityMatrix,
    check_partition,
    default_subsystems,
    embed,
    marginal_product,
    marginals,
    reduce,
    trace_out_parties,
)
from unruhcoh.states.builders import MAX_TERMS, build, party_subsystems
from unruhcoh.states.families import StateSpec

# party letters used for the reduced two-party states
PAIRS = {"AB": (0, 1), "BC": (1, 2), "AC": (0, 2)}


def l1_total(rho: DensityMatrix) -> float:
    "Sum of off-diagonal magnitudes, from the strict upper triangle."
    upper = sp.triu(rho.matrix, k=1)
    return 2.0 * math.fsum(np.abs(upper.data).tolist())


def _abs_sum(rho: DensityMatrix) -> float:
    return math.fsum(np.abs(rho.matrix.data).tolist())


def l1_local(rho: DensityMatrix, subsystems=None) -> float:
    """
    Off-diagonal weight of the product of marginals. For a product the
    sum of all magnitudes factorizes, so pi(rho) is never assembled:
        C_L = t * (prod_k S_k / t_k - 1)
    with S_k the entry magnitude sum and t_k the trace of marginal k.
    """
    parts = marginals(rho, subsystems)
    trace = rho.trace
    ratio = math.prod(_abs_sum(part) / part.trace for part in parts)
    return max(0.0, trace * (ratio - 1.0))


def l1_global(rho: DensityMatrix, subsystems=None) -> float:
    "Off-diagonal weight of rho not accounted for by its marginals."
    return l1_total(rho) - l1_local(rho, subsystems)


def l1_global_distance(rho: DensityMatrix, subsystems=None) -> float:
    """
    Entrywise l1 distance between rho and pi(rho), diagonal included.
    This is not the quantity paired with C_L; it is kept for diagnostics.
    """
    product = marginal_product(rho, subsystems)
    union = np.unique(np.vstack([rho.basis, product.basis]), axis=0)
    diff = embed(rho, union) - embed(product, union)
    return math.fsum(np.abs(diff.data).tolist())


@dataclass
class CoherenceReport:
    """
    Coherence values of one evaluated state. Numeric reports carry the
    cutoffs and tail bound; analytic reports leave them empty.
    """
    c_total: float
    c_global: Optional[float] = None
    c_local: Optional[float] = None
    n_max_used: Dict[int, int] = field(default_factory=dict)
    tail_bound_total: float = 0.0
    c_inaccessible: Optional[float] = None
    method: str = "numeric"

    @property
    def split_defect(self) -> Optional[float]:
        "|C_T - (C_G + C_L)| when the split is available."
        if self.c_global is None or self.c_local is None:
            return None
        return abs(self.c_total - (self.c_global + self.c_local))

    def to_row(self) -> dict:
        "The coherence columns of a CSV row, suffixed by method."
        return {
            f"c_total_{self.method}": self.c_total,
            f"c_global_{self.method}": self.c_global,
            f"c_local_{self.method}": self.c_local,
        }


def measure(rho: DensityMatrix, subsystems=None):
    "(C_T, C_G, C_L) of rho over the given (default per-party) subsystems."
    subsystems = check_partition(rho, subsystems or default_subsystems(rho))
    c_total = l1_total(rho)
    c_local = l1_local(rho, subsystems)
    return c_total, c_total - c_local, c_local


def accessible_density(spec: StateSpec, max_terms: int = MAX_TERMS, pair: str = None):
    """
    Build the truncated state, trace out every Rindler-II mode and,
    when `pair` names two parties (AB, BC, AC), the third one too.
    Returns (rho, built).
    """
    built = build(spec, max_terms)
    visible = [i for group in party_subsystems(spec) for i in group]
    rho = reduce(built.state, visible)
    if pair is not None:
        if spec.n_parties != 3:
            raise ValueError("reduced pairs are defined for three parties")
        keep = PAIRS[pair.upper()]
        rho = trace_out_parties(rho, [p for p in range(3) if p not in keep])
    return rho, built


def evaluate_numeric(
    spec: StateSpec,
    max_terms: int = MAX_TERMS,
    pair: str = None,
    inertial: bool = True,
    ) -> CoherenceReport:
    """
    Numeric pipeline: build, trace out region II, measure. With
    `inertial` the no-acceleration state is measured as well so the
    coherence lost to region II can be reported.
    """
    rho, built = accessible_density(spec, max_terms, pair)
    c_total, c_global, c_local = measure(rho)

    c_inaccessible = None
    if inertial:
        if spec.accel:
            rho0, _ = accessible_density(spec.inertial(), max_terms, pair)
            c_inaccessible = l1_total(rho0) - c_total
        else:
            c_inaccessible = 0.0

    logger.debug(
        f"numeric {spec.family.value} r={spec.r_map()}: C_T={c_total:.12g} "
        f"C_G={c_global:.12g} C_L={c_local:.12g}")
    return CoherenceReport(
        c_total=c_total,
        c_global=c_global,
        c_local=c_local,
        n_max_used=dict(built.n_max),
        tail_bound_total=built.tail_bound_total,
        c_inaccessible=c_inaccessible,
        method="numeric",
    )
