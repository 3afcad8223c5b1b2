#!/usr/bin/env python

"""
Truncated two-mode Rindler expansions of the Minkowski vacuum and
one-particle states, with exact tail accounting.

    |0>_M = sum_n tanh^n r / cosh r |n>_I |n>_II
    |1>_M = sum_n sqrt(n+1) tanh^n r / cosh^2 r |n+1>_I |n>_II

with cosh r = (1 - exp(-2 pi Omega))^(-1/2) and Omega = |omega| c / a.
Only the q_R = 1, q_L = 0 Unruh mode is used.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional
import math
import numpy as np
from loguru import logger
from unruhcoh.errors import TruncationCapExceeded
from unruhcoh.fock.registry import ModeRegistry, PureState

DEFAULT_TAIL_TOL = 1e-10
N_MAX_CAP = 1_000_000


class Expansion(Enum):
    vacuum = "vacuum"
    one_particle = "one-particle"


def r_from_omega(omega: float) -> float:
    """
    Squeezing parameter from the dimensionless Rindler frequency.
    Uses tanh r = exp(-pi Omega), equivalent to
    cosh r = (1 - exp(-2 pi Omega))^(-1/2).
    """
    if not omega > 0:
        raise ValueError(f"Omega must be > 0, got {omega}")
    return float(np.arctanh(math.exp(-math.pi * omega)))


def omega_from_r(r: float) -> float:
    "Inverse of r_from_omega, for r > 0."
    if not r > 0:
        raise ValueError(f"r must be > 0 to define Omega, got {r}")
    return -log_tanh(r) / math.pi


def log_tanh(r: float) -> float:
    "log(tanh r) without cancellation at large r."
    e2r = math.exp(-2.0 * r)
    return math.log1p(-e2r) - math.log1p(e2r)


def log_cosh(r: float) -> float:
    return r + math.log1p(math.exp(-2.0 * r)) - math.log(2.0)


def sech_sq(r: float) -> float:
    "1 - tanh^2 r, stable for large r."
    e2r = math.exp(-2.0 * r)
    return 4.0 * e2r / (1.0 + e2r) ** 2


@dataclass(frozen=True)
class AccelerationSpec:
    """
    Per-party acceleration, stored as the squeezing parameter r. When
    built from a Rindler frequency, omega is kept for reporting.
    """
    r: float
    omega: Optional[float] = None

    def __post_init__(self):
        if not (self.r >= 0 and math.isfinite(self.r)):
            raise ValueError(f"r must be finite and >= 0, got {self.r}")
        if self.omega is not None:
            # tanh^2 r = exp(-2 pi Omega) is the same relation, without
            # the cancellation in 1 - exp(...) at small Omega
            expected = math.exp(-2.0 * math.pi * self.omega)
            if not math.isclose(math.tanh(self.r) ** 2, expected, rel_tol=1e-12):
                raise ValueError(
                    f"r={self.r} is inconsistent with Omega={self.omega}")

    @classmethod
    def from_omega(cls, omega: float) -> "AccelerationSpec":
        return cls(r=r_from_omega(omega), omega=omega)


@dataclass(frozen=True)
class TruncationPolicy:
    """
    Either a fixed Rindler cutoff n_max or a tolerance on the omitted
    probability per accelerated party.
    """
    n_max: Optional[int] = None
    tail_tol: Optional[float] = None
    cap: int = N_MAX_CAP

    def __post_init__(self):
        if (self.n_max is None) == (self.tail_tol is None):
            raise ValueError("give exactly one of n_max or tail_tol")
        if self.n_max is not None and self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        if self.tail_tol is not None and not 0 < self.tail_tol < 1:
            raise ValueError(f"tail_tol must be in (0, 1), got {self.tail_tol}")

    @classmethod
    def fixed(cls, n_max: int) -> "TruncationPolicy":
        return cls(n_max=n_max)

    @classmethod
    def tolerance(cls, tail_tol: float = DEFAULT_TAIL_TOL, cap: int = N_MAX_CAP):
        return cls(tail_tol=tail_tol, cap=cap)


def tail_bound(r: float, n_max: int, which: Expansion = Expansion.vacuum) -> float:
    """
    Exact probability omitted by truncating at n_max.
      vacuum:       tanh^(2(n_max+1)) r
      one-particle: tanh^(2(n_max+1)) r * (1 + (n_max+1) sech^2 r)
    The latter is the complement of the partial arithmetico-geometric
    sum of (n+1) tanh^(2n) r / cosh^4 r.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if r == 0:
        return 0.0
    geometric = math.exp(2.0 * (n_max + 1) * log_tanh(r))
    if Expansion(which) == Expansion.vacuum:
        return geometric
    return geometric * (1.0 + (n_max + 1) * sech_sq(r))


def choose_n_max(
    r: float,
    tail_tol: float,
    which: Expansion = Expansion.vacuum,
    cap: int = N_MAX_CAP,
    ) -> int:
    """
    Smallest n_max whose tail is <= tail_tol. Raises when it would
    exceed the cap.
    """
    if r == 0:
        return 0
    log_z = 2.0 * log_tanh(r)

    # tanh^2 r rounds to 1 at very large r: no finite cutoff reaches tail_tol
    if log_z == 0 or math.log(tail_tol) / log_z > cap + 1:
        raise TruncationCapExceeded(r, tail_tol, cap)

    # geometric tail: closed form, then nudge for float rounding
    nvac = max(0, math.ceil(math.log(tail_tol) / log_z) - 1)
    if nvac > cap:
        raise TruncationCapExceeded(r, tail_tol, cap)
    while tail_bound(r, nvac, Expansion.vacuum) > tail_tol:
        nvac += 1
    while nvac > 0 and tail_bound(r, nvac - 1, Expansion.vacuum) <= tail_tol:
        nvac -= 1
    if Expansion(which) == Expansion.vacuum:
        return nvac

    # one-particle tail is larger; bracket then bisect
    lo, hi = nvac, nvac
    while tail_bound(r, hi, Expansion.one_particle) > tail_tol:
        lo, hi = hi, 2 * hi + 1
        if lo > cap:
            raise TruncationCapExceeded(r, tail_tol, cap)
    while lo < hi:
        mid = (lo + hi) // 2
        if tail_bound(r, mid, Expansion.one_particle) <= tail_tol:
            hi = mid
        else:
            lo = mid + 1
    if hi > cap:
        raise TruncationCapExceeded(r, tail_tol, cap)
    return hi


def resolve_n_max(r: float, policy: TruncationPolicy, which=Expansion.one_particle):
    "The cutoff a policy implies for one accelerated party."
    if policy.n_max is not None:
        return policy.n_max
    n_max = choose_n_max(r, policy.tail_tol, which, policy.cap)
    logger.debug(
        f"r={r:.6g} tail_tol={policy.tail_tol:g} ({Expansion(which).value}) "
        f"-> n_max={n_max}")
    return n_max


def _levels(r: float, n_max: int):
    "Rindler levels 0..n_max and their log(tanh^n r)."
    levels = np.arange(n_max + 1)
    return levels, levels * log_tanh(r)


def rindler_vacuum(
    r: float,
    policy: TruncationPolicy = TruncationPolicy.tolerance(),
    party: int = 0,
    ) -> PureState:
    """
    Truncated two-mode squeezed vacuum of one accelerated party:
    amplitudes tanh^n r / cosh r on labels (n, n), n = 0..n_max.
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    n_max = resolve_n_max(r, policy, Expansion.vacuum)
    registry = ModeRegistry.single(party, n_max)
    if r == 0:
        return PureState.basis(registry, (0, 0))

    levels, logt = _levels(r, n_max)
    amps = np.exp(logt - log_cosh(r))
    labels = np.column_stack([levels, levels])
    return PureState(registry, labels, amps)


def rindler_one_particle(
    r: float,
    policy: TruncationPolicy = TruncationPolicy.tolerance(),
    party: int = 0,
    ) -> PureState:
    """
    Truncated one-particle state of one accelerated party:
    amplitudes sqrt(n+1) tanh^n r / cosh^2 r on labels (n+1, n).
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    n_max = resolve_n_max(r, policy, Expansion.one_particle)
    registry = ModeRegistry.single(party, n_max)
    if r == 0:
        return PureState.basis(registry, (1, 0))

    levels, logt = _levels(r, n_max)
    amps = np.sqrt(levels + 1.0) * np.exp(logt - 2.0 * log_cosh(r))
    labels = np.column_stack([levels + 1, levels])
    return PureState(registry, labels, amps)


if __name__ == "__main__":

    from unruhcoh.fock.registry import norm_sq

    VAC = rindler_vacuum(1.0, TruncationPolicy.fixed(2))
    print(VAC.amplitudes)
    print(choose_n_max(2.0, 1e-10))
    print(norm_sq(rindler_vacuum(2.0, TruncationPolicy.fixed(10))))
