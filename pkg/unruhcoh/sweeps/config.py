#!/usr/bin/env python

"""
Sweep configuration: what to evaluate over which grid, and how.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple
import numpy as np
from unruhcoh.fock.rindler import (
    DEFAULT_TAIL_TOL,
    N_MAX_CAP,
    AccelerationSpec,
    TruncationPolicy,
)
from unruhcoh.states.builders import MAX_TERMS
from unruhcoh.states.families import Family


class Mode(Enum):
    numeric = "numeric"
    analytic = "analytic"
    both = "both"


@dataclass(frozen=True)
class Grid:
    "Linear grid of `count` points from start to stop inclusive."
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"grid count must be >= 1, got {self.count}")
        if self.start > self.stop:
            raise ValueError(f"grid start {self.start} > stop {self.stop}")

    @classmethod
    def parse(cls, text: str) -> "Grid":
        "Parse 'start:stop:count'."
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid must look like start:stop:count, got '{text}'")
        try:
            return cls(float(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError as err:
            raise ValueError(f"bad grid '{text}': {err}")

    @property
    def values(self) -> Tuple[float, ...]:
        if self.count == 1:
            return (self.start,)
        return tuple(float(i) for i in np.linspace(self.start, self.stop, self.count))


@dataclass(frozen=True)
class SweepConfig:
    """
    One block of grid points. Axes are iterated lexicographically in
    the order theta, phi, r1, r2, n_accel.

    r1 applies to every accelerated party unless r2 is given, in which
    case the two accelerated parties take r1 and r2 respectively. When
    n_accel is given it replaces `accelerated`: the last n parties
    accelerate at r1.
    """
    family: Family
    accelerated: Tuple[int, ...] = ()
    r1: Tuple[float, ...] = (0.0,)
    r2: Optional[Tuple[float, ...]] = None
    thetas: Tuple[Optional[float], ...] = (None,)
    phis: Tuple[Optional[float], ...] = (None,)
    n_parties: int = 3
    n_accel: Optional[Tuple[int, ...]] = None
    tail_tol: float = DEFAULT_TAIL_TOL
    n_max: Optional[int] = None
    cap: int = N_MAX_CAP
    max_terms: int = MAX_TERMS
    mode: Mode = Mode.both
    normalized: bool = False
    omega: bool = False
    pair: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "mode", Mode(self.mode))
        for name in ("accelerated", "r1", "thetas", "phis"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        for name in ("r2", "n_accel"):
            if getattr(self, name) is not None:
                object.__setattr__(self, name, tuple(getattr(self, name)))

        if not self.r1 or any(not len(axis) for axis in (self.thetas, self.phis)):
            raise ValueError("every grid axis needs at least one value")
        if not 0 < self.tail_tol < 1:
            raise ValueError(f"tail_tol must be in (0, 1), got {self.tail_tol}")
        if self.r2 is not None and len(self.accelerated) != 2:
            raise ValueError("a second r grid needs exactly two accelerated parties")
        if len(set(self.accelerated)) != len(self.accelerated):
            raise ValueError(f"duplicate accelerated party in {self.accelerated}")
        if self.n_accel is not None:
            if any(not 0 <= n <= self.n_parties for n in self.n_accel):
                raise ValueError(f"n_accel values must lie in 0..{self.n_parties}")
        if self.omega and min(self.r1 + (self.r2 or ())) <= 0:
            raise ValueError("Omega values must be > 0")

    @property
    def policy(self) -> TruncationPolicy:
        if self.n_max is not None:
            return TruncationPolicy.fixed(self.n_max)
        return TruncationPolicy.tolerance(self.tail_tol, self.cap)

    def acceleration(self, value: float) -> AccelerationSpec:
        "A grid value read as r, or as Omega when omega is set."
        if self.omega:
            return AccelerationSpec.from_omega(value)
        return AccelerationSpec(value)

    def accel_map(self, r1: float, r2: Optional[float], n: Optional[int]) -> dict:
        "Accelerated parties and their specs at one grid point."
        if n is not None:
            parties = range(self.n_parties - n, self.n_parties)
            return {p: self.acceleration(r1) for p in parties}
        if r2 is not None:
            first, second = sorted(self.accelerated)
            return {first: self.acceleration(r1), second: self.acceleration(r2)}
        return {p: self.acceleration(r1) for p in self.accelerated}

    @property
    def npoints(self) -> int:
        return (
            len(self.thetas) * len(self.phis) * len(self.r1)
            * len(self.r2 or (None,)) * len(self.n_accel or (None,))
        )
