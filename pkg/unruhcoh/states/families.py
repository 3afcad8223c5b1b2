#!/usr/bin/env python

"""
State families and their inertial superpositions over qubit parties.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple
import itertools
import math
from unruhcoh.fock.rindler import AccelerationSpec, TruncationPolicy

TWO_PI = 2.0 * math.pi


class Family(Enum):
    ghz = "ghz"
    w = "w"
    w_sym = "w-sym"
    plus = "plus"
    wwbar = "wwbar"
    star = "star"
    ghz_n = "ghz-n"
    w_n = "w-n"


# families whose party count is always three
TRIPARTITE = {Family.ghz, Family.w, Family.w_sym, Family.wwbar, Family.star}

# the qubit that selects which other qubit is in superposition
STAR_CENTRAL = 2
STAR_PERIPHERAL = (1, 0)


@dataclass(frozen=True)
class StateSpec:
    """
    A family member, the accelerated parties with their squeezing and
    the truncation policy used for their Rindler expansions.
    """
    family: Family
    theta: float = None
    phi: float = None
    n_parties: int = 3
    accel: Dict[int, AccelerationSpec] = field(default_factory=dict)
    policy: TruncationPolicy = field(default_factory=TruncationPolicy.tolerance)

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "accel", {
            int(party): (acc if isinstance(acc, AccelerationSpec)
                         else AccelerationSpec(float(acc)))
            for (party, acc) in dict(self.accel).items()
        })

        if self.family in TRIPARTITE:
            if self.n_parties != 3:
                raise ValueError(
                    f"family {self.family.value} has 3 parties, got N={self.n_parties}")
        elif self.n_parties < 2:
            raise ValueError(f"N must be >= 2, got {self.n_parties}")

        if self.family == Family.ghz:
            _check_angle("theta", self.theta)
        if self.family == Family.w:
            _check_angle("theta", self.theta)
            _check_angle("phi", self.phi)

        for party in self.accel:
            if not 0 <= party < self.n_parties:
                raise ValueError(
                    f"accelerated party {party} out of range 0..{self.n_parties - 1}")

    @property
    def accelerated(self) -> Tuple[int, ...]:
        return tuple(sorted(self.accel))

    @property
    def r_values(self) -> List[float]:
        "Squeezing of the accelerated parties in ascending party order."
        return [self.accel[p].r for p in self.accelerated]

    def r_map(self) -> Dict[int, float]:
        return {p: self.accel[p].r for p in self.accelerated}

    def inertial(self) -> "StateSpec":
        "The same state with no party accelerated."
        return StateSpec(
            self.family, self.theta, self.phi, self.n_parties, {}, self.policy)


def _check_angle(name, value):
    if value is None:
        raise ValueError(f"{name} is required for this family")
    if not 0 <= value < TWO_PI:
        raise ValueError(f"{name} must be in [0, 2pi), got {value}")


def _weight(bits):
    return sum(bits)


def inertial_terms(spec: StateSpec) -> List[Tuple[Tuple[int, ...], float]]:
    """
    Computational-basis terms (bits, amplitude) of the inertial state.
    Terms with an exactly zero amplitude are left out.
    """
    nparties = spec.n_parties
    family = spec.family

    if family == Family.ghz:
        terms = [
            ((0, 0, 0), math.cos(spec.theta)),
            ((1, 1, 1), math.sin(spec.theta)),
        ]

    elif family == Family.w:
        terms = [
            ((1, 0, 0), math.sin(spec.theta) * math.cos(spec.phi)),
            ((0, 1, 0), math.sin(spec.theta) * math.sin(spec.phi)),
            ((0, 0, 1), math.cos(spec.theta)),
        ]

    elif family in (Family.w_sym, Family.w_n):
        amp = 1.0 / math.sqrt(nparties)
        terms = [
            (tuple(int(i == j) for i in range(nparties)), amp)
            for j in range(nparties)
        ]

    elif family == Family.ghz_n:
        amp = 1.0 / math.sqrt(2.0)
        terms = [((0,) * nparties, amp), ((1,) * nparties, amp)]

    elif family == Family.plus:
        amp = 2.0 ** (-nparties / 2.0)
        terms = [
            (bits, amp) for bits in itertools.product((0, 1), repeat=nparties)
        ]

    elif family == Family.wwbar:
        amp = 1.0 / math.sqrt(6.0)
        terms = [
            (bits, amp) for bits in itertools.product((0, 1), repeat=3)
            if _weight(bits) in (1, 2)
        ]

    elif family == Family.star:
        terms = [
            ((0, 0, 0), 0.5),
            ((1, 0, 0), 0.5),
            ((1, 0, 1), 0.5),
            ((1, 1, 1), 0.5),
        ]

    else:
        raise ValueError(f"unknown family {family}")

    return [(bits, amp) for (bits, amp) in terms if amp != 0.0]


def inertial_weight(spec: StateSpec) -> float:
    "(sum |amplitude|)^2 of the inertial state, the largest l1 scale."
    return math.fsum(abs(amp) for (_, amp) in inertial_terms(spec)) ** 2


class StarScenario(Enum):
    central = "central"
    peripheral = "peripheral"
    central_peripheral = "central+peripheral"
    two_peripheral = "two-peripheral"


# parties accelerated in each star scenario, central first
STAR_SCENARIO_PARTIES = {
    StarScenario.central: (STAR_CENTRAL,),
    StarScenario.peripheral: (STAR_PERIPHERAL[0],),
    StarScenario.central_peripheral: (STAR_CENTRAL, STAR_PERIPHERAL[0]),
    StarScenario.two_peripheral: STAR_PERIPHERAL,
}


def star_scenario(accelerated) -> StarScenario:
    """
    Scenario of a set of accelerated star parties. Both peripheral
    qubits have identical marginals, so either one counts as the
    peripheral party.
    """
    accelerated = set(accelerated)
    central = STAR_CENTRAL in accelerated
    peripheral = len(accelerated & set(STAR_PERIPHERAL))
    if central and peripheral == 0 and len(accelerated) == 1:
        return StarScenario.central
    if not central and peripheral == 1 and len(accelerated) == 1:
        return StarScenario.peripheral
    if central and peripheral == 1 and len(accelerated) == 2:
        return StarScenario.central_peripheral
    if not central and peripheral == 2 and len(accelerated) == 2:
        return StarScenario.two_peripheral
    raise ValueError(f"no star scenario for accelerated parties {sorted(accelerated)}")
