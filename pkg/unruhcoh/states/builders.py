#!/usr/bin/env python

"""
Builds the truncated pure state of a family member with each
accelerated party's |0> and |1> replaced by its Rindler expansion.
"""

from dataclasses import dataclass
from typing import Dict, List
import math
from loguru import logger
from unruhcoh.errors import NumericBudgetExceeded
from unruhcoh.fock.registry import PureState, qubit, tensor, norm_sq
from unruhcoh.fock.rindler import (
    Expansion,
    TruncationPolicy,
    rindler_one_particle,
    rindler_vacuum,
    resolve_n_max,
    tail_bound,
)
from unruhcoh.states.families import StateSpec, inertial_terms

# default ceiling on the amplitudes of a truncated state
MAX_TERMS = 5_000_000


@dataclass(frozen=True)
class BuiltState:
    """
    A truncated state with the cutoff used for each accelerated party
    and the union bound on its norm deficit.
    """
    spec: StateSpec
    state: PureState
    n_max: Dict[int, int]
    tail_bound_total: float

    @property
    def norm_deficit(self) -> float:
        return 1.0 - norm_sq(self.state)


def prepare(spec: StateSpec, max_terms: int = MAX_TERMS):
    """
    Resolve the cutoff of every accelerated party and check the size of
    the state before anything is built. Returns (n_max map, tail bound).
    """
    n_max = {}
    tails = []
    for party in spec.accelerated:
        r = spec.accel[party].r
        n_max[party] = resolve_n_max(r, spec.policy, Expansion.one_particle)
        tails.append(tail_bound(r, n_max[party], Expansion.one_particle))

    nterms = len(inertial_terms(spec)) * math.prod(n + 1 for n in n_max.values())
    if nterms > max_terms:
        raise NumericBudgetExceeded(nterms, max_terms)
    return n_max, math.fsum(tails)


def _party_factors(spec: StateSpec, n_max: Dict[int, int]):
    "The two local states (for bits 0 and 1) of every party."
    factors = []
    for party in range(spec.n_parties):
        if party in spec.accel:
            r = spec.accel[party].r
            policy = TruncationPolicy.fixed(n_max[party])
            factors.append((
                rindler_vacuum(r, policy, party),
                rindler_one_particle(r, policy, party),
            ))
        else:
            factors.append((qubit(party, 0), qubit(party, 1)))
    return factors


def build(spec: StateSpec, max_terms: int = MAX_TERMS) -> BuiltState:
    """
    Superpose the family's inertial terms with every accelerated party
    expanded over Rindler-I/II levels. No renormalization after
    truncation.
    """
    n_max, tails = prepare(spec, max_terms)
    factors = _party_factors(spec, n_max)

    state = None
    for (bits, amp) in inertial_terms(spec):
        term = factors[0][bits[0]]
        for party in range(1, spec.n_parties):
            term = tensor(term, factors[party][bits[party]])
        term = term.scaled(amp)
        state = term if state is None else state + term

    logger.debug(
        f"built {spec.family.value} with n_max={n_max}: "
        f"nnz={state.nnz}, tail_bound={tails:.3g}")
    return BuiltState(spec, state, n_max, tails)


def party_subsystems(spec: StateSpec) -> List[List[int]]:
    """
    Visible mode indices of each party in the full registry: the qubit
    mode of an inertial party, the Rindler-I mode of an accelerated one.
    """
    groups = []
    index = 0
    for party in range(spec.n_parties):
        groups.append([index])
        index += 2 if party in spec.accel else 1
    return groups


if __name__ == "__main__":

    from unruhcoh.states.families import Family

    SPEC = StateSpec(
        Family.ghz, theta=math.pi / 4,
        accel={2: 1.0}, policy=TruncationPolicy.fixed(1),
    )
    BUILT = build(SPEC)
    print(BUILT.state.amplitudes)
    print(party_subsystems(SPEC))
