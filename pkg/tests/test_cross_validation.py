#!/usr/bin/env python

"""
The numeric pipeline (build, trace out region II, measure) against the
closed forms, for every family and acceleration pattern they cover.
"""

import math
import pytest
from unruhcoh.analytic.closed_forms import evaluate_analytic
from unruhcoh.coherence.measures import evaluate_numeric
from unruhcoh.states.families import Family, StateSpec

PI = math.pi
ONE_PARTY_R = [0.25, 0.5, 1.0, 1.5, 2.0, 2.5]
TWO_PARTY_R = [(0.3, 0.8), (1.0, 1.0), (1.5, 0.5)]
TOL = 1e-6


def _agree(spec, pair=None):
    numeric = evaluate_numeric(spec, pair=pair, inertial=False)
    analytic = evaluate_analytic(spec, pair)
    assert numeric.c_total == pytest.approx(analytic.c_total, abs=TOL)
    assert numeric.c_global == pytest.approx(analytic.c_global, abs=TOL)
    assert numeric.c_local == pytest.approx(analytic.c_local, abs=TOL)


ONE_PARTY = [
    (Family.ghz, dict(theta=PI / 4), 2),
    (Family.ghz, dict(theta=PI / 6), 0),
    (Family.w, dict(theta=PI / 5, phi=PI / 5), 2),
    (Family.w, dict(theta=PI / 5, phi=PI / 5), 1),
    (Family.w, dict(theta=PI / 5, phi=PI / 5), 0),
    (Family.w, dict(theta=2.5, phi=4.0), 1),
    (Family.w_sym, {}, 2),
    (Family.plus, {}, 2),
    (Family.wwbar, {}, 2),
    (Family.wwbar, {}, 0),
    (Family.star, {}, 2),
    (Family.star, {}, 1),
    (Family.star, {}, 0),
]


@pytest.mark.parametrize("family, angles, party", ONE_PARTY)
@pytest.mark.parametrize("r", ONE_PARTY_R)
def test_one_accelerated_party(family, angles, party, r):
    _agree(StateSpec(family, accel={party: r}, **angles))


TWO_PARTY = [
    (Family.ghz, dict(theta=PI / 4), (1, 2)),
    (Family.w, dict(theta=PI / 5, phi=PI / 5), (1, 2)),
    (Family.w, dict(theta=PI / 3, phi=PI / 6), (0, 2)),
    (Family.w_sym, {}, (1, 2)),
    (Family.plus, {}, (1, 2)),
    (Family.wwbar, {}, (1, 2)),
    # star: central + peripheral, either peripheral, and both peripherals
    (Family.star, {}, (1, 2)),
    (Family.star, {}, (0, 2)),
    (Family.star, {}, (0, 1)),
]


@pytest.mark.parametrize("family, angles, parties", TWO_PARTY)
@pytest.mark.parametrize("rs", TWO_PARTY_R)
def test_two_accelerated_parties(family, angles, parties, rs):
    accel = dict(zip(parties, rs))
    _agree(StateSpec(family, accel=accel, **angles))


@pytest.mark.parametrize("family", [Family.ghz_n, Family.w_n])
@pytest.mark.parametrize("nacc", [0, 1, 2])
def test_network_states(family, nacc):
    accel = {3 - i: 0.4 + 0.5 * i for i in range(nacc)}
    _agree(StateSpec(family, n_parties=4, accel=accel))


@pytest.mark.parametrize("pair", ["AB", "BC", "AC"])
@pytest.mark.parametrize("family, angles", [
    (Family.w, dict(theta=PI / 5, phi=PI / 5)),
    (Family.w_sym, {}),
    (Family.ghz, dict(theta=PI / 4)),
])
def test_reduced_pairs(family, angles, pair):
    _agree(StateSpec(family, accel={2: 1.2}, **angles), pair=pair)
