#!/usr/bin/env python

"""
Closed-form l1 coherence of every state family under acceleration.

Each expression is a polynomial in the kernel f(r) of the accelerated
parties, one factor per party whose 0/1 superposition is degraded.
Trigonometric coefficients enter through their absolute values, so
the forms hold for every theta and phi, not just the first quadrant.
"""

from typing import Dict, Mapping, Optional, Sequence, Tuple
import itertools
import math
from loguru import logger
from unruhcoh.analytic.polylog import kernel_f
from unruhcoh.coherence.measures import CoherenceReport
from unruhcoh.errors import UnsupportedPattern
from unruhcoh.fock.rindler import log_cosh, log_tanh
from unruhcoh.states.families import (
    Family,
    StarScenario,
    StateSpec,
    STAR_CENTRAL,
    star_scenario,
)

# (C_T, C_G, C_L)
Triple = Tuple[float, float, float]


def _kernels(rs: Sequence[float]):
    return [kernel_f(r) for r in rs]


def _check_tripartite(rs, family: str):
    if len(rs) > 2:
        raise UnsupportedPattern(
            f"{family}: closed forms cover at most 2 accelerated parties, got {len(rs)}")


def ghz_coherence(theta: float, rs: Sequence[float] = ()) -> float:
    "|2 sin(theta) cos(theta)| times the kernel of each accelerated party."
    rs = list(rs)
    _check_tripartite(rs, "ghz")
    return abs(2.0 * math.sin(theta) * math.cos(theta)) * math.prod(_kernels(rs))


def _w_amplitudes(theta: float, phi: float):
    return (
        math.sin(theta) * math.cos(phi),
        math.sin(theta) * math.sin(phi),
        math.cos(theta),
    )


def w_coherence(theta: float, phi: float, r_by_party: Mapping[int, float] = None) -> float:
    """
    Generalized W state sin(t)cos(p)|100> + sin(t)sin(p)|010> + cos(t)|001>.
    Each pair of excitations contributes 2|a_i a_j| f_i f_j, with f = 1
    for inertial parties. With party 2 alone accelerated this is
        2|sin t cos t| (|sin p| + |cos p|) f + 2 sin^2 t |sin p cos p|
    """
    r_by_party = dict(r_by_party or {})
    _check_tripartite(r_by_party, "w")
    amps = _w_amplitudes(theta, phi)
    f = [kernel_f(r_by_party[p]) if p in r_by_party else 1.0 for p in range(3)]
    return math.fsum(
        2.0 * abs(amps[i] * amps[j]) * f[i] * f[j]
        for (i, j) in itertools.combinations(range(3), 2)
    )


def w_symmetric_coherence(rs: Sequence[float] = ()) -> float:
    "Equal-weight W state of three parties; 2 when inertial."
    rs = list(rs)
    _check_tripartite(rs, "w-sym")
    return w_n_coherence(3, rs)


def w_reduced_coherence(
    theta: float,
    phi: float,
    r_by_party: Mapping[int, float],
    pair: str,
    ) -> float:
    """
    Coherence left in a two-party reduction of the generalized W state:
    the pair keeps only its own excitation exchange, 2|a_i a_j| f_i f_j.
    """
    pairs = {"AB": (0, 1), "BC": (1, 2), "AC": (0, 2)}
    try:
        (i, j) = pairs[pair.upper()]
    except KeyError:
        raise ValueError(f"pair must be one of {sorted(pairs)}, got {pair}")
    r_by_party = dict(r_by_party or {})
    _check_tripartite(r_by_party, "w")
    amps = _w_amplitudes(theta, phi)
    fi = kernel_f(r_by_party[i]) if i in r_by_party else 1.0
    fj = kernel_f(r_by_party[j]) if j in r_by_party else 1.0
    return 2.0 * abs(amps[i] * amps[j]) * fi * fj


def separable_coherence(rs: Sequence[float] = (), n_parties: int = 3) -> float:
    """
    |+>^N with the listed parties accelerated:
        2^(N - n) prod_k (1 + f_k) - 1
    which is 7, 3 + 4f and 1 + 2f1 + 2f2 + 2f1f2 for three parties.
    """
    rs = list(rs)
    if len(rs) > n_parties:
        raise UnsupportedPattern(f"{len(rs)} accelerated parties out of {n_parties}")
    return 2.0 ** (n_parties - len(rs)) * math.prod(1.0 + f for f in _kernels(rs)) - 1.0


def wwbar_coherence(rs: Sequence[float] = ()) -> Triple:
    "(C_T, C_G, C_L) of (|W> + |W-bar>)/sqrt(2); symmetric in the parties."
    rs = list(rs)
    _check_tripartite(rs, "wwbar")
    if not rs:
        return 5.0, 37.0 / 27.0, 98.0 / 27.0
    if len(rs) == 1:
        (f,) = _kernels(rs)
        return (
            2.0 + 3.0 * f,
            2.0 / 9.0 + 31.0 * f / 27.0,
            16.0 / 9.0 + 50.0 * f / 27.0,
        )
    f1, f2 = _kernels(rs)
    return (
        4.0 / 6.0 + 8.0 / 6.0 * f1 + 8.0 / 6.0 * f2 + 10.0 / 6.0 * f1 * f2,
        2.0 / 9.0 * f1 + 2.0 / 9.0 * f2 + 25.0 / 27.0 * f1 * f2,
        2.0 / 3.0 + 10.0 / 9.0 * f1 + 10.0 / 9.0 * f2 + 20.0 / 27.0 * f1 * f2,
    )


def star_coherence(scenario: Optional[StarScenario], rs: Sequence[float] = ()) -> Triple:
    """
    (C_T, C_G, C_L) of the star state. For central+peripheral, rs is
    (r_central, r_peripheral); for two-peripheral, the two peripheral
    r in party order. scenario None is the inertial state.
    """
    rs = list(rs)
    if scenario is None:
        if rs:
            raise UnsupportedPattern("inertial star state takes no r values")
        return 3.0, 5.0 / 8.0, 19.0 / 8.0

    scenario = StarScenario(scenario)
    expected = 1 if scenario in (StarScenario.central, StarScenario.peripheral) else 2
    if len(rs) != expected:
        raise UnsupportedPattern(
            f"star {scenario.value} needs {expected} r values, got {len(rs)}")
    fs = _kernels(rs)

    if scenario == StarScenario.central:
        (f,) = fs
        return 1.0 + 2.0 * f, -0.25 + 7.0 * f / 8.0, 1.25 + 9.0 * f / 8.0

    if scenario == StarScenario.peripheral:
        (f,) = fs
        return 1.5 + 1.5 * f, 0.25 + 3.0 * f / 8.0, 1.25 + 9.0 * f / 8.0

    (f1, f2) = fs
    local = 0.5 + 0.75 * f1 + 0.75 * f2 + 3.0 * f1 * f2 / 8.0
    if scenario == StarScenario.central_peripheral:
        return (
            0.5 + f1 + 0.5 * f2 + f1 * f2,
            0.25 * f1 - 0.25 * f2 + 5.0 * f1 * f2 / 8.0,
            local,
        )
    return (
        0.5 + f1 + f2 + 0.5 * f1 * f2,
        0.25 * f1 + 0.25 * f2 + f1 * f2 / 8.0,
        local,
    )


def _log_denominator(r: float) -> float:
    "log(sinh^2 r cosh r) for r > 0."
    return 2.0 * (log_cosh(r) + log_tanh(r)) + log_cosh(r)


def star_global_central_peripheral_printed(r_central: float, r_peripheral: float) -> float:
    """
    Global coherence for central+peripheral acceleration in its
    published form. It carries a constant 1/2 and a mixed term
    Li(tanh^2 r_c) / (4 cosh r_p sinh^2 r_p), so it does not add up
    with C_L to C_T; star_coherence returns the traced value instead.
    """
    logger.warning("evaluating the published star C_G form, not the traced value")
    fc = kernel_f(r_central)
    fp = kernel_f(r_peripheral)
    if r_central == r_peripheral:
        mixed = fc
    elif r_central == 0:
        mixed = 0.0
    elif r_peripheral == 0:
        raise ValueError("published form diverges at r_peripheral = 0 < r_central")
    else:
        # f_c * sinh^2 r_c cosh r_c is the bare polylog of r_c
        mixed = fc * math.exp(_log_denominator(r_central) - _log_denominator(r_peripheral))
    return 0.5 + 0.25 * fc - 0.25 * mixed + 5.0 * fc * fp / 8.0


def ghz_n_coherence(n_parties: int, rs: Sequence[float] = ()) -> float:
    "(|0...0> + |1...1>)/sqrt(2) with n accelerated parties: prod_k f_k."
    rs = list(rs)
    if len(rs) > n_parties:
        raise ValueError(f"{len(rs)} accelerated parties out of N={n_parties}")
    return math.prod(_kernels(rs))


def w_n_coherence(n_parties: int, rs: Sequence[float] = ()) -> float:
    """
    N-party W state with n accelerated parties:
        (2/N) [sum_{i<j} f_i f_j + (N - n) sum_i f_i] + (N - n)(N - n - 1)/N
    with both sums over the accelerated parties.
    """
    rs = list(rs)
    nacc = len(rs)
    if nacc > n_parties:
        raise ValueError(f"{nacc} accelerated parties out of N={n_parties}")
    fs = _kernels(rs)
    pairs = math.fsum(fi * fj for (fi, fj) in itertools.combinations(fs, 2))
    rest = n_parties - nacc
    return (2.0 / n_parties) * (pairs + rest * math.fsum(fs)) + rest * (rest - 1) / n_parties


def normalized_coherence(c_rel: float, c_inertial: float) -> float:
    "Coherence relative to its inertial value."
    if c_inertial == 0:
        raise ValueError("inertial coherence is zero; cannot normalize")
    return c_rel / c_inertial


def inaccessible_coherence(c_inertial: float, c_accessible: float) -> float:
    "Coherence moved out of reach into region II."
    return c_inertial - c_accessible


def logical_qubit_coherence(r: float) -> float:
    "Bell pair of two redundantly encoded logical qubits, both at r: f(r)^2."
    return ghz_coherence(math.pi / 4, [r, r])


def bell_coherence(r: float) -> float:
    "Two-party Bell state with one accelerated qubit: f(r)."
    return ghz_n_coherence(2, [r])


def _analytic_triple(spec: StateSpec, r_by_party: Dict[int, float], pair=None) -> Triple:
    "Closed-form (C_T, C_G, C_L) at explicit r values."
    family = spec.family
    rs = [r_by_party[p] for p in sorted(r_by_party)]

    if pair is not None:
        if family == Family.ghz:
            _check_tripartite(rs, "ghz")
            return 0.0, 0.0, 0.0
        if family == Family.w:
            c = w_reduced_coherence(spec.theta, spec.phi, r_by_party, pair)
            return c, c, 0.0
        if family == Family.w_sym:
            s = math.asin(math.sqrt(2.0 / 3.0))
            c = w_reduced_coherence(s, math.pi / 4, r_by_party, pair)
            return c, c, 0.0
        raise UnsupportedPattern(f"no reduced-pair closed form for {family.value}")

    if family == Family.ghz:
        c = ghz_coherence(spec.theta, rs)
        return c, c, 0.0
    if family == Family.w:
        c = w_coherence(spec.theta, spec.phi, r_by_party)
        return c, c, 0.0
    if family == Family.w_sym:
        c = w_symmetric_coherence(rs)
        return c, c, 0.0
    if family == Family.ghz_n:
        c = ghz_n_coherence(spec.n_parties, rs)
        return c, c, 0.0
    if family == Family.w_n:
        c = w_n_coherence(spec.n_parties, rs)
        return c, c, 0.0
    if family == Family.plus:
        c = separable_coherence(rs, spec.n_parties)
        return c, 0.0, c
    if family == Family.wwbar:
        return wwbar_coherence(rs)
    if family == Family.star:
        if not r_by_party:
            return star_coherence(None)
        try:
            scenario = star_scenario(r_by_party)
        except ValueError as err:
            raise UnsupportedPattern(str(err))
        if scenario == StarScenario.central_peripheral:
            peripheral = [p for p in r_by_party if p != STAR_CENTRAL][0]
            rs = [r_by_party[STAR_CENTRAL], r_by_party[peripheral]]
        return star_coherence(scenario, rs)
    raise UnsupportedPattern(f"no closed form for {family.value}")


def inertial_coherence(spec: StateSpec, pair: str = None) -> float:
    "C_T of the family member with nobody accelerated."
    return _analytic_triple(spec, {}, pair)[0]


def evaluate_analytic(spec: StateSpec, pair: str = None) -> CoherenceReport:
    "Closed-form counterpart of the numeric pipeline."
    c_total, c_global, c_local = _analytic_triple(spec, spec.r_map(), pair)
    return CoherenceReport(
        c_total=c_total,
        c_global=c_global,
        c_local=c_local,
        c_inaccessible=inaccessible_coherence(inertial_coherence(spec, pair), c_total),
        method="analytic",
    )


def saturation(spec: StateSpec, pair: str = None) -> Triple:
    "(C_T, C_G, C_L) when every accelerated party of spec has r -> infinity."
    return _analytic_triple(spec, {p: math.inf for p in spec.accelerated}, pair)


if __name__ == "__main__":

    print(ghz_coherence(math.pi / 4, [2.0]))
    print(w_n_coherence(11, [2.0] * 10), w_n_coherence(11, [2.0] * 10) / 10)
    print(wwbar_coherence([1.0]))
    print(star_coherence(StarScenario.central, [2.0]))
