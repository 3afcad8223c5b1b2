#!/usr/bin/env python

"""
Sparse reduced density matrices against dense brute force.
"""

import math
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from conftest import dense_partial_trace, dense_trace_modes, dense_vector
from unruhcoh.coherence.density import (
    decohere,
    marginal_product,
    marginals,
    partial_trace,
    reduce,
    trace_out_parties,
)
from unruhcoh.analytic.polylog import kernel_f
from unruhcoh.coherence.measures import l1_total
from unruhcoh.errors import RegistryError
from unruhcoh.fock.registry import PureState, make_registry, norm_sq
from unruhcoh.fock.rindler import TruncationPolicy
from unruhcoh.states.builders import build
from unruhcoh.states.families import Family, StateSpec

PI = math.pi


def _rho(spec):
    "Accessible state of spec with region II traced out."
    built = build(spec)
    reg = built.state.registry
    return reduce(built.state, reg.visible_modes())


def test_product_state_trace():
    reg = make_registry(2)
    psi = PureState.from_dict(reg, {(0, 1): 1.0})
    rho = reduce(psi, [0])
    assert np.allclose(rho.to_dense(), [[1, 0], [0, 0]])


def test_bell_state_trace():
    reg = make_registry(2)
    psi = PureState.from_dict(reg, {(0, 0): 2 ** -0.5, (1, 1): 2 ** -0.5})
    rho = reduce(psi, [0])
    assert np.allclose(rho.to_dense(), np.eye(2) / 2, atol=1e-15)


def test_ghz_off_diagonal_blocks():
    theta, r = PI / 4, 1.0
    spec = StateSpec(
        Family.ghz, theta=theta, accel={2: r}, policy=TruncationPolicy.fixed(40))
    entries = _rho(spec).entries
    for n in range(6):
        value = entries[((0, 0, n), (1, 1, n + 1))]
        expected = (
            math.cos(theta) * math.sin(theta) * math.sqrt(n + 1)
            * math.tanh(r) ** (2 * n) / math.cosh(r) ** 3)
        assert abs(value) == pytest.approx(expected, rel=1e-12)


def _random_state(rng, parties, accelerated, n_max, nnz):
    reg = make_registry(parties, accelerated, n_max=n_max)
    full = int(np.prod(reg.dims))
    index = rng.choice(full, size=min(nnz, full), replace=False)
    labels = np.column_stack(np.unravel_index(index, reg.dims))
    amps = rng.normal(size=index.size) + 1j * rng.normal(size=index.size)
    return PureState(reg, labels, amps / np.linalg.norm(amps))


@pytest.mark.parametrize("parties, accelerated, n_max", [
    (3, (), None),
    (2, (1,), 1),
    (3, (2,), 0),
    (2, (0, 1), 0),
])
def test_reduce_matches_dense(rng, parties, accelerated, n_max):
    for _ in range(5):
        psi = _random_state(rng, parties, accelerated, n_max, nnz=10)
        vec = dense_vector(psi)
        nmodes = len(psi.registry.modes)
        for size in range(1, nmodes + 1):
            keep = sorted(rng.choice(nmodes, size=size, replace=False).tolist())
            sparse = reduce(psi, keep).to_dense()
            dense = dense_partial_trace(vec, psi.registry.dims, keep)
            assert np.max(np.abs(sparse - dense)) <= 1e-13


def test_partial_trace_matches_dense(rng):
    psi = _random_state(rng, 3, (1,), 1, nnz=20)
    rho = reduce(psi, psi.registry.visible_modes())
    dense = rho.to_dense()
    dims = rho.registry.dims
    for keep in ([0], [1], [2], [0, 2], [1, 2]):
        sparse = partial_trace(rho, keep).to_dense()
        assert np.max(np.abs(sparse - dense_trace_modes(dense, dims, keep))) <= 1e-13


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**16))
def test_reduced_states_are_physical(seed):
    rng = np.random.default_rng(seed)
    psi = _random_state(rng, 2, (1,), 1, nnz=8)
    rho = reduce(psi, psi.registry.visible_modes())
    dense = rho.to_dense()
    assert np.array_equal(dense, dense.conj().T)
    assert np.linalg.eigvalsh(dense).min() >= -1e-10
    assert rho.trace == pytest.approx(norm_sq(psi), abs=1e-12)


def test_reduce_rejects_bad_keep():
    psi = PureState.from_dict(make_registry(2), {(0, 0): 1.0})
    with pytest.raises(RegistryError):
        reduce(psi, [])
    with pytest.raises(RegistryError):
        reduce(psi, [0, 2])


def test_ghz_bipartite_reductions_are_incoherent():
    rho = _rho(StateSpec(Family.ghz, theta=PI / 5))
    for party in range(3):
        assert l1_total(trace_out_parties(rho, [party])) == 0.0


def test_w_reduction_weight():
    rho = _rho(StateSpec(Family.w_sym))
    assert l1_total(trace_out_parties(rho, [0])) == pytest.approx(2 / 3, abs=1e-15)


def test_plus_single_party_marginal():
    rho = _rho(StateSpec(Family.plus))
    single = trace_out_parties(rho, [0, 1]).to_dense()
    assert single[0, 1] == pytest.approx(0.5, abs=1e-15)


def test_trace_out_unknown_or_all_parties():
    rho = _rho(StateSpec(Family.plus))
    with pytest.raises(RegistryError):
        trace_out_parties(rho, [7])
    with pytest.raises(RegistryError):
        trace_out_parties(rho, [0, 1, 2])


def test_trace_preserved_by_party_trace():
    rho = _rho(StateSpec(Family.wwbar, accel={2: 1.3}, policy=TruncationPolicy.fixed(20)))
    assert trace_out_parties(rho, [1]).trace == pytest.approx(rho.trace, abs=1e-13)


def test_decohere():
    rho = _rho(StateSpec(Family.plus, n_parties=2))
    flat = decohere(rho)
    assert l1_total(flat) == 0.0
    assert np.allclose(decohere(flat).to_dense(), flat.to_dense())
    single = trace_out_parties(rho, [1])
    assert np.allclose(decohere(single).to_dense(), np.eye(2) / 2)


def test_marginal_product_fixed_point():
    rho = _rho(StateSpec(Family.plus, accel={1: 0.8}, policy=TruncationPolicy.fixed(10)))
    product = marginal_product(rho)
    assert np.max(np.abs(product.to_dense() - rho.to_dense())) <= 1e-13


def test_wwbar_marginals():
    rho = _rho(StateSpec(Family.wwbar))
    for part in marginals(rho):
        assert np.allclose(part.to_dense(), [[1 / 2, 1 / 3], [1 / 3, 1 / 2]])


def test_ghz_marginal_product_is_maximally_mixed():
    rho = _rho(StateSpec(Family.ghz, theta=PI / 4))
    assert np.allclose(marginal_product(rho).to_dense(), np.eye(8) / 8)


def test_marginal_product_grouping():
    rho = _rho(StateSpec(Family.wwbar))
    grouped = marginal_product(rho, [[0, 2], [1]])
    assert grouped.trace == pytest.approx(1.0)
    dense = rho.to_dense()
    dims = rho.registry.dims
    pair = dense_trace_modes(dense, dims, [0, 2])
    single = dense_trace_modes(dense, dims, [1])
    # kron gives (A, C, B) ordering; move B back to the middle
    expected = np.kron(pair, single).reshape([2] * 6).transpose(0, 2, 1, 3, 5, 4).reshape(8, 8)
    assert np.max(np.abs(grouped.to_dense() - expected)) <= 1e-13
    with pytest.raises(RegistryError):
        marginal_product(rho, [[0], [1]])


def test_two_accelerated_parties_at_large_cutoff():
    n_max = 300
    spec = StateSpec(
        Family.ghz, theta=PI / 4, accel={1: 2.0, 2: 2.0},
        policy=TruncationPolicy.fixed(n_max))
    built = build(spec)
    reg = built.state.registry
    rho = reduce(built.state, reg.visible_modes())

    # every hidden label (a, b) pairs the visible labels (0, a, b) and
    # (1, a + 1, b + 1), so rho holds at most 2^2 entries per hidden label
    nhidden = (n_max + 1) ** 2
    assert rho.dim == 2 * nhidden
    assert rho.dim <= rho.nnz <= 4 * nhidden
    assert rho.nnz < 1e-4 * rho.dim ** 2

    expected = kernel_f(2.0) ** 2
    assert l1_total(rho) == pytest.approx(
        expected, abs=10 * built.tail_bound_total + 1e-12)
