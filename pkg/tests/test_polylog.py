#!/usr/bin/env python

"""
Polylogarithm of order -1/2 and the coherence kernel.
"""

import math
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from unruhcoh.analytic.polylog import (
    KERNEL_LIMIT,
    SMALL_R,
    kernel_f,
    polylog_from_log,
    polylog_neg_half,
    polylog_series,
    zeta_negative,
)


def test_polylog_values():
    assert polylog_neg_half(0.0) == 0.0
    assert polylog_neg_half(0.5) == pytest.approx(1.3472, abs=1e-3)
    z = math.tanh(2.0) ** 2
    assert polylog_neg_half(z) == pytest.approx(44.45, abs=0.05)


@pytest.mark.parametrize("z", [-0.1, 1.0, 1.5])
def test_polylog_domain(z):
    with pytest.raises(ValueError):
        polylog_neg_half(z)


@pytest.mark.parametrize("z", np.linspace(0.85, 0.95, 11))
def test_series_and_log_expansion_agree(z):
    direct = polylog_series(z)
    expanded = polylog_from_log(math.log(z))
    assert expanded == pytest.approx(direct, rel=1e-10)


def test_zeta_at_negative_half_integers():
    assert zeta_negative(-0.5) == pytest.approx(-0.2078862250, rel=1e-9)
    assert zeta_negative(-1.5) == pytest.approx(-0.0254852019, rel=1e-9)
    assert zeta_negative(-2.5) == pytest.approx(0.0085169287, rel=1e-8)


def test_kernel_values():
    assert kernel_f(0.0) == 1.0
    assert abs(kernel_f(1e-6) - 1.0) <= 1e-6
    assert kernel_f(2.0) == pytest.approx(0.8988, abs=5e-4)
    assert kernel_f(2.0) ** 10 == pytest.approx(0.3439, abs=1e-3)
    assert abs(kernel_f(6.0) - math.sqrt(math.pi) / 2) <= 1e-3
    assert kernel_f(500.0) == KERNEL_LIMIT


def test_kernel_matches_definition():
    for r in (0.3, 1.0, 2.0):
        z = math.tanh(r) ** 2
        expected = polylog_neg_half(z) / (math.sinh(r) ** 2 * math.cosh(r))
        assert kernel_f(r) == pytest.approx(expected, rel=1e-12)


def test_small_r_series_matches_direct():
    r = 1e-3
    series = 1.0 + (math.sqrt(2.0) - 1.5) * r * r
    assert kernel_f(r) == pytest.approx(series, rel=1e-10)
    below, above = kernel_f(SMALL_R * 0.999), kernel_f(SMALL_R * 1.001)
    assert below == pytest.approx(above, abs=1e-10)


def test_kernel_monotone_on_grid():
    values = np.array([kernel_f(r) for r in np.linspace(0.01, 6.0, 600)])
    assert np.all(np.diff(values) < 0)


@settings(max_examples=100, deadline=None)
@given(
    r1=st.floats(min_value=0.0, max_value=8.0),
    r2=st.floats(min_value=0.0, max_value=8.0),
)
def test_kernel_bounds(r1, r2):
    f1, f2 = kernel_f(r1), kernel_f(r2)
    assert KERNEL_LIMIT - 1e-12 <= f1 <= 1.0
    if r1 < r2 - 1e-3:
        assert f1 >= f2
