#!/usr/bin/env python

"""
Polylogarithm of order -1/2 on [0, 1) and the coherence kernel

    f(r) = Li_{-1/2}(tanh^2 r) / (sinh^2 r cosh r)

Close to z = 1 the power series converges slowly, so there the
expansion about mu = log z = 0 is used instead:

    Li_s(e^mu) = Gamma(1 - s) (-mu)^(s - 1) + sum_k zeta(s - k) mu^k / k!
"""

import math
import numpy as np
import scipy.special as sp
from unruhcoh.fock.rindler import log_tanh

ORDER = -0.5

# switch from the power series to the expansion in log z above this z
SERIES_LIMIT = 0.9

# terms kept in the log expansion; |mu| < 0.106 makes term k ~ 0.017^k
LOG_TERMS = 20

# below this r the kernel uses its Taylor expansion
SMALL_R = 1e-4

# above this r the kernel equals its limit to double precision
LARGE_R = 200.0

# f(r) as r -> infinity
KERNEL_LIMIT = math.sqrt(math.pi) / 2.0


def zeta_negative(s: float) -> float:
    """
    Riemann zeta at s < 0 by the functional equation
    zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s).
    """
    return float(
        2.0 ** s
        * math.pi ** (s - 1.0)
        * math.sin(math.pi * s / 2.0)
        * sp.gamma(1.0 - s)
        * sp.zeta(1.0 - s)
    )


# zeta(-1/2 - k) / k!
_LOG_COEFFS = np.array([
    zeta_negative(ORDER - k) / math.factorial(k) for k in range(LOG_TERMS)
])


def polylog_series(z: float) -> float:
    "sum_{k>=1} sqrt(k) z^k by compensated summation until terms vanish."
    if z == 0:
        return 0.0
    nterms = int(math.ceil(math.log(1e-20) / math.log(z))) + 50
    k = np.arange(1, nterms + 1, dtype=np.float64)
    terms = np.sqrt(k) * np.exp(k * math.log(z))
    return math.fsum(terms.tolist())


def polylog_from_log(mu: float) -> float:
    """
    Li_{-1/2}(e^mu) for small negative mu from the expansion about
    mu = 0. Taking mu instead of z keeps precision when z rounds to 1.
    """
    if not mu < 0:
        raise ValueError(f"mu must be < 0, got {mu}")
    singular = sp.gamma(1.0 - ORDER) * (-mu) ** (ORDER - 1.0)
    powers = mu ** np.arange(LOG_TERMS)
    return float(singular + math.fsum((_LOG_COEFFS * powers).tolist()))


def polylog_neg_half(z: float) -> float:
    "Li_{-1/2}(z) = sum_{k>=1} sqrt(k) z^k for 0 <= z < 1."
    if not 0 <= z < 1:
        raise ValueError(f"z must be in [0, 1), got {z}")
    if z <= SERIES_LIMIT:
        return polylog_series(z)
    return polylog_from_log(math.log(z))


def kernel_f(r: float) -> float:
    """
    Factor by which acceleration scales the coherence carried by one
    party's 0/1 superposition. f(0) = 1 and f decreases to sqrt(pi)/2.
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if r < SMALL_R:
        return 1.0 + (math.sqrt(2.0) - 1.5) * r * r
    if r > LARGE_R:
        return KERNEL_LIMIT

    mu = 2.0 * log_tanh(r)
    if math.exp(mu) <= SERIES_LIMIT:
        li = polylog_series(math.exp(mu))
    else:
        li = polylog_from_log(mu)
    return li / (math.sinh(r) ** 2 * math.cosh(r))


if __name__ == "__main__":

    print(polylog_neg_half(0.5))
    print(kernel_f(2.0), kernel_f(2.0) ** 10)
    print(kernel_f(6.0), KERNEL_LIMIT)
