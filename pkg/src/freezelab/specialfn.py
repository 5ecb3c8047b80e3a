"""Real special-function kernel: log-Gamma, Gamma, log-Barnes-G, K0/K1.

Every prediction formula in the package routes through these four
functions, so they are kept self-contained (stdlib ``math`` only) with a
single code path per function.  All accuracy oracles (quadrature, series
seeds) live in the test suite, not here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PoleError, UnsupportedOrderError

# log of the Glaisher-Kinkelin constant, 1/12 - zeta'(-1)
_LN_GLAISHER = 0.24875447703378426

# Barnes recurrence is applied upward until the argument reaches this value,
# where the asymptotic expansion is accurate to ~1e-15.
_BARNES_ASYMPTOTIC_X = 32.0

# switchover between ascending series and continued-fraction branches of K
_BESSEL_K_SWITCH = 2.0


@dataclass(frozen=True)
class Constants:
    """Named constants used across prediction formulas."""

    euler_gamma: float = 0.5772156649015329
    pi: float = math.pi
    target_variance: float = math.pi * math.pi / 3.0


CONSTANTS = Constants()


def ln_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def gamma_fn(x: float) -> float:
    """Gamma(x) on the real line, rejecting the poles at 0, -1, -2, ..."""
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(x)
    if x > 0.0:
        try:
            return math.exp(ln_gamma(x))
        except OverflowError:
            return math.inf
    # reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    s = math.sin(math.pi * x)
    try:
        return math.pi / (s * math.exp(math.lgamma(1.0 - x)))
    except OverflowError:
        return math.copysign(0.0, s)


def ln_barnes_g(x: float) -> float:
    """log G(x) for x > 0, G the Barnes function with G(x+1) = Gamma(x) G(x).

    The argument is pushed upward through the recurrence into the region
    where the asymptotic expansion of log G applies.
    """
    if not x > 0.0:
        raise DomainError(f"ln_barnes_g requires x > 0, got {x}")
    # Anchor the asymptotic evaluation at y = 32 + frac(x): arguments one
    # apart share the anchor, so the recurrence G(x+1) = Gamma(x) G(x) holds
    # to rounding instead of accumulating asymptotic-series noise.
    y = _BARNES_ASYMPTOTIC_X + (x - math.floor(x))
    base = _ln_barnes_g_asymptotic(y)
    if x <= y:
        # log G(x) = log G(y) - sum_{j=0}^{m-1} log Gamma(x + j), x + m = y
        m = round(y - x)
        return base - math.fsum(math.lgamma(x + j) for j in range(m))
    # log G(x) = log G(y) + sum_{j=0}^{k-1} log Gamma(y + j), y + k = x
    k = round(x - y)
    return base + math.fsum(math.lgamma(y + j) for j in range(k))


def _ln_barnes_g_asymptotic(y: float) -> float:
    # expansion of log G(1+z) for large z; y = 1 + z
    z = y - 1.0
    lz = math.log(z)
    out = (
        0.25 * z * z
        + z * math.lgamma(z + 1.0)
        - (0.5 * z * z + 0.5 * z + 1.0 / 12.0) * lz
        - _LN_GLAISHER
    )
    z2 = z * z
    # B_{2k+2} / (2k (2k+1) (2k+2) z^{2k}), k = 1..5
    out += (
        -1.0 / 720.0 / z2
        + (1.0 / 5040.0) / z2**2
        - (1.0 / 10080.0) / z2**3
        + (1.0 / 9504.0) / z2**4
        - (691.0 / 3603600.0) / z2**5
    )
    return out


def bessel_k(order: int, x: float) -> float:
    """Modified Bessel function K0(x) or K1(x), x > 0.

    Ascending series below x = 2; above, the continued-fraction evaluation
    of the large-argument form (Temme/Thompson-Barnett), which converges to
    machine precision wherever the raw asymptotic series stalls.
    """
    if order not in (0, 1):
        raise UnsupportedOrderError(f"only orders 0 and 1 are supported, got {order}")
    if not x > 0.0:
        raise DomainError(f"bessel_k requires x > 0, got {x}")
    if x <= _BESSEL_K_SWITCH:
        k0, k1 = _bessel_k_series(x)
    else:
        k0, k1 = _bessel_k_cf(x)
    return k0 if order == 0 else k1


def _bessel_k_series(x: float) -> tuple[float, float]:
    # A&S 9.6.12 / 9.6.11 ascending series for K0 and K1
    gamma = CONSTANTS.euler_gamma
    q = 0.25 * x * x
    lh = math.log(0.5 * x)

    # K0 = -(log(x/2) + gamma) I0 + sum_{k>=1} H_k q^k / (k!)^2
    term = 1.0
    i0 = 1.0
    s0 = 0.0
    hk = 0.0
    for k in range(1, 60):
        term *= q / (k * k)
        i0 += term
        hk += 1.0 / k
        s0 += term * hk
        if term < 1e-18 * i0:
            break
    k0 = -(lh + gamma) * i0 + s0

    # K1 = log(x/2) I1 + 1/x - (x/4) sum_k [psi(k+1)+psi(k+2)] q^k / (k! (k+1)!)
    term = 1.0  # q^k / (k! (k+1)!) at k=0
    i1 = 0.5 * x  # builds I1 = (x/2) sum q^k/(k!(k+1)!)
    psi_sum = -2.0 * gamma + 1.0  # psi(1) + psi(2)
    s1 = term * psi_sum
    i1_series = 1.0
    for k in range(1, 60):
        term *= q / (k * (k + 1))
        i1_series += term
        psi_sum += 1.0 / k + 1.0 / (k + 1)
        s1 += term * psi_sum
        if term < 1e-18 * i1_series:
            break
    i1 = 0.5 * x * i1_series
    k1 = lh * i1 + 1.0 / x - 0.25 * x * s1
    return k0, k1


def _bessel_k_cf(x: float) -> tuple[float, float]:
    # Temme's continued fraction CF2 at mu = 0 (cf. Thompson & Barnett)
    eps = 1e-16
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1 = 0.0
    q2 = 1.0
    a1 = 0.25
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, 400):
        a -= 2.0 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < eps:
            break
    h *= a1
    k0 = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) / s
    k1 = k0 * (x + 0.5 - h) / x
    return k0, k1
