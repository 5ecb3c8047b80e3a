"""Statistical mechanics of one landscape: partition functions, free
energies, moment estimators and their exact Toeplitz-determinant oracles.

The moment identity <Z^k> = Z_e^k Gamma(1 - k beta^2) (valid for
k beta^2 < 1) ties the Monte Carlo estimates to the Fisher-Hartwig
asymptotics; the heavy tails it implies are handled with a median-of-means
estimator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import toeplitz

from .cuepoly import FieldGrid
from .errors import (
    AggregationError,
    DivergenceError,
    DomainError,
    PrecisionError,
    SizeError,
)
from .specialfn import ln_barnes_g, ln_gamma

_TOEPLITZ_N_MAX = 512
_SYMBOL_FFT_MIN = 4096
_SYMBOL_FFT_MAX = 2**18


@dataclass(frozen=True)
class ThermoSample:
    """One (beta, Z, ln Z) record for a single landscape.

    ln_z is the authoritative field; z may be inf when exp(ln_z) overflows.
    """

    beta: float
    z: float
    ln_z: float
    n_param: int


@dataclass(frozen=True)
class FreezeCurve:
    """Scaled-free-energy scan -f(beta) with standard errors."""

    betas: np.ndarray
    minus_f: np.ndarray
    stderr: np.ndarray
    n_param: int
    samples: int


@dataclass(frozen=True)
class MomentReport:
    """Monte Carlo moment estimate with optional exact and asymptotic values."""

    k: int
    beta: float
    estimate: float
    error_bar: float
    exact_small_n: Optional[float] = None
    asymptotic: Optional[float] = None


def ln_partition_values(grid: FieldGrid, betas: np.ndarray) -> np.ndarray:
    """ln Z at several betas for one landscape, by max-shifted log-sum-exp."""
    v = grid.values
    vmin = v.min()
    ln_base = math.log(grid.n_param / grid.m)
    out = np.empty(betas.size)
    for i, b in enumerate(betas):
        w = -b * (v - vmin)
        out[i] = ln_base - b * vmin + math.log(np.exp(w).sum())
    return out


def partition_function(grid: FieldGrid, beta: float) -> ThermoSample:
    """Z = (n/m) sum_k exp(-beta V_k), the periodic trapezoidal rule."""
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    ln_z = float(ln_partition_values(grid, np.array([beta]))[0])
    z = math.exp(ln_z) if ln_z < 709.0 else math.inf
    return ThermoSample(beta, z, ln_z, grid.n_param)


def scaled_free_energy(samples: Sequence[ThermoSample]) -> Tuple[float, float]:
    """minus_f = mean(ln Z) / (beta ln N) with its standard error."""
    if not samples:
        raise AggregationError("no thermo samples")
    betas = {s.beta for s in samples}
    ns = {s.n_param for s in samples}
    if len(betas) != 1 or len(ns) != 1:
        raise AggregationError(f"mixed beta {betas} or n_param {ns}")
    beta = betas.pop()
    n = ns.pop()
    if n < 3:
        raise AggregationError(f"n_param must be >= 3, got {n}")
    lnz = np.array([s.ln_z for s in samples])
    denom = beta * math.log(n)
    minus_f = float(lnz.mean()) / denom
    stderr = float(lnz.std(ddof=1) / math.sqrt(lnz.size)) / denom if lnz.size > 1 else 0.0
    return minus_f, stderr


def freeze_curve_from_lnz(lnz: np.ndarray, betas: np.ndarray, n: int) -> FreezeCurve:
    """Assemble a FreezeCurve from an (S, B) array of ln Z values."""
    denom = betas * math.log(n)
    minus_f = lnz.mean(axis=0) / denom
    stderr = lnz.std(axis=0, ddof=1) / math.sqrt(lnz.shape[0]) / denom
    return FreezeCurve(np.asarray(betas, dtype=float), minus_f, stderr, n, lnz.shape[0])


def freeze_scan(model: str, n: int, betas: Sequence[float], samples: int,
                stream_factory) -> FreezeCurve:
    """Freezing-curve scan with common random numbers across betas.

    One landscape per sample is reused for every beta.  ``stream_factory(i)``
    must return the rng stream for sample i.
    """
    from . import cuepoly, fourierfield  # local import avoids a cycle at module load

    betas = np.asarray(list(betas), dtype=float)
    if betas.size == 0 or np.any(betas <= 0) or np.any(np.diff(betas) <= 0):
        raise DomainError("betas must be strictly increasing and positive")
    lnz = np.empty((samples, betas.size))
    m = 16 * n
    for i in range(samples):
        st = stream_factory(i)
        if model == "cue":
            grid = cuepoly.field_on_grid(cuepoly.sample_cue(n, st), m)
        elif model == "fourier":
            grid = fourierfield.fourier_field_on_grid(
                fourierfield.sample_fourier_field(n, st), m)
        else:
            raise DomainError(f"unknown model {model!r}")
        lnz[i] = ln_partition_values(grid, betas)
    return freeze_curve_from_lnz(lnz, betas, n)


def ln_z_e(n: int, beta: float) -> float:
    """log of the characteristic scale Z_e = N^{1+b^2} G^2(1+b) / (G(1+2b) Gamma(1-b^2))."""
    b2 = beta * beta
    if not b2 < 1.0:
        raise DivergenceError(f"Z_e requires beta^2 < 1, got beta = {beta}")
    return (
        (1.0 + b2) * math.log(n)
        + 2.0 * ln_barnes_g(1.0 + beta)
        - ln_barnes_g(1.0 + 2.0 * beta)
        - ln_gamma(1.0 - b2)
    )


def moment_predicted(n: int, beta: float, k: int) -> float:
    """Asymptotic moment Z_e^k Gamma(1 - k beta^2), for k beta^2 < 1."""
    if k < 1:
        raise DomainError(f"moment order k must be >= 1, got {k}")
    kb2 = k * beta * beta
    if not kb2 < 1.0:
        raise DivergenceError(
            f"moment diverges: k beta^2 = {kb2} >= 1 (k={k}, beta={beta})"
        )
    return math.exp(k * ln_z_e(n, beta) + ln_gamma(1.0 - kb2))


def median_of_means(values: np.ndarray, n_boot: int = 500,
                    boot_seed: int = 20120601) -> Tuple[float, float]:
    """Median of ceil(sqrt(count)) block means, with a bootstrap error bar.

    Blocks are assigned by sample index, so the estimate is independent of
    how samples were distributed over workers.
    """
    count = values.size
    n_blocks = math.ceil(math.sqrt(count))
    edges = np.linspace(0, count, n_blocks + 1).astype(int)
    block_means = np.array([values[a:b].mean() for a, b in zip(edges[:-1], edges[1:])])
    est = float(np.median(block_means))
    rng = np.random.default_rng(boot_seed)
    boots = np.median(
        rng.choice(block_means, size=(n_boot, n_blocks), replace=True), axis=1
    )
    return est, float(boots.std(ddof=1))


def moment_estimate(z_samples: Sequence[ThermoSample], k: int) -> MomentReport:
    """Median-of-means estimate of <Z^k> with exact/asymptotic companions."""
    if k < 1:
        raise DomainError(f"moment order k must be >= 1, got {k}")
    if not z_samples:
        raise AggregationError("no partition-function samples")
    betas = {s.beta for s in z_samples}
    ns = {s.n_param for s in z_samples}
    if len(betas) != 1 or len(ns) != 1:
        raise AggregationError(f"mixed beta {betas} or n_param {ns}")
    beta = betas.pop()
    n = ns.pop()
    zk = np.array([math.exp(k * s.ln_z) for s in z_samples])
    est, err = median_of_means(zk)
    exact = None
    if k == 1 and n <= _TOEPLITZ_N_MAX:
        # rotation invariance: <Z> = N * D_N(beta; single singularity)
        exact = n * toeplitz_moment(n, beta, [0.0])
    asym = None
    if k * beta * beta < 1.0:
        asym = moment_predicted(n, beta, k)
    return MomentReport(k, beta, est, err, exact, asym)


def _symbol_coefficients(beta: float, thetas: np.ndarray, n_coef: int) -> np.ndarray:
    """Fourier coefficients M_j, |j| < n_coef, of prod_p (2-2cos(phi-theta_p))^beta,
    by an FFT whose length is doubled until the coefficients converge."""
    length = _SYMBOL_FFT_MIN
    prev = None
    while length <= _SYMBOL_FFT_MAX:
        # half-cell-shifted nodes keep the grid off the symbol's zeros
        phi = (np.arange(length) + 0.5) * (2.0 * math.pi / length)
        ln_f = np.zeros(length)
        for tp in thetas:
            with np.errstate(divide="ignore"):
                ln_f += beta * np.log(2.0 - 2.0 * np.cos(phi - tp))
        f = np.exp(ln_f)
        c = np.fft.fft(f) / length
        js = np.arange(-(n_coef - 1), n_coef)
        # M_j = conj(fft)[j]/L times the phase of the half-cell shift
        coef = np.conj(c[js % length]) * np.exp(1j * js * math.pi / length)
        # aliasing error decays like length^-(1+2 beta) per singularity, so
        # successive doublings shrink the difference geometrically
        if prev is not None and np.max(np.abs(coef - prev)) <= 1e-8:
            return coef
        prev = coef
        length *= 2
    raise PrecisionError(
        f"symbol coefficients did not converge by FFT length {_SYMBOL_FFT_MAX}"
    )


def _closed_form_coefficients(beta: float, n_coef: int) -> np.ndarray:
    """k=1 symbol coefficients of (2 - 2 cos phi)^beta:
    M_j = (-1)^j Gamma(1+2b) / (Gamma(1+b+j) Gamma(1+b-j))."""
    js = np.arange(-(n_coef - 1), n_coef)
    out = np.empty(js.size)
    lg2b = ln_gamma(1.0 + 2.0 * beta)
    for i, j in enumerate(js):
        ja = abs(int(j))
        sign = -1.0 if ja % 2 else 1.0
        x = 1.0 + beta - ja
        if x > 0.0:
            out[i] = sign * math.exp(lg2b - ln_gamma(1.0 + beta + ja) - ln_gamma(x))
        elif x == math.floor(x):
            out[i] = 0.0  # 1/Gamma at a pole
        else:
            # reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
            out[i] = (
                sign
                * math.exp(lg2b - ln_gamma(1.0 + beta + ja) + ln_gamma(1.0 - x))
                * math.sin(math.pi * x) / math.pi
            )
    return out


def toeplitz_moment(n: int, beta: float, thetas: Sequence[float]) -> float:
    """Toeplitz determinant ratio D_n(beta)/D_n(0) for the singular symbol
    with power-type zeros at the given angles.

    Closed-form coefficients are used for a single singularity; otherwise the
    symbol is transformed numerically.
    """
    if n > _TOEPLITZ_N_MAX:
        raise SizeError(f"dense determinant budget is n <= {_TOEPLITZ_N_MAX}, got {n}")
    thetas = np.asarray(list(thetas), dtype=float)
    if thetas.size < 1:
        raise DomainError("need at least one singularity angle")
    if beta == 0.0:
        return 1.0
    if thetas.size == 1:
        coef = _closed_form_coefficients(beta, n).astype(complex)
        # rotation invariance: a single singularity's position drops out
    else:
        coef = _symbol_coefficients(beta, thetas, n)
    mid = n - 1
    col = coef[mid:mid + n]        # M_{i-j} for i-j = 0..n-1
    row = coef[mid::-1][:n]        # M_{i-j} for i-j = 0..-(n-1)
    mat = toeplitz(col, row)
    sign, logdet = np.linalg.slogdet(mat)
    if abs(abs(sign) - 1.0) > 1e-6:
        raise PrecisionError("singular Toeplitz matrix in determinant evaluation")
    return float(np.real(sign) * math.exp(np.real(logdet)))


def fisher_hartwig_ratio(n: int, beta: float) -> float:
    """D_n(beta) over its Fisher-Hartwig asymptote n^{b^2} G^2(1+b)/G(1+2b)."""
    if beta == 0.0:
        return 1.0
    d = toeplitz_moment(n, beta, [0.0])
    ln_asym = (
        beta * beta * math.log(n)
        + 2.0 * ln_barnes_g(1.0 + beta)
        - ln_barnes_g(1.0 + 2.0 * beta)
    )
    return d / math.exp(ln_asym)


def min_energy_from_partition(grid: FieldGrid, beta: float = 8.0) -> float:
    """-(1/beta) ln Z, the free-energy bridge to the landscape minimum."""
    return -ln_partition_values(grid, np.array([beta]))[0] / beta
