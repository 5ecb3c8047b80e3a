"""Critical-line machinery at desk heights.

Z(t) is evaluated point-wise by the Riemann-Siegel main sum plus a frozen
table of correction terms (t >= 30), or by an accelerated alternating
(eta-function) series below; on top of that sit per-interval maxima,
partition functions and the value-covariance scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import loggamma

from ._rs_tables import CHEB, K_MAX
from .errors import DomainError, PrecisionError
from .thermo import ThermoSample

TWO_PI = 2.0 * math.pi

# height window where 64-bit phase arithmetic keeps the main sum trustworthy
T_MAX = 1.0e8
RS_T_MIN = 30.0
THETA_SERIES_T_MIN = 10.0

GRID_PER_N = 16  # grid points per unit of n_assoc (~16 per mean zero spacing)
DEFAULT_REFINE_TOL = 1e-8


@dataclass(frozen=True)
class ZetaPoint:
    """One critical-line evaluation: real Z(t) and |zeta(1/2+it)| = |Z(t)|."""

    t: float
    z_val: float
    theta_val: float
    zeta_abs: float


@dataclass(frozen=True)
class ZetaInterval:
    """Maximum of |zeta| over [t_start, t_start + 2 pi]."""

    t_start: float
    max_abs: float
    argmax_t: float
    n_assoc: int   # nearest integer to ln(t_start)
    n_t: float     # N_T = ln(t_start / 2 pi)


def rs_theta(t: float) -> float:
    """Riemann-Siegel theta by its asymptotic series, t >= 10."""
    if t < THETA_SERIES_T_MIN:
        raise DomainError(f"rs_theta series is used only for t >= 10, got {t}")
    return _rs_theta_series(t)


def _rs_theta_series(t):
    t = np.asarray(t, dtype=float)
    out = (
        0.5 * t * np.log(t / TWO_PI)
        - 0.5 * t
        - math.pi / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t**3)
        + 31.0 / (80640.0 * t**5)
    )
    return out if out.ndim else float(out)


def _theta_exact(t: float) -> float:
    # arg Gamma(1/4 + i t/2) - (t/2) ln pi, valid at any height
    return float(np.imag(loggamma(0.25 + 0.5j * t)) - 0.5 * t * math.log(math.pi))


def _rs_z_batch(ts: np.ndarray) -> np.ndarray:
    """Vectorized Riemann-Siegel Z(t) for an array of heights >= RS_T_MIN."""
    ts = np.asarray(ts, dtype=float)
    a = np.sqrt(ts / TWO_PI)
    nmain = np.floor(a).astype(int)
    z = np.empty_like(ts)
    theta = _rs_theta_series(ts)
    for nv in np.unique(nmain):
        sel = nmain == nv
        t_sel = ts[sel]
        ns = np.arange(1, nv + 1)
        phases = theta[sel][:, None] - t_sel[:, None] * np.log(ns)[None, :]
        main = 2.0 * (np.cos(phases) / np.sqrt(ns)[None, :]).sum(axis=1)
        p = a[sel] - nv
        zz = 1.0 - 2.0 * p
        corr = np.zeros_like(t_sel)
        apow = np.sqrt(1.0 / a[sel])
        for k in range(K_MAX + 1):
            corr += np.polynomial.chebyshev.chebval(zz, CHEB[k]) * apow
            apow /= a[sel]
        sign = -1.0 if nv % 2 == 0 else 1.0  # (-1)^(N-1)
        z[sel] = main + sign * corr
    return z


def _eta_weights(n: int) -> np.ndarray:
    """Chebyshev-accelerated alternating-series weights w_k in (0, 1]."""
    # c_i = (n+i-1)! 4^i / ((n-i)! (2i)!), normalized tail ratios
    i = np.arange(n + 1)
    logc = (
        [math.lgamma(n + ii) - math.lgamma(n - ii + 1) - math.lgamma(2 * ii + 1)
         + ii * math.log(4.0) for ii in i]
    )
    logc = np.array(logc)
    c = np.exp(logc - logc.max())
    total = c.sum()
    tail = np.concatenate([np.cumsum(c[::-1])[::-1][1:], [0.0]])  # sum_{i>k} c_i
    return (tail / total)[:n]


def _eta_zeta(t: float, n: int | None = None) -> complex:
    """zeta(1/2 + it) via the accelerated eta series (any t >= 0)."""
    if n is None:
        n = int(96 + math.ceil((0.5 * math.pi * t + 40.0) / 1.76))
    w = _eta_weights(n)
    k = np.arange(1, n + 1)
    s = 0.5 + 1j * t
    # eta(s) = sum_k (-1)^{k-1} w_{k-1} k^{-s}   (w carries the tail correction)
    signs = np.where(k % 2 == 1, 1.0, -1.0)
    eta = np.sum(signs * w * np.exp(-s * np.log(k)))
    return eta / (1.0 - 2.0 ** (1.0 - s))


def zeta_abs_halfline(t: float) -> ZetaPoint:
    """|zeta(1/2+it)| with the real rotated value Z(t).

    Riemann-Siegel for t >= 30, accelerated eta series below; heights
    beyond the 64-bit phase window are rejected loudly.
    """
    if not 0.0 <= t <= T_MAX:
        raise PrecisionError(
            f"t = {t} outside the supported window [0, {T_MAX:.0e}]"
        )
    if t >= RS_T_MIN:
        zv = float(_rs_z_batch(np.array([t]))[0])
        th = float(_rs_theta_series(t))
    else:
        zeta = _eta_zeta(t)
        th = _theta_exact(t)
        zv = float(np.real(np.exp(1j * th) * zeta))
    return ZetaPoint(t, zv, th, abs(zv))


def _interval_grid(t_start: float) -> Tuple[np.ndarray, np.ndarray, int]:
    n_assoc = int(round(math.log(t_start)))
    npts = int(math.ceil(GRID_PER_N * n_assoc))
    ts = t_start + (np.arange(npts) + 0.5) * (TWO_PI / npts)
    return ts, _rs_z_batch(ts), n_assoc


def interval_max(t_start: float, refine: float = DEFAULT_REFINE_TOL) -> ZetaInterval:
    """Maximum of |zeta| over [t_start, t_start+2pi], by grid search plus
    bracketed refinement of the three best local cells."""
    if t_start < 100.0:
        raise DomainError(f"interval_max requires t_start >= 100, got {t_start}")
    ts, zv, n_assoc = _interval_grid(t_start)
    av = np.abs(zv)
    npts = av.size
    h = TWO_PI / npts
    # local maxima, take the three best cells
    order = np.argsort(av)[::-1]
    best_t, best_v = float(ts[order[0]]), float(av[order[0]])
    seen = []
    for idx in order:
        if any(abs(idx - j) <= 1 for j in seen):
            continue
        seen.append(int(idx))
        if len(seen) == 3:
            break
    f = lambda x: -abs(float(_rs_z_batch(np.array([x]))[0]))
    for idx in seen:
        lo = max(t_start, ts[idx] - h)
        hi = min(t_start + TWO_PI, ts[idx] + h)
        res = minimize_scalar(f, bounds=(lo, hi), method="bounded",
                              options={"xatol": refine})
        if -res.fun > best_v:
            best_v, best_t = float(-res.fun), float(res.x)
    return ZetaInterval(t_start, best_v, best_t, n_assoc,
                        math.log(t_start / TWO_PI))


def zeta_partition(t_start: float, beta: float) -> ThermoSample:
    """z_beta(T) = (N_T / 2 pi) integral_T^{T+2pi} |zeta|^{2 beta} dy, by the
    trapezoidal rule on the interval grid density."""
    if not beta > 0.0:
        raise DomainError(f"beta must be positive, got {beta}")
    ts, zv, n_assoc = _interval_grid(t_start)
    n_t = math.log(t_start / TWO_PI)
    ln_vals = 2.0 * beta * np.log(np.abs(zv))
    vmax = ln_vals.max()
    ln_z = math.log(n_t / ts.size) + vmax + math.log(np.exp(ln_vals - vmax).sum())
    z = math.exp(ln_z) if ln_z < 709.0 else math.inf
    return ThermoSample(beta, z, ln_z, int(round(n_t)))


def ln_zeta_partition_values(t_start: float, betas: np.ndarray) -> Tuple[np.ndarray, float]:
    """ln z_beta(T) for several betas sharing one interval grid."""
    ts, zv, _ = _interval_grid(t_start)
    n_t = math.log(t_start / TWO_PI)
    ln_abs = np.log(np.abs(zv))
    out = np.empty(betas.size)
    for i, b in enumerate(betas):
        lv = 2.0 * b * ln_abs
        vmax = lv.max()
        out[i] = math.log(n_t / ts.size) + vmax + math.log(np.exp(lv - vmax).sum())
    return out, n_t


def table1_experiment(t_center: float, intervals: int,
                      max_abs_values: Sequence[float] | None = None
                      ) -> Tuple[float, float, float]:
    """Ratio of the observed mean interval maximum to the model mean, for
    c = 3/2 and c = 1/2.  Returns (ratio_c32, ratio_c12, data_mean)."""
    from .extremes import model_mean_delta

    if max_abs_values is None:
        starts = t_center + (np.arange(intervals) - intervals / 2) * TWO_PI
        max_abs_values = [interval_max(float(s)).max_abs for s in starts]
    data_mean = float(np.mean(max_abs_values))
    n_assoc = int(round(math.log(t_center)))
    return (
        data_mean / model_mean_delta(n_assoc, 1.5),
        data_mean / model_mean_delta(n_assoc, 0.5),
        data_mean,
    )


def covariance_scan(t_center: float, window: float,
                    separations: Sequence[float],
                    spacing: float | None = None) -> list[tuple[float, float, float]]:
    """Estimates of <V(t) V(t+x)> over the window, V = -2 log|zeta| minus
    its window mean, with block standard errors."""
    if window >= t_center:
        raise DomainError("window must be small compared to t_center")
    seps = np.asarray(list(separations), dtype=float)
    if np.any(seps <= 0):
        raise DomainError("separations must be positive")
    if seps.max() >= window:
        raise DomainError(
            f"largest separation {seps.max()} exceeds the window {window}"
        )
    if spacing is None:
        spacing = max(min(seps) / 4.0, window / 2**20)
    npts = int(window / spacing)
    ts = t_center - window / 2.0 + np.arange(npts) * spacing
    vals = np.empty(npts)
    chunk = 4096
    for i in range(0, npts, chunk):
        vals[i:i + chunk] = _rs_z_batch(ts[i:i + chunk])
    v = -2.0 * np.log(np.abs(vals))
    v -= v.mean()
    out = []
    n_blocks = 16
    for sep in seps:
        lag = int(round(sep / spacing))
        if lag >= npts:
            raise DomainError(f"separation {sep} exceeds the window")
        prods = v[:npts - lag] * v[lag:npts]
        blocks = np.array_split(prods, n_blocks)
        means = np.array([b.mean() for b in blocks])
        out.append((float(lag * spacing), float(prods.mean()),
                    float(means.std(ddof=1) / math.sqrt(n_blocks))))
    return out
