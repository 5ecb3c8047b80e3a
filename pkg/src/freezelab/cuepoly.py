"""Haar-unitary (CUE) eigenphase sampling and the landscape V = -2 log|p|.

The landscape of one matrix is evaluated on a uniform circle grid by the
direct sum of log-sine terms; maxima are located by grid search plus
bracketed refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError, ResolutionError, ShapeError

TWO_PI = 2.0 * math.pi

# grid chunk for the O(n*m) landscape sum; bounds peak memory
_EVAL_CHUNK = 4096

DEFAULT_GRID_FACTOR = 16
DEFAULT_REFINE_TOL = 1e-10

# |tan(phi/2)| guard for the Cayley-transform eigenphase extraction; beyond
# this a fresh global rotation is drawn and the extraction repeated
_CAYLEY_TAN_MAX = 1e9


@dataclass(frozen=True)
class EigenphaseSet:
    """Eigenvalue angles of one CUE matrix."""

    n: int
    phases: np.ndarray  # shape (n,), radians in [0, 2pi)
    seed_path: str = ""


@dataclass(frozen=True)
class FieldGrid:
    """Landscape values V(theta_k) on theta_k = 2 pi k / m + offset."""

    m: int
    values: np.ndarray
    source: str  # cue | fourier | zeta-surrogate
    n_param: int
    offset: float = 0.0

    def thetas(self) -> np.ndarray:
        return (np.arange(self.m) * (TWO_PI / self.m) + self.offset) % TWO_PI


def haar_unitary(n: int, stream: np.random.Generator) -> np.ndarray:
    """Haar-distributed n x n unitary: QR of a complex Ginibre matrix with
    the R-diagonal phase correction."""
    if n < 1:
        raise DomainError(f"matrix dimension must be >= 1, got {n}")
    a = (stream.standard_normal((n, n)) + 1j * stream.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(a)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _eigenphases_cayley(u: np.ndarray, stream: np.random.Generator) -> np.ndarray:
    """Eigenphases of a unitary matrix via the Cayley transform.

    i (I - U)(I + U)^{-1} is Hermitian with eigenvalues tan(phi/2); a random
    global rotation (Haar-invariant) keeps the spectrum away from the
    branch point at phi = pi.
    """
    n = u.shape[0]
    eye = np.eye(n)
    for _ in range(8):
        alpha = stream.uniform(0.0, TWO_PI)
        ur = u * np.exp(1j * alpha)
        a = 1j * np.linalg.solve(eye + ur, eye - ur)
        a = 0.5 * (a + a.conj().T)
        lam = np.linalg.eigvalsh(a)
        if np.abs(lam).max() < _CAYLEY_TAN_MAX:
            return (2.0 * np.arctan(lam) - alpha) % TWO_PI
    raise ArithmeticError("eigenphase extraction failed to avoid the branch point")


def sample_cue(n: int, stream: np.random.Generator, seed_path: str = "") -> EigenphaseSet:
    """Eigenphases of one Haar-distributed n x n unitary matrix."""
    if n < 1:
        raise DomainError(f"CUE dimension must be >= 1, got {n}")
    if n == 1:
        phases = stream.uniform(0.0, TWO_PI, size=1)
        return EigenphaseSet(1, phases, seed_path)
    u = haar_unitary(n, stream)
    phases = _eigenphases_cayley(u, stream)
    return EigenphaseSet(n, np.sort(phases), seed_path)


def field_values(phases: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """V(theta) = -2 sum_j log(2 |sin((theta - phi_j)/2)|), vectorized."""
    out = np.empty(thetas.size)
    for i in range(0, thetas.size, _EVAL_CHUNK):
        d = 0.5 * (thetas[i:i + _EVAL_CHUNK, None] - phases[None, :])
        out[i:i + _EVAL_CHUNK] = -2.0 * np.sum(np.log(2.0 * np.abs(np.sin(d))), axis=1)
    return out


def field_on_grid(phases: EigenphaseSet, m: int) -> FieldGrid:
    """Landscape of one matrix on a half-cell-shifted uniform grid."""
    n = phases.n
    if m < 4 * n:
        raise ResolutionError(f"grid size {m} below oversampling guard 4n = {4 * n}")
    offset = math.pi / m  # half-cell shift keeps grid points off eigenphases
    thetas = np.arange(m) * (TWO_PI / m) + offset
    # re-offset by a quarter cell if any grid point collides with an eigenphase
    d = np.abs((thetas[:, None] - phases.phases[None, :] + math.pi) % TWO_PI - math.pi)
    if d.min() < 1e-14:
        offset += 0.5 * math.pi / m
        thetas = np.arange(m) * (TWO_PI / m) + offset
    return FieldGrid(m, field_values(phases.phases, thetas), "cue", n, offset)


def max_log_abs_p(
    phases: EigenphaseSet,
    grid: FieldGrid,
    refine: float = DEFAULT_REFINE_TOL,
) -> Tuple[float, float]:
    """Global maximum of log|p| via grid argmin of V plus bracketed refinement.

    Returns (theta_star, max_log); the refined value never falls below the
    grid estimate.
    """
    if not refine > 0.0:
        raise DomainError(f"refinement tolerance must be positive, got {refine}")
    if grid.n_param != phases.n:
        raise ShapeError("grid was not built from these eigenphases")
    k = int(np.argmin(grid.values))
    h = TWO_PI / grid.m
    theta_k = k * h + grid.offset
    f = lambda t: float(field_values(phases.phases, np.array([t]))[0])
    res = minimize_scalar(
        f,
        bracket=(theta_k - h, theta_k, theta_k + h),
        method="golden",
        options={"xtol": refine},
    )
    grid_best = (theta_k, -0.5 * grid.values[k])
    refined = (float(res.x) % TWO_PI, -0.5 * float(res.fun))
    return refined if refined[1] >= grid_best[1] else grid_best


def covariance_estimate(
    ensemble: Sequence[FieldGrid],
    separations: Sequence[float],
) -> list[tuple[float, float, float]]:
    """Ensemble estimate of <V(theta) V(theta+Delta)> with standard errors.

    Rotation invariance is exploited by averaging over theta within each
    grid; the per-grid averages are treated as iid for the error bar.
    """
    if not ensemble:
        raise ShapeError("empty ensemble")
    m = ensemble[0].m
    n = ensemble[0].n_param
    if any(g.m != m or g.n_param != n for g in ensemble):
        raise ShapeError("grids must share m and n_param")
    h = TWO_PI / m
    out = []
    vals = np.stack([g.values for g in ensemble])  # (S, m)
    for sep in separations:
        s = sep / h
        si = int(round(s))
        if abs(s - si) > 1e-9:
            raise ShapeError(f"separation {sep} is not a multiple of 2 pi / m")
        prods = np.mean(vals * np.roll(vals, -si, axis=1), axis=1)  # per-grid mean
        est = float(prods.mean())
        stderr = float(prods.std(ddof=1) / math.sqrt(len(ensemble))) if len(ensemble) > 1 else 0.0
        out.append((float(sep), est, stderr))
    return out
