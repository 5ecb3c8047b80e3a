"""Circular 1/f surrogate landscape: truncated random Fourier series.

V(theta) = sum_{n=1}^{N} (1/sqrt(n)) [v_n e^{-i n theta} + c.c.] with iid
standard complex Gaussian coefficients v_n.  The truncation N plays the
role of the matrix dimension of the CUE landscape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from .cuepoly import DEFAULT_REFINE_TOL, FieldGrid, TWO_PI
from .errors import DomainError, ResolutionError


@dataclass(frozen=True)
class FourierField:
    """Truncated 1/f series with its complex Gaussian coefficients v_1..v_N."""

    n_modes: int
    coefficients: np.ndarray  # shape (n_modes,), complex


def sample_fourier_field(n_modes: int, stream: np.random.Generator) -> FourierField:
    """iid standard complex Gaussian coefficients (Re and Im variance 1/2)."""
    if n_modes < 1:
        raise DomainError(f"n_modes must be >= 1, got {n_modes}")
    v = (stream.standard_normal(n_modes) + 1j * stream.standard_normal(n_modes)) / math.sqrt(2.0)
    return FourierField(n_modes, v)


def evaluate(field: FourierField, thetas: np.ndarray) -> np.ndarray:
    """Direct summation of the truncated series at arbitrary angles."""
    n = np.arange(1, field.n_modes + 1)
    ph = np.exp(-1j * np.outer(thetas, n))
    return 2.0 * np.real(ph @ (field.coefficients / np.sqrt(n)))


def fourier_field_on_grid(field: FourierField, m: int) -> FieldGrid:
    """Evaluate the series on a uniform grid by an inverse DFT of the padded
    coefficient sequence."""
    n_modes = field.n_modes
    if m < 2 * n_modes + 2:
        raise ResolutionError(
            f"grid size {m} below Nyquist guard 2*n_modes+2 = {2 * n_modes + 2}"
        )
    n = np.arange(1, n_modes + 1)
    c = np.zeros(m, dtype=complex)
    # V(theta_k) = 2 Re sum_n conj(v_n)/sqrt(n) e^{+i n theta_k}
    c[1:n_modes + 1] = np.conj(field.coefficients) / np.sqrt(n)
    values = 2.0 * np.real(m * np.fft.ifft(c))
    return FieldGrid(m, values, "fourier", n_modes, 0.0)


def truncated_covariance(n_modes: int, delta: float) -> float:
    """Exact ensemble covariance of the truncated series, sum 2 cos(n d)/n."""
    n = np.arange(1, n_modes + 1)
    return float(np.sum(2.0 * np.cos(n * delta) / n))


def min_on_circle(
    field: FourierField,
    grid: FieldGrid,
    refine: float = DEFAULT_REFINE_TOL,
) -> Tuple[float, float]:
    """Global minimum of V, grid argmin plus bracketed refinement.

    Returns (theta_star, min_value); the counterpart of the CUE landscape's
    max of log|p| (which is -min V / 2).
    """
    if not refine > 0.0:
        raise DomainError(f"refinement tolerance must be positive, got {refine}")
    k = int(np.argmin(grid.values))
    h = TWO_PI / grid.m
    theta_k = k * h + grid.offset
    f = lambda t: float(evaluate(field, np.array([t]))[0])
    res = minimize_scalar(
        f,
        bracket=(theta_k - h, theta_k, theta_k + h),
        method="golden",
        options={"xtol": refine},
    )
    if float(res.fun) <= grid.values[k]:
        return float(res.x) % TWO_PI, float(res.fun)
    return theta_k, float(grid.values[k])
