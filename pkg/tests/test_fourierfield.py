"""Truncated 1/f surrogate field: transform-path correctness, exact
covariance, and minimum refinement."""

import math

import numpy as np
import pytest

from freezelab.cuepoly import TWO_PI
from freezelab.errors import DomainError, ResolutionError
from freezelab.fourierfield import (
    FourierField,
    evaluate,
    fourier_field_on_grid,
    min_on_circle,
    sample_fourier_field,
    truncated_covariance,
)
from freezelab.rng import child_stream


def _stream(i=0):
    return child_stream(88, "test", i)


def test_single_mode_is_cosine():
    field = FourierField(1, np.array([1.0 + 0.0j]))
    grid = fourier_field_on_grid(field, 64)
    expected = 2.0 * np.cos(grid.thetas())
    assert np.max(np.abs(grid.values - expected)) < 1e-12


def test_transform_matches_direct_sum():
    field = sample_fourier_field(40, _stream(1))
    grid = fourier_field_on_grid(field, 128)
    idx = np.array([0, 3, 17, 31, 50, 64, 90, 100, 113, 120, 127,
                    1, 2, 5, 9, 77])
    direct = evaluate(field, grid.thetas()[idx])
    assert np.max(np.abs(grid.values[idx] - direct)) < 1e-10


def test_nyquist_guard():
    field = sample_fourier_field(40, _stream(2))
    with pytest.raises(ResolutionError):
        fourier_field_on_grid(field, 80)


def test_sample_domain():
    with pytest.raises(DomainError):
        sample_fourier_field(0, _stream(3))


def test_coefficient_moments():
    # Re and Im each have variance 1/2
    field = sample_fourier_field(4000, _stream(4))
    v = field.coefficients
    assert abs(np.var(v.real) - 0.5) < 0.05
    assert abs(np.var(v.imag) - 0.5) < 0.05
    assert abs(np.mean(v.real)) < 0.05


def test_covariance_at_zero_is_harmonic_sum():
    n = 64
    expected = 2.0 * sum(1.0 / k for k in range(1, n + 1))
    assert math.isclose(truncated_covariance(n, 0.0), expected, rel_tol=1e-12)


def test_ensemble_covariance_matches_exact():
    # <V(t) V(t+d)> = sum 2 cos(n d)/n, by independence of the modes
    n, m, reps = 32, 128, 400
    delta = 16 * TWO_PI / m
    acc = []
    for i in range(reps):
        field = sample_fourier_field(n, _stream(100 + i))
        grid = fourier_field_on_grid(field, m)
        prods = grid.values * np.roll(grid.values, -16)
        acc.append(prods.mean())
    acc = np.array(acc)
    est = acc.mean()
    se = acc.std(ddof=1) / math.sqrt(reps)
    exact = truncated_covariance(n, delta)
    assert abs(est - exact) < 3.0 * se + 0.05


def test_min_on_circle_refinement():
    for i in range(10):
        field = sample_fourier_field(64, _stream(200 + i))
        grid = fourier_field_on_grid(field, 1024)
        theta, vmin = min_on_circle(field, grid)
        assert vmin <= grid.values.min() + 1e-14
        assert 0.0 <= theta < TWO_PI
        # refined point evaluates to the reported minimum
        assert math.isclose(float(evaluate(field, np.array([theta]))[0]),
                            vmin, abs_tol=1e-9)


def test_min_refine_domain():
    field = sample_fourier_field(8, _stream(5))
    grid = fourier_field_on_grid(field, 64)
    with pytest.raises(DomainError):
        min_on_circle(field, grid, refine=-1.0)
