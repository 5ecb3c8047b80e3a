"""Shared fixtures: the sample-count scale knob and session-scoped Monte
Carlo ensembles reused across statistical tests.

FREEZELAB_ACCEPTANCE_SCALE scales sample counts only (default 1.0); pass/fail
tolerances are never scaled.  Counts never drop below a floor that keeps the
statistical checks meaningful.
"""

import os

import numpy as np
import pytest

from freezelab import cuepoly, fourierfield, thermo
from freezelab.rng import child_stream

SCALE = float(os.environ.get("FREEZELAB_ACCEPTANCE_SCALE", "1.0"))

# inverse-temperature grid shared by the freezing-curve checks
FREEZE_BETAS = np.arange(0.25, 2.001, 0.25)


def scaled(base: int, floor: int = 200) -> int:
    """Sample count after applying the acceptance scale knob."""
    return max(floor, int(round(base * SCALE)))


def cue_min_energy_records(n: int, samples: int, seed: int = 1234):
    """Per-sample (min energy y, ln Z over FREEZE_BETAS) for n-dim landscapes."""
    m = 16 * n
    ys = np.empty(samples)
    lnz = np.empty((samples, FREEZE_BETAS.size))
    for i in range(samples):
        st = child_stream(seed, "test", n * 10_000_000 + i)
        phases = cuepoly.sample_cue(n, st)
        grid = cuepoly.field_on_grid(phases, m)
        _, maxlog = cuepoly.max_log_abs_p(phases, grid)
        ys[i] = -2.0 * maxlog
        lnz[i] = thermo.ln_partition_values(grid, FREEZE_BETAS)
    return ys, lnz


@pytest.fixture(scope="session")
def cue_ensembles():
    """Min-energy samples and ln Z records for the size ladder.

    The large-n members are shared by the freezing-curve, limit-law,
    c-discrimination and universality checks.
    """
    big = scaled(20_000)
    small = scaled(10_000)
    counts = {64: small, 128: small, 256: big, 512: small, 1024: big}
    return {n: cue_min_energy_records(n, s) for n, s in counts.items()}


@pytest.fixture(scope="session")
def fourier_minima_1024():
    """Min energies of the truncated 1/f surrogate at N = 1024."""
    samples = scaled(20_000)
    n = 1024
    m = 16 * n
    ys = np.empty(samples)
    for i in range(samples):
        st = child_stream(4321, "test", i)
        f = fourierfield.sample_fourier_field(n, st)
        grid = fourierfield.fourier_field_on_grid(f, m)
        _, ys[i] = fourierfield.min_on_circle(f, grid)
    return ys
