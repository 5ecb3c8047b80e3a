"""Acceptance gate: twelve criteria, one pass/fail line each.

Statistical criteria draw their sample counts through the
FREEZELAB_ACCEPTANCE_SCALE knob (see conftest); tolerances are never scaled.
Each test prints exactly one line `criterion NN: PASS|FAIL - detail`.
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest
from scipy.integrate import quad

from freezelab import thermo
from freezelab.cuepoly import field_on_grid, sample_cue
from freezelab.extremes import (
    ExtremeSample,
    RecenteringParams,
    c_discrimination,
    ks_statistic,
    normalize_to_target_variance,
    recenter,
    target_pdf,
    two_sample_ks,
)
from freezelab.rng import child_stream
from freezelab.specialfn import bessel_k, gamma_fn, ln_barnes_g
from freezelab.thermo import (
    ThermoSample,
    fisher_hartwig_ratio,
    freeze_curve_from_lnz,
    ln_partition_values,
    moment_estimate,
    moment_predicted,
)
from freezelab.zetaline import (
    TWO_PI,
    _eta_zeta,
    interval_max,
    ln_zeta_partition_values,
    table1_experiment,
    zeta_abs_halfline,
)

from conftest import FREEZE_BETAS, SCALE, scaled


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"\ncriterion {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}",
          flush=True)
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_01_special_function_kernel():
    t0 = time.time()

    def k_quad(order, x):
        v, _ = quad(lambda t: math.exp(-x * (math.cosh(t) - 1.0))
                    * math.cosh(order * t), 0.0, 30.0, limit=200)
        return v * math.exp(-x)

    errs = [
        abs(bessel_k(0, 1.0) / k_quad(0, 1.0) - 1.0),
        abs(bessel_k(1, 1.0) / k_quad(1, 1.0) - 1.0),
        abs(gamma_fn(0.5) / math.sqrt(math.pi) - 1.0),
        abs(ln_barnes_g(4.0) / math.log(2.0) - 1.0),
    ]
    dt = time.time() - t0
    ok = max(errs) < 1e-12 and dt < 5.0
    _report(1, ok, f"K0(1),K1(1),Gamma(1/2),lnG(4) worst rel err "
                   f"{max(errs):.2e} (tol 1e-12), {dt:.2f}s (< 5s)")


def test_criterion_02_target_law():
    def moment(power):
        v, _ = quad(lambda x: x**power * target_pdf(x), -60.0, 40.0,
                    limit=400, epsabs=1e-13, epsrel=1e-12,
                    points=[-30, -15, -8, -4, -2, 0, 2, 4, 8, 15])
        return v

    mass = moment(0)
    mean = moment(1)
    var = moment(2) - mean * mean
    gamma_e = 0.5772156649015329
    mgf_errs = []
    for s in (-0.5, 0.5, 1.0):
        v, _ = quad(lambda x: math.exp(s * x) * target_pdf(x), -80.0, 40.0,
                    limit=400, epsabs=1e-12,
                    points=[-30, -15, -8, -4, -2, 0, 2, 4, 8, 15])
        mgf_errs.append(abs(v - math.gamma(1.0 + s) ** 2))
    tail = target_pdf(-25.0) / (25.0 * math.exp(-25.0))
    ok = (abs(mass - 1.0) < 1e-10
          and abs(var - 3.28986813) < 1e-8
          and abs(mean + 2.0 * gamma_e) < 1e-7
          and max(mgf_errs) < 1e-7
          and abs(tail - 1.0) < 0.10)
    _report(2, ok, f"mass err {abs(mass-1):.1e}, var err "
                   f"{abs(var-3.28986813):.1e}, mean err {abs(mean+2*gamma_e):.1e}, "
                   f"MGF worst {max(mgf_errs):.1e}, tail ratio {tail:.3f}")


def test_criterion_03_first_moment_monte_carlo():
    n, beta = 32, 0.4
    samples = scaled(100_000, floor=2000)
    zs = []
    for i in range(samples):
        st = child_stream(31, "moments", i)
        grid = field_on_grid(sample_cue(n, st), 16 * n)
        lnz = float(ln_partition_values(grid, np.array([beta]))[0])
        zs.append(ThermoSample(beta, math.exp(lnz), lnz, n))
    rep = moment_estimate(zs, 1)
    exact = rep.exact_small_n
    asym = moment_predicted(n, beta, 1)
    dev = abs(rep.estimate - exact)
    ok = dev <= 3.0 * rep.error_bar and abs(exact / asym - 1.0) < 0.05
    _report(3, ok, f"n={n} beta={beta} S={samples}: estimate {rep.estimate:.4f} "
                   f"vs exact {exact:.4f} ({dev / rep.error_bar:.2f} error bars), "
                   f"exact/asymptotic-1 = {exact / asym - 1.0:+.4f} (tol 0.05)")


def test_criterion_04_fisher_hartwig():
    devs = [abs(fisher_hartwig_ratio(n, 0.6) - 1.0) for n in (32, 64, 128, 256)]
    decreasing = all(b < a for a, b in zip(devs, devs[1:]))
    tridiag_err = max(abs(fisher_hartwig_ratio(n, 1.0) - (n + 1.0) / n)
                      for n in (10, 100, 400))
    ok = decreasing and devs[-1] < 0.02 and tridiag_err < 1e-10
    _report(4, ok, f"beta=0.6 |ratio-1| {['%.5f' % d for d in devs]} "
                   f"(decreasing={decreasing}), beta=1 worst err {tridiag_err:.1e}")


def test_criterion_05_cue_freezing(cue_ensembles):
    _, lnz = cue_ensembles[1024]
    curve = freeze_curve_from_lnz(lnz, FREEZE_BETAS, 1024)
    mf = dict(zip(np.round(curve.betas, 2), curve.minus_f))
    se = dict(zip(np.round(curve.betas, 2), curve.stderr))
    high_t_err = max(abs(mf[b] - (b + 1.0 / b)) for b in (0.25, 0.5, 0.75))
    plateau_gap = abs(mf[2.0] - mf[1.5])
    monotone = all(
        curve.minus_f[i + 1] <= curve.minus_f[i]
        + 2.0 * (curve.stderr[i] + curve.stderr[i + 1])
        for i in range(curve.minus_f.size - 1)
    )
    ok = high_t_err < 0.15 and plateau_gap < 0.05 and monotone
    _report(5, ok, f"n=1024 S={lnz.shape[0]} (scale {SCALE}): worst "
                   f"|-f-(b+1/b)| {high_t_err:.4f} (tol 0.15), "
                   f"|-f(2.0)+f(1.5)| {plateau_gap:.4f} (tol 0.05), "
                   f"monotone within 2 se: {monotone}")


def _normalized_recentered(ys, n):
    samples = [ExtremeSample(float(y), n, "cue") for y in ys]
    xs = recenter(samples, RecenteringParams(n, 1.5))
    return normalize_to_target_variance(xs)


def test_criterion_06_extreme_value_law(cue_ensembles):
    ys_1024 = cue_ensembles[1024][0]
    ys_256 = cue_ensembles[256][0]
    count = min(ys_1024.size, ys_256.size)
    ks_1024 = ks_statistic(_normalized_recentered(ys_1024[:count], 1024))
    ks_256 = ks_statistic(_normalized_recentered(ys_256[:count], 256))
    ok = ks_1024 < 0.05 and ks_1024 < ks_256
    _report(6, ok, f"S={count} (scale {SCALE}): KS(n=1024) {ks_1024:.4f} "
                   f"(tol 0.05), KS(n=256) {ks_256:.4f}, trend "
                   f"{'improving' if ks_1024 < ks_256 else 'NOT improving'}")


def test_criterion_07_c_discrimination(cue_ensembles):
    # ladder capped at n=1024 by the compute budget; >= 4 sizes over 4 octaves
    count = scaled(10_000, floor=200)
    ensembles = {}
    for n in (64, 128, 256, 512, 1024):
        ys = cue_ensembles[n][0][:count]
        ensembles[n] = [ExtremeSample(float(y), n, "cue") for y in ys]
    slope, verdict = c_discrimination(ensembles)
    ok = verdict == "c32"
    _report(7, ok, f"ladder 64..1024, S={count}/size (scale {SCALE}): "
                   f"slope {slope:.4f} (targets -0.75 vs -0.25), verdict {verdict}")


def test_criterion_08_universality(cue_ensembles, fourier_minima_1024):
    ys_cue = cue_ensembles[1024][0]
    ys_fourier = fourier_minima_1024
    # compare shapes after the same recentering and variance normalization
    # applied to each ensemble (the two models differ by an O(1) offset)
    xc = _normalized_recentered(ys_cue, 1024)
    xf = normalize_to_target_variance(
        ys_fourier - RecenteringParams(1024, 1.5).a)
    ks = two_sample_ks(xc, xf)
    ok = ks < 0.05
    _report(8, ok, f"cue S={xc.size} vs fourier S={xf.size} (scale {SCALE}): "
                   f"two-sample KS {ks:.4f} (tol 0.05)")


def test_criterion_09_zeta_evaluator():
    first_zero = zeta_abs_halfline(14.134725).zeta_abs
    rng = np.random.default_rng(17)
    worst = 0.0
    for t in rng.uniform(50.0, 1000.0, 50):
        rs = zeta_abs_halfline(float(t)).zeta_abs
        eta = abs(_eta_zeta(float(t)))
        worst = max(worst, abs(rs - eta) / max(eta, 1e-12))
    central = zeta_abs_halfline(0.0).zeta_abs
    central_err = abs(central - 1.4603545088)
    ok = first_zero < 1e-3 and worst < 1e-8 and central_err < 1e-9
    _report(9, ok, f"|Z| at first zero {first_zero:.1e} (tol 1e-3), dual-method "
                   f"worst rel err {worst:.1e} (tol 1e-8), |zeta(1/2)| err "
                   f"{central_err:.1e} (tol 1e-9)")


def test_criterion_10_interval_maxima_ratio():
    t_center = 3.6e7
    intervals = scaled(20_000, floor=400)
    maxima = []
    for i in range(intervals):
        t_start = t_center + (i - intervals / 2.0) * TWO_PI
        maxima.append(interval_max(t_start).max_abs)
    r32, r12, mean = table1_experiment(t_center, intervals,
                                       max_abs_values=maxima)
    ok = abs(r32 - 0.9305) < 0.03 and abs(r12 - 0.5529) < 0.03
    _report(10, ok, f"T=3.6e7, {intervals} consecutive intervals (scale "
                    f"{SCALE}): mean {mean:.4f}, ratio_c32 {r32:.4f} "
                    f"(ref 0.9305+-0.03), ratio_c12 {r12:.4f} (ref 0.5529+-0.03)")


def test_criterion_11_zeta_freezing():
    t_center = 3.6e7
    intervals = scaled(10_000, floor=300)
    betas = np.array([0.25, 0.5, 0.75, 1.0, 1.2, 1.6, 2.0])
    lnz = np.empty((intervals, betas.size))
    n_t = 0.0
    for i in range(intervals):
        t_start = t_center + (i - intervals / 2.0) * TWO_PI
        lnz[i], n_t = ln_zeta_partition_values(t_start, betas)
    curve = freeze_curve_from_lnz(lnz, betas, int(round(n_t)))
    mf = dict(zip(betas, curve.minus_f))
    decreasing = all(mf[a] > mf[b] for a, b in
                     zip((0.25, 0.5, 0.75), (0.5, 0.75, 1.0)))
    plateau_gap = abs(mf[2.0] - mf[1.2])
    ok = decreasing and plateau_gap < 0.15
    _report(11, ok, f"T=3.6e7, {intervals} intervals (scale {SCALE}): "
                    f"decreasing on [0.25,1]: {decreasing}, |-f(2.0)+f(1.2)| "
                    f"{plateau_gap:.4f} (tol 0.15)")


def test_criterion_12_determinism(tmp_path):
    outputs = []
    for workers in (1, 4, 8):
        out = tmp_path / f"w{workers}.csv"
        res = subprocess.run(
            [sys.executable, "-m", "freezelab.cli", "extremes",
             "--model", "cue", "--n", "16", "--samples", "40", "--seed", "42",
             "--workers", str(workers), "--out", str(out)],
            capture_output=True, text=True)
        assert res.returncode == 0, res.stderr
        outputs.append(out.read_bytes())
    ok = outputs[0] == outputs[1] == outputs[2]
    _report(12, ok, f"extremes seed=42 workers (1,4,8): byte-identical={ok}, "
                    f"{len(outputs[0])} bytes")
