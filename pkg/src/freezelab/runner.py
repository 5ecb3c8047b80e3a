"""Experiment orchestration: validated run configurations, a deterministic
worker pool, and the reductions that turn per-sample records into output rows.

Determinism contract: the rng stream of sample ``i`` depends only on
``(seed, experiment, i)`` and work is split into fixed-size chunks merged in
index order, so results are byte-identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
from typing import Sequence

import numpy as np

from . import cuepoly, extremes, fourierfield, thermo, zetaline
from .errors import UsageError
from .rng import child_stream

CHUNK = 32  # fixed task granularity; part of the reproducibility contract

EXPERIMENTS = ("extremes", "freeze", "moments", "fh-ratio", "table1",
               "zeta-freeze", "covariance")
_MODELS_BY_EXPERIMENT = {
    "extremes": ("cue", "fourier"),
    "freeze": ("cue", "fourier"),
    "moments": ("cue",),
    "fh-ratio": ("cue",),
    "table1": ("zeta",),
    "zeta-freeze": ("zeta",),
    "covariance": ("cue", "zeta"),
}


@dataclass
class RunConfig:
    """Everything a run depends on; echoed verbatim into output metadata."""

    experiment: str
    model: str
    n: int = 64
    samples: int = 200
    betas: tuple = (0.5, 1.0, 1.5)
    grid_factor: int = 16
    seed: int = 1
    workers: int = 1
    out_path: str = "freezelab-out.csv"
    fmt: str = "csv"
    k: int = 1
    t_center: float = 3.6e7
    window: float = 2000.0
    separations: tuple = field(default_factory=tuple)
    c: float = 1.5

    def as_dict(self) -> dict:
        d = asdict(self)
        d["betas"] = ";".join(format(b, ".17g") for b in self.betas)
        d["separations"] = ";".join(format(s, ".17g") for s in self.separations)
        # execution-only parameters: output bytes must not depend on them,
        # and the destination path is evident from the file itself
        del d["workers"]
        del d["out_path"]
        return d

    def as_dict_raw(self) -> dict:
        return asdict(self)


def validate_config(cfg: RunConfig) -> None:
    """Collect every configuration problem and raise them together."""
    problems = []
    if cfg.experiment not in EXPERIMENTS:
        problems.append(f"unknown experiment {cfg.experiment!r}; "
                        f"choose from {', '.join(EXPERIMENTS)}")
    else:
        allowed = _MODELS_BY_EXPERIMENT[cfg.experiment]
        if cfg.model not in allowed:
            problems.append(f"experiment {cfg.experiment!r} supports models "
                            f"{', '.join(allowed)}, got {cfg.model!r}")
    if cfg.n < 1:
        problems.append(f"n must be >= 1, got {cfg.n}")
    if cfg.samples < 1:
        problems.append(f"samples must be >= 1, got {cfg.samples}")
    if cfg.grid_factor < 4:
        problems.append(f"grid_factor must be >= 4, got {cfg.grid_factor}")
    if cfg.workers < 1:
        problems.append(f"workers must be >= 1, got {cfg.workers}")
    if not cfg.betas or any(b <= 0 for b in cfg.betas):
        problems.append(f"betas must be positive, got {cfg.betas}")
    elif any(b2 <= b1 for b1, b2 in zip(cfg.betas, cfg.betas[1:])):
        problems.append(f"betas must be strictly increasing, got {cfg.betas}")
    if cfg.fmt not in ("csv", "json"):
        problems.append(f"format must be csv or json, got {cfg.fmt!r}")
    if cfg.k < 1:
        problems.append(f"moment order k must be >= 1, got {cfg.k}")
    if cfg.experiment in ("table1", "zeta-freeze") or cfg.model == "zeta":
        if not 100.0 <= cfg.t_center <= zetaline.T_MAX:
            problems.append(f"t_center must lie in [100, {zetaline.T_MAX:.0e}], "
                            f"got {cfg.t_center}")
    if cfg.experiment == "covariance":
        if not cfg.separations:
            problems.append("covariance requires at least one separation")
        elif any(s <= 0 for s in cfg.separations):
            problems.append(f"separations must be positive, got {cfg.separations}")
        if cfg.model == "zeta" and cfg.window <= 0:
            problems.append(f"window must be positive, got {cfg.window}")
    if problems:
        raise UsageError("invalid configuration:\n  - " + "\n  - ".join(problems))


def _landscape_grid(model: str, n: int, m: int, stream):
    if model == "cue":
        return cuepoly.field_on_grid(cuepoly.sample_cue(n, stream), m)
    return fourierfield.fourier_field_on_grid(
        fourierfield.sample_fourier_field(n, stream), m)


def _run_chunk(args):
    """Worker entry point: per-sample primitives for indices [start, start+count).

    Must stay a module-level function (pickled into worker processes).
    """
    cfg_dict, start, count = args
    cfg = RunConfig(**cfg_dict)
    m = cfg.grid_factor * cfg.n
    exp = cfg.experiment
    out = []
    for i in range(start, start + count):
        if exp == "extremes":
            st = child_stream(cfg.seed, exp, i)
            # observable: minimum energy y = -2 max log|p| = min V
            if cfg.model == "cue":
                phases = cuepoly.sample_cue(cfg.n, st)
                grid = cuepoly.field_on_grid(phases, m)
                _, maxlog = cuepoly.max_log_abs_p(phases, grid)
                v = -2.0 * maxlog
            else:
                f = fourierfield.sample_fourier_field(cfg.n, st)
                grid = fourierfield.fourier_field_on_grid(f, m)
                _, v = fourierfield.min_on_circle(f, grid)
            out.append(v)
        elif exp in ("freeze", "moments"):
            st = child_stream(cfg.seed, exp, i)
            grid = _landscape_grid(cfg.model, cfg.n, m, st)
            betas = np.asarray(cfg.betas, dtype=float)
            out.append(thermo.ln_partition_values(grid, betas))
        elif exp == "table1":
            t_start = cfg.t_center + (i - cfg.samples / 2.0) * zetaline.TWO_PI
            out.append(zetaline.interval_max(t_start).max_abs)
        elif exp == "zeta-freeze":
            t_start = cfg.t_center + (i - cfg.samples / 2.0) * zetaline.TWO_PI
            lnz, n_t = zetaline.ln_zeta_partition_values(
                t_start, np.asarray(cfg.betas, dtype=float))
            out.append((lnz, n_t))
        elif exp == "covariance":  # cue model only reaches the pool
            st = child_stream(cfg.seed, exp, i)
            grid = _landscape_grid("cue", cfg.n, m, st)
            out.append(grid)
        else:
            raise UsageError(f"experiment {exp!r} does not use the sample pool")
    return out


def _pool_map(cfg: RunConfig, total: int) -> list:
    """Run _run_chunk over fixed-size chunks, merging results in index order."""
    tasks = [(cfg.as_dict_raw(), s, min(CHUNK, total - s))
             for s in range(0, total, CHUNK)]
    if cfg.workers == 1 or len(tasks) == 1:
        chunks = [_run_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers,
                                 initializer=_worker_init) as pool:
            chunks = list(pool.map(_run_chunk, tasks))
    return [item for chunk in chunks for item in chunk]


def _worker_init():
    try:
        from threadpoolctl import threadpool_limits

        threadpool_limits(1)
    except Exception:
        pass


def run_experiment(cfg: RunConfig) -> tuple[list[str], list[tuple], dict]:
    """Execute one experiment; returns (columns, rows, meta)."""
    validate_config(cfg)
    try:
        from threadpoolctl import threadpool_limits

        threadpool_limits(1)
    except Exception:
        pass

    exp = cfg.experiment
    if exp == "extremes":
        raw = np.array(_pool_map(cfg, cfg.samples))
        normalized = extremes.normalize_to_target_variance(raw)
        ks = extremes.ks_statistic(normalized) if raw.size >= 10 else float("nan")
        rows = []
        for center, emp, tgt in extremes.histogram_table(normalized):
            rows.append((center, emp, tgt))
        meta = {
            "raw_mean": float(raw.mean()),
            "raw_std": float(raw.std(ddof=1)) if raw.size > 1 else 0.0,
            "ks_statistic": ks,
        }
        return ["bin_center", "empirical_density", "target_density"], rows, meta
    if exp == "freeze":
        lnz = np.array(_pool_map(cfg, cfg.samples))
        curve = thermo.freeze_curve_from_lnz(
            lnz, np.asarray(cfg.betas, dtype=float), cfg.n)
        rows = [(float(b), float(mf), float(se))
                for b, mf, se in zip(curve.betas, curve.minus_f, curve.stderr)]
        return ["beta", "minus_f", "stderr"], rows, {"samples": cfg.samples}
    if exp == "moments":
        lnz = np.array(_pool_map(cfg, cfg.samples))
        rows = []
        for j, b in enumerate(cfg.betas):
            zs = [thermo.ThermoSample(b, math.inf, float(v), cfg.n)
                  for v in lnz[:, j]]
            rep = thermo.moment_estimate(zs, cfg.k)
            rows.append((cfg.k, float(b), rep.estimate, rep.error_bar,
                         rep.exact_small_n if rep.exact_small_n is not None else float("nan"),
                         rep.asymptotic if rep.asymptotic is not None else float("nan")))
        return (["k", "beta", "estimate", "error_bar", "exact_small_n", "asymptotic"],
                rows, {"samples": cfg.samples})
    if exp == "fh-ratio":
        ns = []
        nv = 32
        while nv <= cfg.n:
            ns.append(nv)
            nv *= 2
        if not ns:
            ns = [cfg.n]
        rows = []
        for b in cfg.betas:
            for nv in ns:
                rows.append((float(b), nv, thermo.fisher_hartwig_ratio(nv, b)))
        return ["beta", "n", "ratio"], rows, {}
    if exp == "table1":
        maxima = _pool_map(cfg, cfg.samples)
        r32, r12, mean = zetaline.table1_experiment(
            cfg.t_center, cfg.samples, max_abs_values=maxima)
        rows = [(cfg.t_center, cfg.samples, mean, r32, r12)]
        return (["t_center", "intervals", "data_mean", "ratio_c32", "ratio_c12"],
                rows, {"n_assoc": int(round(math.log(cfg.t_center)))})
    if exp == "zeta-freeze":
        results = _pool_map(cfg, cfg.samples)
        lnz = np.array([r[0] for r in results])
        n_param = int(round(results[0][1]))
        curve = thermo.freeze_curve_from_lnz(
            lnz, np.asarray(cfg.betas, dtype=float), n_param)
        rows = [(float(b), float(mf), float(se))
                for b, mf, se in zip(curve.betas, curve.minus_f, curve.stderr)]
        return (["beta", "minus_f", "stderr"], rows,
                {"n_param": n_param, "intervals": cfg.samples})
    if exp == "covariance":
        if cfg.model == "zeta":
            rows = zetaline.covariance_scan(cfg.t_center, cfg.window,
                                            cfg.separations)
            return ["separation", "estimate", "stderr"], list(rows), {}
        grids = _pool_map(cfg, cfg.samples)
        # snap requested separations onto the angular grid
        h = 2.0 * math.pi / grids[0].m
        snapped = [round(s / h) * h for s in cfg.separations]
        rows = cuepoly.covariance_estimate(grids, snapped)
        return ["separation", "estimate", "stderr"], list(rows), {"samples": cfg.samples}
    raise UsageError(f"unknown experiment {exp!r}")
