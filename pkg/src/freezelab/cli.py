"""Command-line front end.

One subcommand per experiment; options may also be supplied through a JSON
config file (command-line flags win).  Exit codes: 0 success, 2 usage or
validation error, 3 numerical failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import FreezelabError, PrecisionError, UsageError
from .io import write_output
from .runner import EXPERIMENTS, RunConfig, run_experiment

_EXIT_USAGE = 2
_EXIT_NUMERICAL = 3
_EXIT_IO = 4

_DEFAULT_MODEL = {
    "extremes": "cue",
    "freeze": "cue",
    "moments": "cue",
    "fh-ratio": "cue",
    "table1": "zeta",
    "zeta-freeze": "zeta",
    "covariance": "cue",
}


def _add_common(p: argparse.ArgumentParser, experiment: str) -> None:
    p.add_argument("--config", help="JSON file of option defaults")
    p.add_argument("--model", choices=("cue", "fourier", "zeta"),
                   help=f"landscape model (default {_DEFAULT_MODEL[experiment]})")
    p.add_argument("--n", type=int, help="matrix dimension / mode count")
    p.add_argument("--samples", type=int,
                   help="sample count (interval count for zeta experiments)")
    p.add_argument("--betas", help="comma-separated inverse temperatures")
    p.add_argument("--grid-factor", type=int, dest="grid_factor",
                   help="grid points per dimension unit (default 16)")
    p.add_argument("--seed", type=int, help="master seed (default 1)")
    p.add_argument("--workers", type=int, help="worker processes (default 1)")
    p.add_argument("--out", dest="out_path", help="output path")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"),
                   help="output format (default csv)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freezelab",
        description="Monte Carlo laboratory for log-correlated circular "
                    "landscapes and the critical line.",
    )
    sub = parser.add_subparsers(dest="experiment", required=True)
    helps = {
        "extremes": "distribution of the landscape maximum",
        "freeze": "scaled free energy versus inverse temperature",
        "moments": "partition-function moments against exact references",
        "fh-ratio": "simulated-to-asymptotic first-moment ratio versus size",
        "table1": "interval maxima of |zeta| against the model mean",
        "zeta-freeze": "free-energy scan over critical-line intervals",
        "covariance": "two-point covariance of the landscape",
    }
    for exp in EXPERIMENTS:
        p = sub.add_parser(exp, help=helps[exp])
        _add_common(p, exp)
        if exp == "moments":
            p.add_argument("--k", type=int, help="moment order (default 1)")
        if exp in ("table1", "zeta-freeze") or exp == "covariance":
            p.add_argument("--t-center", type=float, dest="t_center",
                           help="central height on the critical line")
        if exp == "covariance":
            p.add_argument("--window", type=float,
                           help="height window for the zeta scan")
            p.add_argument("--separations",
                           help="comma-separated angular/height separations")
    return parser


def _parse_float_list(text: str, label: str) -> tuple:
    try:
        vals = tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"could not parse {label} list {text!r}")
    if not vals:
        raise UsageError(f"empty {label} list {text!r}")
    return vals


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Merge defaults, the optional JSON config file and CLI flags."""
    merged = {"experiment": args.experiment,
              "model": _DEFAULT_MODEL[args.experiment]}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                file_opts = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file is not valid JSON: {exc}")
        if not isinstance(file_opts, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = set(file_opts) - set(RunConfig.__dataclass_fields__)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        merged.update(file_opts)
    for key in RunConfig.__dataclass_fields__:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    for key in ("betas", "separations"):
        if isinstance(merged.get(key), str):
            merged[key] = _parse_float_list(merged[key], key)
        elif isinstance(merged.get(key), list):
            merged[key] = tuple(float(v) for v in merged[key])
    return RunConfig(**merged)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        columns, rows, meta = run_experiment(cfg)
    except UsageError as exc:
        print(f"freezelab: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except (PrecisionError, FreezelabError) as exc:
        print(f"freezelab: numerical failure: {exc}", file=sys.stderr)
        return _EXIT_NUMERICAL
    try:
        write_output(cfg.out_path, cfg.fmt, cfg.as_dict(), columns, rows, meta)
    except OSError as exc:
        print(f"freezelab: cannot write output: {exc}", file=sys.stderr)
        return _EXIT_IO
    print(f"wrote {len(rows)} rows to {cfg.out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
