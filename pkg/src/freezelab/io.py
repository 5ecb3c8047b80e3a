"""Deterministic CSV/JSON emission with a metadata header block.

Outputs are a pure function of the run configuration: no timestamps, fixed
float formatting (17 significant digits), LF line endings, atomic rename.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import Mapping, Sequence

from .rng import ALGORITHM_ID

SCHEMA_VERSION = "1"


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _meta_lines(config: Mapping, meta: Mapping) -> list[str]:
    lines = [f"# schema_version={SCHEMA_VERSION}"]
    lines.append(f"# rng={ALGORITHM_ID}")
    from . import __version__

    lines.append(f"# build=freezelab-{__version__}")
    for key in sorted(config):
        lines.append(f"# config.{key}={_fmt(config[key])}")
    for key in sorted(meta):
        lines.append(f"# {key}={_fmt(meta[key])}")
    return lines


def _atomic_write(path: str, payload: str) -> None:
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-freezelab-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_output(path: str, fmt: str, config: Mapping, columns: Sequence[str],
                 rows: Sequence[Sequence], meta: Mapping | None = None) -> None:
    meta = meta or {}
    if fmt == "csv":
        lines = _meta_lines(config, meta)
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(_fmt(v) for v in row))
        _atomic_write(path, "\n".join(lines) + "\n")
    elif fmt == "json":
        from . import __version__

        doc = {
            "schema_version": SCHEMA_VERSION,
            "rng": ALGORITHM_ID,
            "build": f"freezelab-{__version__}",
            "config": {k: config[k] for k in sorted(config)},
            "meta": {k: meta[k] for k in sorted(meta)},
            "columns": list(columns),
            "rows": [list(r) for r in rows],
        }
        _atomic_write(path, json.dumps(doc, indent=1, sort_keys=False) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")
