"""Report envelopes: canonical JSON, determinism hashing, CSV export.

Envelopes are deterministic given config and seed.  The ``runtime``
section (timings, worker count) is excluded from the determinism hash,
everything else is covered by it.  Non-finite floats are serialized as
the strings "inf", "-inf" and "nan" to keep the output strict JSON.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
from pathlib import Path
from typing import Iterable

SCHEMA_VERSION = 1
TOOL_NAME = "orlicz-dynamics"

_EXCLUDED_FROM_HASH = ("runtime", "determinism_hash")


def _sanitize(obj):
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    return obj


def dumps_canonical(obj) -> str:
    return json.dumps(_sanitize(obj), sort_keys=True, separators=(",", ":"), allow_nan=False)


def determinism_hash(envelope: dict) -> str:
    core = {k: v for k, v in envelope.items() if k not in _EXCLUDED_FROM_HASH}
    return hashlib.sha256(dumps_canonical(core).encode()).hexdigest()


def make_envelope(config: dict, results: dict, *, jobs: int, timings: dict, version: str) -> dict:
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": TOOL_NAME, "version": version},
        "config": _sanitize(config),
        "results": _sanitize(results),
        "runtime": {"jobs": jobs, "timings": timings},
    }
    envelope["determinism_hash"] = determinism_hash(envelope)
    return envelope


def write_envelope(path: str | Path, envelope: dict) -> None:
    Path(path).write_text(json.dumps(_sanitize(envelope), indent=2, sort_keys=True) + "\n")


def render_envelope(envelope: dict) -> str:
    return json.dumps(_sanitize(envelope), indent=2, sort_keys=True)


def write_series_csv(path: str | Path, header: Iterable[str], rows: Iterable[Iterable]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(list(header))
        for row in rows:
            writer.writerow(["" if v is None else v for v in row])
