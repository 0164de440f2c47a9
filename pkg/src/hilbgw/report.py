"""Versioned machine-readable reports.

Every CLI command produces a dict ``{"schema_version", "library_version",
"command", "config", "result"}``.  JSON output is written with sorted keys
and fixed separators so identical runs are byte-identical.  CSV output
flattens ``result`` into ``path,value`` rows.
"""

from __future__ import annotations

import csv
import io
import json

import jsonschema

from . import __version__

SCHEMA_VERSION = "1.0"

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "hilbgw report",
    "type": "object",
    "required": ["schema_version", "library_version", "command", "config", "result"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "library_version": {"type": "string"},
        "command": {
            "enum": [
                "md-matrix",
                "eigen",
                "fixed-points",
                "rmatrix",
                "invariant",
                "degree0",
                "wk-table",
                "crepant-compare",
                "selftest",
            ]
        },
        "config": {
            "type": "object",
            "required": ["n", "genus", "insertions", "q_order", "z_order", "u_order", "output_format"],
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "genus": {"type": "integer", "minimum": 0},
                "insertions": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                },
                "q_order": {"type": "integer", "minimum": 1},
                "z_order": {"type": "integer", "minimum": 1},
                "u_order": {"type": "integer", "minimum": 1},
                "macdonald": {"type": "boolean"},
                "g2_tier": {"type": "boolean"},
                "output_format": {"enum": ["json", "csv"]},
            },
        },
        "result": {"type": "object"},
    },
}

WK_CACHE_SCHEMA = {
    "type": "object",
    "required": ["version", "entries", "checksum"],
    "properties": {
        "version": {"type": "integer"},
        "checksum": {"type": "string"},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["g", "exponents", "value"],
                "properties": {
                    "g": {"type": "integer", "minimum": 0},
                    "exponents": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "value": {"type": "string", "pattern": "^-?[0-9]+/[0-9]+$"},
                },
            },
        },
    },
}


def build_report(command: str, config, result: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "library_version": __version__,
        "command": command,
        "config": config.to_json(),
        "result": result,
    }


def validate_report(report: dict) -> None:
    """Raise jsonschema.ValidationError when ``report`` does not match the schema."""
    jsonschema.validate(report, REPORT_SCHEMA)


def validate_wk_cache(payload: dict) -> None:
    jsonschema.validate(payload, WK_CACHE_SCHEMA)


def dumps_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def _flatten(prefix: str, x, rows: list) -> None:
    if isinstance(x, dict):
        for k in sorted(x):
            _flatten(f"{prefix}.{k}" if prefix else str(k), x[k], rows)
    elif isinstance(x, list):
        for i, y in enumerate(x):
            _flatten(f"{prefix}[{i}]", y, rows)
    else:
        rows.append((prefix, "" if x is None else json.dumps(x) if isinstance(x, bool) else str(x)))


def dumps_csv(report: dict) -> str:
    rows: list = []
    for key in ("schema_version", "library_version", "command"):
        rows.append((key, report[key]))
    _flatten("config", report["config"], rows)
    _flatten("result", report["result"], rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["path", "value"])
    writer.writerows(rows)
    return buf.getvalue()


def dumps(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps_json(report)
    if fmt == "csv":
        return dumps_csv(report)
    raise ValueError(f"unknown output format {fmt!r}")
