"""JSON matrix-set files and report schemas."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Sequence

import numpy as np

from .setalg import OperatorSet

FORMAT_VERSION = 1


class MatrixFileError(ValueError):
    def __init__(self, path, field, message):
        super().__init__(f"{path}: {field}: {message}")
        self.path = str(path)
        self.field = field


def operator_set_to_json(S: OperatorSet, names: Sequence[str] | None = None) -> dict:
    names = list(names) if names is not None else [f"A{i + 1}" for i in range(len(S))]
    if len(names) != len(S):
        raise ValueError("one name per member is required")
    doc = {
        "format_version": FORMAT_VERSION,
        "dim": S.dim,
        "members": [
            {"name": nm, "entries": [float(v) for v in np.ravel(M)]} for nm, M in zip(names, S)
        ],
    }
    if S.label is not None:
        doc["label"] = S.label
    return doc


def operator_set_from_json(doc, path="<memory>") -> OperatorSet:
    if not isinstance(doc, dict):
        raise MatrixFileError(path, "<root>", "expected a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise MatrixFileError(path, "format_version", f"unsupported value {version!r}")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise MatrixFileError(path, "dim", f"expected a positive integer, got {dim!r}")
    members = doc.get("members")
    if not isinstance(members, list) or not members:
        raise MatrixFileError(path, "members", "expected a non-empty list")
    mats = []
    for i, mem in enumerate(members):
        where = f"members[{i}]"
        if not isinstance(mem, dict):
            raise MatrixFileError(path, where, "expected an object")
        if not isinstance(mem.get("name", ""), str):
            raise MatrixFileError(path, f"{where}.name", "expected a string")
        entries = mem.get("entries")
        if not isinstance(entries, list):
            raise MatrixFileError(path, f"{where}.entries", "expected a list of numbers")
        if len(entries) != dim * dim:
            raise MatrixFileError(
                path, f"{where}.entries", f"expected {dim * dim} entries, got {len(entries)}"
            )
        for j, v in enumerate(entries):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise MatrixFileError(path, f"{where}.entries[{j}]", f"not a number: {v!r}")
            if not math.isfinite(v) or v < 0:
                raise MatrixFileError(
                    path, f"{where}.entries[{j}]", f"must be finite and >= 0, got {v!r}"
                )
        mats.append(np.array(entries, dtype=float).reshape(dim, dim))
    label = doc.get("label")
    return OperatorSet(tuple(mats), label if isinstance(label, str) else None)


def load_matrix_set(path) -> OperatorSet:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise MatrixFileError(path, "<root>", f"invalid JSON ({exc})") from None
    except OSError as exc:
        raise MatrixFileError(path, "<file>", exc.strerror or str(exc)) from None
    return operator_set_from_json(doc, path)


def member_names(path) -> list[str]:
    doc = json.loads(Path(path).read_text())
    return [m.get("name", f"A{i + 1}") for i, m in enumerate(doc["members"])]


def write_matrix_set(path, S: OperatorSet, names: Sequence[str] | None = None):
    Path(path).write_text(json.dumps(operator_set_to_json(S, names), indent=1))


def dumps(obj) -> str:
    """Serialize a report; NaN and infinities are rejected rather than written."""
    return json.dumps(obj, indent=2, allow_nan=False, default=_default)


def _default(o):
    if isinstance(o, np.generic):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"cannot serialize {type(o).__name__}")


_number = {"type": "number"}
_nonneg = {"type": "number", "minimum": 0}

MATRIX_SET_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["format_version", "dim", "members"],
    "properties": {
        "format_version": {"const": FORMAT_VERSION},
        "dim": {"type": "integer", "minimum": 1},
        "label": {"type": "string"},
        "members": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["entries"],
                "properties": {
                    "name": {"type": "string"},
                    "entries": {"type": "array", "items": _nonneg},
                },
            },
        },
    },
}

ESTIMATE_SCHEMA = {
    "type": "object",
    "required": ["lower", "upper", "depth_lower", "depth_upper", "norm", "argmax_word"],
    "properties": {
        "lower": _nonneg,
        "upper": _nonneg,
        "depth_lower": {"type": "integer", "minimum": 1},
        "depth_upper": {"type": "integer", "minimum": 1},
        "norm": {"enum": ["row-sum", "col-sum", "spectral"]},
        "argmax_word": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "upper_length": {"type": "integer", "minimum": 1},
    },
}

ESTIMATE_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["format_version", "command", "results"],
    "properties": {
        "format_version": {"const": FORMAT_VERSION},
        "command": {"const": "estimate"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["file", "dim", "members", "estimate"],
                "properties": {
                    "file": {"type": "string"},
                    "dim": {"type": "integer"},
                    "members": {"type": "integer"},
                    "estimate": ESTIMATE_SCHEMA,
                },
            },
        },
    },
}

CHECK_REPORT_SCHEMA = {
    "type": "object",
    "required": ["check_id", "family", "seed", "trial", "lhs", "rhs", "slack", "passed"],
    "properties": {
        "check_id": {"type": "string"},
        "family": {"type": "string"},
        "seed": {"type": "integer"},
        "trial": {"type": "integer"},
        "lhs": _number,
        "rhs": _number,
        "slack": _number,
        "passed": {"type": "boolean"},
        "rtol": _number,
        "digest": {"type": "string"},
        "witness": {"type": ["object", "null"]},
    },
}

VERIFY_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["format_version", "command", "config", "summary", "failures", "exit_status"],
    "properties": {
        "format_version": {"const": FORMAT_VERSION},
        "command": {"const": "verify"},
        "config": {"type": "object"},
        "summary": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["passed", "failed", "min_slack"],
                "properties": {
                    "passed": {"type": "integer"},
                    "failed": {"type": "integer"},
                    "min_slack": _number,
                },
            },
        },
        "failures": {"type": "array", "items": CHECK_REPORT_SCHEMA},
        "exit_status": {"enum": [0, 1]},
    },
}

WITNESS_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["format_version", "family", "seed", "trial", "params"],
    "properties": {
        "format_version": {"const": 1},
        "family": {"enum": ["thm2.1", "thm2.2", "thm3.2", "thm3.3", "cor3.4", "block-cyclic"]},
        "seed": {"type": "integer", "minimum": 0},
        "trial": {"type": "integer", "minimum": 0},
        "params": {"type": "object"},
        "rtol": _number,
    },
}
