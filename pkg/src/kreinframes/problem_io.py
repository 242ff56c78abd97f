"""Strict JSON problem/report files and canonical serialization.

The documented schema lives in ``docs/format.md``.  Validation is
deliberately unforgiving: unknown keys, non-finite numbers, and shape
mismatches are rejected with the JSON path of the offense.  Serialization is
canonical — fixed key order, two-space indent, shortest round-trip floats,
trailing newline — so saving the same document twice gives identical bytes.
"""

from __future__ import annotations

import dataclasses
import enum
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import KreinSpace, make_krein_space
from .errors import ParseError, SchemaError

PROBLEM_KEYS = {"dimension", "J", "family", "vectors", "operator", "comment"}
REPORT_KEYS = {"report_version", "command", "problem", "parameters", "result"}
REPORT_VERSION = 1


def _reject_constant(name: str):
    raise ParseError(f"non-finite JSON constant {name!r} is not allowed")


def loads_strict(text: str) -> dict:
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top-level value must be an object")
    return doc


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _check_keys(obj: dict, allowed: set[str], required: set[str], path: str) -> None:
    for key in obj:
        if key not in allowed:
            raise SchemaError(f"unknown field {key!r}", path)
    for key in required:
        if key not in obj:
            raise SchemaError(f"missing required field {key!r}", path)


def _check_matrix(rows, n_cols: int | None, path: str, min_rows: int = 1) -> np.ndarray:
    if not isinstance(rows, list) or len(rows) < min_rows:
        raise SchemaError(f"expected a list of at least {min_rows} rows", path)
    width = None
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not row:
            raise SchemaError("expected a non-empty list of numbers", f"{path}[{i}]")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise SchemaError(f"row length {len(row)} differs from {width}", f"{path}[{i}]")
        for jdx, x in enumerate(row):
            if not _is_number(x):
                raise SchemaError("expected a number", f"{path}[{i}][{jdx}]")
    if n_cols is not None and width != n_cols:
        raise SchemaError(f"row length {width}, expected {n_cols}", path)
    return np.array(rows, dtype=float)


@dataclass(frozen=True)
class ParsedProblem:
    """A validated problem document with arrays decoded."""

    dimension: int
    space: KreinSpace
    entries: tuple[tuple[np.ndarray, float], ...] | None
    vectors: np.ndarray | None
    operator: np.ndarray | None
    comment: str | None
    document: dict = field(repr=False)


def parse_problem(doc: dict, path: str = "$") -> ParsedProblem:
    _check_keys(doc, PROBLEM_KEYS, {"dimension", "J"}, path)

    n = doc["dimension"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SchemaError("dimension must be a positive integer", f"{path}.dimension")

    jspec = doc["J"]
    if not isinstance(jspec, dict):
        raise SchemaError("J must be an object", f"{path}.J")
    jtype = jspec.get("type")
    if jtype == "diagonal":
        _check_keys(jspec, {"type", "signs"}, {"type", "signs"}, f"{path}.J")
        signs = jspec["signs"]
        if (not isinstance(signs, list) or len(signs) != n
                or any(s not in (1, -1) or isinstance(s, bool) for s in signs)):
            raise SchemaError(f"signs must be a list of {n} entries from {{1, -1}}",
                              f"{path}.J.signs")
        j = np.diag(np.array(signs, dtype=float))
    elif jtype == "matrix":
        _check_keys(jspec, {"type", "rows"}, {"type", "rows"}, f"{path}.J")
        j = _check_matrix(jspec["rows"], n, f"{path}.J.rows")
        if j.shape[0] != n:
            raise SchemaError(f"{j.shape[0]} rows, expected {n}", f"{path}.J.rows")
    else:
        raise SchemaError("J.type must be 'diagonal' or 'matrix'", f"{path}.J.type")
    space = make_krein_space(j)

    entries = None
    if "family" in doc:
        fam = doc["family"]
        if not isinstance(fam, dict):
            raise SchemaError("family must be an object", f"{path}.family")
        _check_keys(fam, {"entries"}, {"entries"}, f"{path}.family")
        raw_entries = fam["entries"]
        if not isinstance(raw_entries, list) or not raw_entries:
            raise SchemaError("entries must be a non-empty list", f"{path}.family.entries")
        decoded = []
        for i, entry in enumerate(raw_entries):
            epath = f"{path}.family.entries[{i}]"
            if not isinstance(entry, dict):
                raise SchemaError("entry must be an object", epath)
            _check_keys(entry, {"basis", "weight"}, {"basis", "weight"}, epath)
            basis = _check_matrix(entry["basis"], n, f"{epath}.basis")
            if not _is_number(entry["weight"]):
                raise SchemaError("weight must be a number", f"{epath}.weight")
            decoded.append((basis, float(entry["weight"])))
        entries = tuple(decoded)

    vectors = None
    if "vectors" in doc:
        vectors = _check_matrix(doc["vectors"], n, f"{path}.vectors")

    operator = None
    if "operator" in doc:
        operator = _check_matrix(doc["operator"], n, f"{path}.operator")
        if operator.shape[0] != n:
            raise SchemaError(f"{operator.shape[0]} rows, expected {n}", f"{path}.operator")

    comment = None
    if "comment" in doc:
        if not isinstance(doc["comment"], str):
            raise SchemaError("comment must be a string", f"{path}.comment")
        comment = doc["comment"]

    return ParsedProblem(
        dimension=n,
        space=space,
        entries=entries,
        vectors=vectors,
        operator=operator,
        comment=comment,
        document=doc,
    )


def load_problem(path) -> ParsedProblem:
    text = Path(path).read_text(encoding="utf-8")
    return parse_problem(loads_strict(text))


def parse_report(doc: dict) -> dict:
    _check_keys(doc, REPORT_KEYS, REPORT_KEYS, "$")
    if doc["report_version"] != REPORT_VERSION:
        raise SchemaError(f"unsupported report_version {doc['report_version']!r}",
                          "$.report_version")
    if not isinstance(doc["command"], str):
        raise SchemaError("command must be a string", "$.command")
    if not isinstance(doc["problem"], dict):
        raise SchemaError("problem must be an object", "$.problem")
    if not isinstance(doc["parameters"], dict):
        raise SchemaError("parameters must be an object", "$.parameters")
    if not isinstance(doc["result"], dict):
        raise SchemaError("result must be an object", "$.result")
    parse_problem(doc["problem"], "$.problem")
    return doc


def load_report(path) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    return parse_report(loads_strict(text))


def jsonify(obj):
    """Convert package objects to JSON-ready structures.

    Dataclasses become objects, enums their values, arrays nested lists;
    non-finite floats are refused rather than smuggled into a file.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)) and not isinstance(obj, bool):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not np.isfinite(x):
            raise ParseError(f"refusing to serialize non-finite number {x!r}")
        return x
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, np.ndarray):
        return jsonify(obj.tolist())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonify(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonify(v) for v in obj]
    raise TypeError(f"cannot serialize object of type {type(obj).__name__}")


def dumps_canonical(doc) -> str:
    return json.dumps(jsonify(doc), indent=2, allow_nan=False) + "\n"


def save_json(doc, path) -> None:
    Path(path).write_text(dumps_canonical(doc), encoding="utf-8")


def make_report(command: str, problem_doc: dict, parameters: dict, result: dict) -> dict:
    return {
        "report_version": REPORT_VERSION,
        "command": command,
        "problem": problem_doc,
        "parameters": parameters,
        "result": result,
    }
