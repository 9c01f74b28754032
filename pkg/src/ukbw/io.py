"""JSON instance and solution documents.

Serialization is canonical: fixed key order, two-space indentation, numbers
printed with 17 significant digits, trailing newline. Parsing a canonical
document and serializing it again reproduces the same bytes.
"""

from __future__ import annotations

import json
import math

import jsonschema

from .core import STATUSES, Instance, ItemType, Solution, UKBWError

SCHEMA_VERSION = "ukbw-1"

_number = {"type": "number"}

INSTANCE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "items", "target_weight"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "items": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["value", "w_min", "w_max"],
                "properties": {"value": _number, "w_min": _number, "w_max": _number},
            },
        },
        "target_weight": _number,
    },
}

SOLUTION_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "status"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "status": {"enum": list(STATUSES)},
        "counts": {"type": "array", "items": {"type": "integer"}},
        "weights": {"type": "array", "items": _number},
        "objective": _number,
        "sigma": _number,
        "degenerate": {"type": "boolean"},
    },
    "dependentRequired": {"counts": ["weights", "objective"]},
}


class FormatError(UKBWError, ValueError):
    """Malformed or schema-violating document."""


def _reject_constant(name):
    raise ValueError(f"non-finite number {name} is not allowed")


def _load(text, schema, what):
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise FormatError(f"{what}: syntax error at line {e.lineno}, column {e.colno}: {e.msg}")
    except ValueError as e:
        raise FormatError(f"{what}: {e}")
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        msgs = []
        for e in errors:
            where = "/".join(str(p) for p in e.absolute_path) or "<root>"
            msgs.append(f"{where}: {e.message}")
        raise FormatError(f"{what}: schema violation: " + "; ".join(msgs))
    return doc


def parse_instance(text: bytes | str) -> Instance:
    doc = _load(text, INSTANCE_SCHEMA, "instance")
    items = [ItemType(float(it["value"]), float(it["w_min"]), float(it["w_max"]))
             for it in doc["items"]]
    instance = Instance(tuple(items), float(doc["target_weight"]))
    instance.require_valid()
    return instance


def parse_solution(text: bytes | str) -> Solution:
    doc = _load(text, SOLUTION_SCHEMA, "solution")
    return Solution(
        status=doc["status"],
        configuration=None if "counts" not in doc else [int(c) for c in doc["counts"]],
        weights=doc.get("weights"),
        objective=None if "objective" not in doc else float(doc["objective"]),
        sigma=None if "sigma" not in doc else float(doc["sigma"]),
        degenerate=doc.get("degenerate"),
    )


def fmt_number(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite number {x!r}")
    s = format(x, ".17g")
    return "0" if s == "-0" else s


def _fmt_list(xs, fmt) -> str:
    return "[" + ", ".join(fmt(x) for x in xs) + "]"


def _document(fields) -> bytes:
    body = ",\n".join(f"  {json.dumps(k)}: {v}" for k, v in fields)
    return ("{\n" + body + "\n}\n").encode("utf-8")


def serialize_instance(instance: Instance) -> bytes:
    items = ",\n".join(
        f'    {{"value": {fmt_number(it.value)}, "w_min": {fmt_number(it.w_min)}, '
        f'"w_max": {fmt_number(it.w_max)}}}'
        for it in instance.items)
    return _document([
        ("schema_version", json.dumps(SCHEMA_VERSION)),
        ("items", "[\n" + items + "\n  ]" if items else "[]"),
        ("target_weight", fmt_number(instance.target_weight)),
    ])


def serialize_solution(solution: Solution) -> bytes:
    fields = [("schema_version", json.dumps(SCHEMA_VERSION)),
              ("status", json.dumps(solution.status))]
    if solution.configuration is not None:
        fields += [
            ("counts", _fmt_list(solution.configuration, lambda c: str(int(c)))),
            ("weights", _fmt_list(solution.weights or (), fmt_number)),
            ("objective", fmt_number(solution.objective)),
        ]
        if solution.sigma is not None:
            fields.append(("sigma", fmt_number(solution.sigma)))
        if solution.degenerate is not None:
            fields.append(("degenerate", json.dumps(bool(solution.degenerate))))
    return _document(fields)
