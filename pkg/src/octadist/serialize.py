"""Wire formats shared by the library and the CLI.

Points travel as {"home": "F3", "shared": "F4", "x": 0.4, "y": 0.3};
query records as {"p1": <point>, "p2": <point>, "id": <optional str>}.
All numbers are emitted with 17 significant digits so that doubles
round-trip exactly and output is byte-deterministic.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .coords import InvalidRepresentation, Representation
from .landscape import DistanceResult, TrailResult


class BadRecord(ValueError):
    """A query record is structurally malformed."""


def format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError("non-finite numbers have no wire representation")
    return format(value, ".17g")


def dumps(obj: Any) -> str:
    """Deterministic single-line JSON with 17-significant-digit floats."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {dumps(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _parse_face(value: Any, field: str) -> int:
    if isinstance(value, str) and value.startswith("F"):
        value = value[1:]
        if value.isdigit():
            value = int(value)
    if isinstance(value, int) and not isinstance(value, bool) and 1 <= value <= 8:
        return value
    raise BadRecord(f"{field} must be a face label 'F1'..'F8'")


def parse_point(obj: Any) -> Representation:
    """Parse a point literal into a validated representation."""
    if not isinstance(obj, dict):
        raise BadRecord("point literal must be an object")
    home = _parse_face(obj.get("home"), "home")
    shared = _parse_face(obj.get("shared"), "shared")
    x = obj.get("x")
    y = obj.get("y")
    if not isinstance(x, (int, float)) or isinstance(x, bool):
        raise BadRecord("x must be a number")
    if not isinstance(y, (int, float)) or isinstance(y, bool):
        raise BadRecord("y must be a number")
    return Representation(home, shared, float(x), float(y))


def point_to_obj(rep: Representation) -> dict:
    return {"home": f"F{rep.home}", "shared": f"F{rep.shared}", "x": rep.x, "y": rep.y}


def load_record(line: str) -> dict:
    """Parse one query line into a record object, validating only its shape."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise BadRecord(f"invalid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise BadRecord("record must be a JSON object")
    record_id = obj.get("id")
    if record_id is not None and not isinstance(record_id, str):
        raise BadRecord("id must be a string")
    return obj


def parse_record(line: str) -> tuple[Representation, Representation, str | None]:
    """Parse one query line into (p1, p2, id)."""
    obj = load_record(line)
    return parse_point(obj.get("p1")), parse_point(obj.get("p2")), obj.get("id")


def error_obj(exc: Exception, record_id: str | None = None) -> dict:
    kind = type(exc).__name__
    if isinstance(exc, InvalidRepresentation):
        kind = "InvalidRepresentation"
    elif isinstance(exc, BadRecord):
        kind = "BadRecord"
    out: dict = {}
    if record_id is not None:
        out["id"] = record_id
    out["error"] = kind
    out["detail"] = str(exc)
    return out


def _crossings_obj(trail: TrailResult) -> list:
    return [
        {
            "edge": [sorted(c.edge[0]), sorted(c.edge[1])],
            "point": [c.point.x, c.point.y],
            "t": c.parameter,
        }
        for c in trail.crossings
    ]


def distance_result_to_obj(result: DistanceResult, record_id: str | None = None) -> dict:
    out: dict = {}
    if record_id is not None:
        out["id"] = record_id
    out["distance"] = result.distance
    out["argmin"] = [f"L{i}" for i in result.argmin]
    out["fallback"] = result.fallback
    return out


def trail_result_to_obj(result: DistanceResult, record_id: str | None = None) -> dict:
    """Path output: the minimizing trail, reporting the distance as its length."""
    trail = result.trail
    out: dict = {}
    if record_id is not None:
        out["id"] = record_id
    out["length"] = result.distance
    out["landscape"] = None if trail.landscape is None else trail.landscape.name
    out["faces"] = (
        None if trail.landscape is None else [f"F{f}" for f in trail.landscape.faces]
    )
    out["crossings"] = _crossings_obj(trail)
    out["contained"] = trail.contained
    out["fallback"] = result.fallback
    return out
