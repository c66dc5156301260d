"""JSON encoding of every object the command line reads or writes."""

from __future__ import annotations

import json
from typing import Any

from .growth import DiagramViolation, GrowthDiagram
from .models import Necklace, Walk, WalkError, simplex_point, tasep_state
from .shapes import DomainError, Shape
from .tableaux import OCT, SCT, Violation


class DecodeError(DomainError):
    kind = "decode"


def dumps(obj: Any) -> str:
    """Compact, key-order-preserving serialisation used for all output."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"invalid JSON: {exc}") from None


def _field(obj: Any, key: str, what: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise DecodeError(f"{what} needs a {key!r} field")
    return obj[key]


# Shapes and cells

def encode_shape(s: Shape) -> dict:
    return {"d": s.d, "L": s.L, "rows": list(s.rows)}


def decode_shape(obj: Any) -> Shape:
    d, L, rows = (_field(obj, k, "shape") for k in ("d", "L", "rows"))
    if not isinstance(rows, list):
        raise DecodeError("shape rows must be a list")
    return Shape(d, L, tuple(rows))


def encode_cell(cell: tuple[int, int]) -> dict:
    return {"row": cell[0], "col": cell[1]}


# Tableaux

def encode_sct(T: SCT) -> dict:
    return {
        "inner": encode_shape(T.inner),
        "outer": encode_shape(T.outer),
        "entries": [{"row": r, "col": c, "value": k} for k, (r, c) in enumerate(T.cells, start=1)],
    }


def decode_sct(obj: Any, *, check: bool = True) -> SCT:
    inner = decode_shape(_field(obj, "inner", "tableau"))
    outer = decode_shape(_field(obj, "outer", "tableau"))
    entries = {}
    for e in _field(obj, "entries", "tableau"):
        cell = (_field(e, "row", "entry"), _field(e, "col", "entry"))
        if cell in entries:
            raise DecodeError(f"cell {cell} is filled twice")
        entries[cell] = _field(e, "value", "entry")
    return SCT.from_entries(inner, outer, entries, check=check)


def encode_oct(o: OCT) -> dict:
    return {"shapes": [encode_shape(s) for s in o.shapes]}


def decode_oct(obj: Any) -> OCT:
    return OCT(tuple(decode_shape(s) for s in _field(obj, "shapes", "oscillating tableau")))


def decode_tableau(obj: Any) -> SCT | OCT:
    """Either kind of tableau, told apart by its fields."""
    if isinstance(obj, dict) and "shapes" in obj:
        return decode_oct(obj)
    return decode_sct(obj)


def encode_violation(v: Violation | None) -> dict | None:
    if v is None:
        return None
    return {"first": encode_cell(v.first), "second": encode_cell(v.second), "reason": v.reason}


# Walk models

def encode_vertex(model: str, v: Any) -> dict:
    if model == "shapes":
        return encode_shape(v)
    if model == "simplex":
        return {"coords": list(v)}
    if model == "tasep":
        return {"bits": v}
    if model == "necklace":
        return {"canonical": v.canonical}
    raise WalkError(f"unknown model {model!r}")


def decode_vertex(model: str, obj: Any) -> Any:
    if model == "shapes":
        return decode_shape(obj)
    if model == "simplex":
        coords = _field(obj, "coords", "simplex point")
        if not isinstance(coords, list):
            raise DecodeError("coords must be a list")
        return simplex_point(coords)
    if model == "tasep":
        return tasep_state(_field(obj, "bits", "state"))
    if model == "necklace":
        return Necklace(tasep_state(_field(obj, "canonical", "necklace")))
    raise WalkError(f"unknown model {model!r}")


def encode_walk(w: Walk) -> dict:
    return {
        "model": w.model,
        "start": encode_vertex(w.model, w.start),
        "steps": [{"i": i, "sign": s} for i, s in w.steps],
    }


def decode_walk(obj: Any) -> Walk:
    model = _field(obj, "model", "walk")
    start = decode_vertex(model, _field(obj, "start", "walk"))
    steps = []
    for st in _field(obj, "steps", "walk"):
        i, sign = _field(st, "i", "step"), _field(st, "sign", "step")
        if sign not in ("+", "-") or not isinstance(i, int):
            raise DecodeError(f"bad step {st!r}")
        steps.append((i, sign))
    return Walk(model, start, tuple(steps))


# Growth diagrams

def encode_diagram(g: GrowthDiagram) -> dict:
    return {"m": g.m, "n": g.n, "labels": [[encode_shape(s) for s in row] for row in g.labels]}


def decode_diagram(obj: Any) -> GrowthDiagram:
    m, n = _field(obj, "m", "diagram"), _field(obj, "n", "diagram")
    labels = tuple(tuple(decode_shape(s) for s in row) for row in _field(obj, "labels", "diagram"))
    return GrowthDiagram(m, n, labels)


def encode_diagram_violation(v: DiagramViolation | None) -> dict | None:
    return None if v is None else {"x": v.x, "y": v.y, "reason": v.reason}
