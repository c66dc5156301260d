"""Golden worked examples shipped with the package.

Each file in ``data/`` holds cases ``{"name", "op", "input", "expected"}``.
Running a case applies the named operation to the decoded input and
compares the compact JSON text of the result with that of ``expected``.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Any, Callable, Iterator, NamedTuple

from . import jsonio as J
from .growth import complete_from_path, grow_from_TU, retype_oct
from .insertion import crs_forward, crs_inverse, internal_insertion, phi, phi_inverse, reverse_walk_bijection
from .models import map_f, map_g, map_h, map_q, reverse_complement, walk_of_tableau, walk_to_tasep, walk_vertices
from .shapes import (
    addable_rows,
    boundary_word,
    complement,
    conjugate,
    corner_count,
    removable_rows,
    skew_cells,
    skew_size,
)
from .tableaux import complement_sct, conjugate_sct, oct_reverse, oct_type, validate_sct, walk_rep


def _insertion(arg: dict) -> dict:
    tr = internal_insertion(J.decode_sct(arg["T"]), arg["row"])
    return {
        "result": J.encode_sct(tr.result),
        "terminal_row": tr.terminal_row,
        "bumping_path": [{"row": r, "entry": "new-cell" if v is None else v} for r, v in tr.bumping_path],
    }


def _crs(arg: dict) -> dict:
    P, Q = crs_forward(J.decode_sct(arg["T"]), J.decode_sct(arg["U"]))
    return {"P": J.encode_sct(P), "Q": J.encode_sct(Q)}


def _crs_inv(arg: dict) -> dict:
    T, U = crs_inverse(J.decode_sct(arg["P"]), J.decode_sct(arg["Q"]))
    return {"T": J.encode_sct(T), "U": J.encode_sct(U)}


def _walk_states(walk) -> list:
    return [J.encode_vertex(walk.model, v) for v in walk_vertices(walk)]


def _shape_info(arg: dict) -> dict:
    s = J.decode_shape(arg)
    return {
        "boundary_word": boundary_word(s),
        "addable": addable_rows(s),
        "removable": removable_rows(s),
        "corner_count": corner_count(s),
    }


OPS: dict[str, Callable[[Any], Any]] = {
    "shape_info": _shape_info,
    "conjugate": lambda a: J.encode_shape(conjugate(J.decode_shape(a))),
    "complement": lambda a: J.encode_shape(complement(J.decode_shape(a))),
    "skew_size": lambda a: skew_size(J.decode_shape(a["outer"]), J.decode_shape(a["inner"])),
    "skew_cells": lambda a: [
        J.encode_cell(c) for c in skew_cells(J.decode_shape(a["outer"]), J.decode_shape(a["inner"]))
    ],
    "validate_sct": lambda a: J.encode_violation(validate_sct(J.decode_sct(a, check=False))),
    "walk_rep": lambda a: [J.encode_shape(s) for s in walk_rep(J.decode_sct(a))],
    "internal_insertion": _insertion,
    "map_f": lambda a: J.encode_vertex("simplex", map_f(J.decode_shape(a))),
    "map_g": lambda a: J.encode_vertex("necklace", map_g(J.decode_vertex("simplex", a))),
    "map_h": lambda a: J.encode_vertex("tasep", map_h(J.decode_shape(a))),
    "map_q": lambda a: J.encode_vertex("necklace", map_q(J.decode_vertex("tasep", a))),
    "reverse_complement": lambda a: J.encode_vertex("tasep", reverse_complement(J.decode_vertex("tasep", a))),
    "walk_of_tableau": lambda a: J.encode_walk(walk_of_tableau(J.decode_tableau(a))),
    "walk_to_tasep": lambda a: J.encode_walk(walk_to_tasep(J.decode_walk(a["walk"]), anchor=a["anchor"])),
    "walk_vertices": lambda a: _walk_states(J.decode_walk(a)),
    "tasep_states": lambda a: _walk_states(walk_to_tasep(J.decode_walk(a["walk"]), anchor=a["anchor"])),
    "conjugate_sct": lambda a: J.encode_sct(conjugate_sct(J.decode_sct(a))),
    "complement_sct": lambda a: J.encode_sct(complement_sct(J.decode_sct(a))),
    "crs": _crs,
    "crs_inverse": _crs_inv,
    "phi": lambda a: J.encode_sct(phi(J.decode_sct(a))),
    "phi_inverse": lambda a: J.encode_sct(phi_inverse(J.decode_sct(a))),
    "reverse_walk": lambda a: J.encode_walk(reverse_walk_bijection(J.decode_walk(a))),
    "grow": lambda a: J.encode_diagram(grow_from_TU(J.decode_sct(a["T"]), J.decode_sct(a["U"]))),
    "complete": lambda a: J.encode_diagram(
        complete_from_path(a["type"], [J.decode_shape(s) for s in a["shapes"]])
    ),
    "oct_type": lambda a: oct_type(J.decode_oct(a)),
    "oct_reverse": lambda a: J.encode_oct(oct_reverse(J.decode_oct(a))),
    "retype": lambda a: J.encode_oct(
        retype_oct(J.decode_oct(a["oct"]), a["to"], symmetric=a.get("symmetric", False))
    ),
}


class CaseResult(NamedTuple):
    file: str
    name: str
    passed: bool
    got: str
    expected: str


def fixture_files() -> list[str]:
    root = resources.files("cylwalk") / "data"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> dict:
    return json.loads((resources.files("cylwalk") / "data" / name).read_text(encoding="utf-8"))


def run_fixtures() -> Iterator[CaseResult]:
    for fname in fixture_files():
        for case in load_fixture(fname)["cases"]:
            expected = J.dumps(case["expected"])
            got = J.dumps(OPS[case["op"]](case["input"]))
            yield CaseResult(fname, case["name"], got == expected, got, expected)
