"""Internal row insertion and the cylindric Robinson-Schensted correspondence."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import NamedTuple

from .growth import read_boundary, shrink_from_PQ
from .models import Walk, map_f, shape_over
from .shapes import DomainError, Shape
from .tableaux import SCT, complement_sct, sct_from_rows, sct_from_walk_rep


class InsertionError(DomainError):
    kind = "insertion"


class InsertionTrace(NamedTuple):
    result: SCT
    terminal_row: int
    # (row, entry displaced there) for each row visited; None marks the new cell.
    bumping_path: list[tuple[int, int | None]]


def _rows(T: SCT) -> dict[int, list[int]]:
    return {r: T.row_entries(r) for r in range(1, T.d + 1)}


def _rebuild(T: SCT, inner: list[int], outer: list[int], rows: dict[int, list[int]]) -> SCT:
    entries = {(r, inner[r - 1] + k): v for r, row in rows.items() for k, v in enumerate(row, start=1)}
    return SCT.from_entries(Shape(T.d, T.L, tuple(inner)), Shape(T.d, T.L, tuple(outer)), entries)


def internal_insertion(T: SCT, i: int) -> InsertionTrace:
    """Insert at the inner corner of row ``i``.

    The entry in the first cell of row ``i`` leaves the tableau (that cell
    joins the inner shape) and is inserted into row ``i + 1``, where it
    displaces the smallest larger entry, which moves on to the following row,
    and so on until an entry lands at the end of a row.  An empty row ``i``
    just moves both boundaries one cell right.
    """
    d = T.d
    if not 1 <= i <= d or T.inner[i - 1] <= T.inner[i]:
        raise InsertionError(f"row {i} is not an insertion corner of {T.inner}")
    inner, outer = list(T.inner.rows), list(T.outer.rows)
    rows = _rows(T)
    inner[i - 1] += 1
    if not rows[i]:
        outer[i - 1] += 1
        return InsertionTrace(_rebuild(T, inner, outer, rows), i, [])
    a = rows[i].pop(0)
    path: list[tuple[int, int | None]] = []
    r = i
    while True:
        r = r % d + 1
        row = rows[r]
        k = bisect_right(row, a)
        if k == len(row):
            row.append(a)
            outer[r - 1] += 1
            path.append((r, None))
            return InsertionTrace(_rebuild(T, inner, outer, rows), r, path)
        a, row[k] = row[k], a
        path.append((r, a))


def reverse_insertion(P: SCT, t: int) -> tuple[SCT, int]:
    """Undo an insertion that ended in row ``t``; returns the tableau and the insertion row."""
    d = P.d
    if not 1 <= t <= d or P.outer[t] <= P.outer[t + 1]:
        raise InsertionError(f"row {t} of {P.outer} is not removable")
    inner, outer = list(P.inner.rows), list(P.outer.rows)
    rows = _rows(P)
    outer[t - 1] -= 1
    if not rows[t]:
        # Empty-row case: both boundaries move back.
        inner[t - 1] -= 1
        return _rebuild(P, inner, outer, rows), t
    a = rows[t].pop()
    r = t
    while True:
        r = (r - 2) % d + 1
        row = rows[r]
        k = bisect_left(row, a)
        if k == 0:
            row.insert(0, a)
            inner[r - 1] -= 1
            return _rebuild(P, inner, outer, rows), r
        a, row[k - 1] = row[k - 1], a


def crs_iterates(T: SCT, U: SCT) -> list[SCT]:
    """``P_0 = T`` and ``P_k`` = insertion of ``P_{k-1}`` at the row holding ``k`` in ``U``."""
    if T.inner != U.inner:
        raise InsertionError(f"inner shapes differ: {T.inner} vs {U.inner}")
    out = [T]
    for row, col in U.cells:
        P = out[-1]
        assert col == P.inner[row] + 1, "U entry is not at an inner corner of the current tableau"
        out.append(internal_insertion(P, row).result)
    return out


def crs_forward(T: SCT, U: SCT) -> tuple[SCT, SCT]:
    """Pairs with a common inner shape to pairs with a common outer shape."""
    iterates = crs_iterates(T, U)
    return iterates[-1], sct_from_walk_rep([P.outer for P in iterates])


def crs_inverse(P: SCT, Q: SCT) -> tuple[SCT, SCT]:
    """Inverse of ``crs_forward``, computed with the backward growth rules."""
    g = shrink_from_PQ(P, Q)
    return sct_from_walk_rep(read_boundary(g, "left")), sct_from_walk_rep(read_boundary(g, "bottom"))


def crs_inverse_bumping(P: SCT, Q: SCT) -> tuple[SCT, SCT]:
    """Inverse of ``crs_forward`` by undoing insertions, largest entry of ``Q`` first."""
    if P.outer != Q.outer:
        raise InsertionError(f"outer shapes differ: {P.outer} vs {Q.outer}")
    rows = []
    for t, _ in reversed(Q.cells):
        P, r = reverse_insertion(P, t)
        rows.append(r)
    return P, sct_from_rows(P.inner, rows[::-1])


def phi(T: SCT) -> SCT:
    """``SCT(alpha / .) -> SCT(. / alpha)``: the first half of ``crs_forward(T, T)``."""
    return crs_forward(T, T)[0]


def phi_inverse(P: SCT) -> SCT:
    return complement_sct(phi(complement_sct(P)))


def reverse_walk_bijection(walk: Walk) -> Walk:
    """Send an ``n``-step forward simplex walk from ``x`` to one ending at ``x``."""
    if walk.model != "simplex" or any(s != "+" for _, s in walk.steps):
        raise InsertionError("expected a simplex walk of forward steps")
    x = walk.start
    alpha = shape_over(x, sum(x))
    T = phi_inverse(sct_from_rows(alpha, [i for i, _ in walk.steps]))
    return Walk("simplex", map_f(T.inner), tuple((row, "+") for row, _ in T.cells))
