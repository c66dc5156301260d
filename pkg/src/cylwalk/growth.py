"""Cylindric growth diagrams.

A diagram of width ``m`` and height ``n`` labels each lattice point
``(x, y)``, ``0 <= x <= m``, ``0 <= y <= n``, with a shape.  Going one step
right or up adds exactly one cell, and every unit square obeys the local
rules below.  Coordinates are Cartesian with the origin at the bottom left;
``labels[y][x]`` holds the label of ``(x, y)``.

Forward rule, computing the upper right corner of a square:
  * if the upper left and lower right labels differ, take their union;
  * otherwise both add a cell to the lower left label in some row ``i`` and
    the upper right adds a cell to them in row ``i + 1`` (row ``d + 1``
    being row 1 of the next period).

The backward rule inverts it with intersections and ``i + 1 -> i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .shapes import (
    DomainError,
    Shape,
    add_cell,
    addable_rows,
    cover_row,
    remove_cell,
    removable_rows,
    shape_intersection,
    shape_union,
)
from .tableaux import OCT, SCT, flip_word, oct_type, sct_from_walk_rep, walk_rep


class GrowthError(DomainError):
    kind = "growth"


class DiagramViolation(NamedTuple):
    """Lower-left corner of the first bad square and what is wrong with it."""

    x: int
    y: int
    reason: str


@dataclass(frozen=True)
class GrowthDiagram:
    m: int
    n: int
    labels: tuple[tuple[Shape, ...], ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.n + 1 or any(len(r) != self.m + 1 for r in self.labels):
            raise GrowthError(f"labels must form a {self.n + 1} x {self.m + 1} array")

    def __getitem__(self, xy: tuple[int, int]) -> Shape:
        x, y = xy
        return self.labels[y][x]

    def transpose(self) -> GrowthDiagram:
        return GrowthDiagram(self.n, self.m, tuple(zip(*self.labels)))


@lru_cache(maxsize=1 << 16)
def forward_local(ll: Shape, ul: Shape, lr: Shape) -> Shape:
    i = cover_row(ll, ul)
    j = cover_row(ll, lr)
    if i is None or j is None:
        raise GrowthError(f"{ul} and {lr} must both cover {ll}")
    if ul != lr:
        return shape_union(ul, lr)
    nxt = i % ll.d + 1
    if nxt not in addable_rows(ul):
        raise GrowthError(f"row {nxt} of {ul} is not addable")
    return add_cell(ul, nxt)


@lru_cache(maxsize=1 << 16)
def backward_local(ul: Shape, lr: Shape, ur: Shape) -> Shape:
    i = cover_row(ul, ur)
    j = cover_row(lr, ur)
    if i is None or j is None:
        raise GrowthError(f"{ur} must cover both {ul} and {lr}")
    if ul != lr:
        return shape_intersection(ul, lr)
    prev = (i - 2) % ul.d + 1
    if prev not in removable_rows(ul):
        raise GrowthError(f"row {prev} of {ul} is not removable")
    return remove_cell(ul, prev)


def path_points(w: str) -> list[tuple[int, int]]:
    """Lattice points visited by the path of ``w`` from ``(0, n)`` to ``(m, 0)``."""
    n = w.count("-")
    x, y = 0, n
    pts = [(x, y)]
    for s in w:
        if s == "+":
            x += 1
        elif s == "-":
            y -= 1
        else:
            raise GrowthError(f"type words use '+' and '-', got {s!r}")
        pts.append((x, y))
    return pts


def complete_from_path(w: str, labels: Sequence[Shape]) -> GrowthDiagram:
    """The unique diagram carrying ``labels`` along the path of ``w``."""
    if len(labels) != len(w) + 1:
        raise GrowthError(f"path of length {len(w)} needs {len(w) + 1} labels, got {len(labels)}")
    if oct_type(OCT(tuple(labels))) != w:
        raise GrowthError("path labels do not have the given type")
    m, n = w.count("+"), w.count("-")
    grid: list[list[Shape | None]] = [[None] * (m + 1) for _ in range(n + 1)]
    for (x, y), shape in zip(path_points(w), labels):
        grid[y][x] = shape
    # Above and to the right of the path.
    for x in range(1, m + 1):
        for y in range(1, n + 1):
            if grid[y][x] is None and grid[y - 1][x - 1] is not None:
                grid[y][x] = forward_local(grid[y - 1][x - 1], grid[y][x - 1], grid[y - 1][x])
    # Below and to the left.
    for x in range(m - 1, -1, -1):
        for y in range(n - 1, -1, -1):
            if grid[y][x] is None:
                grid[y][x] = backward_local(grid[y + 1][x], grid[y][x + 1], grid[y + 1][x + 1])
    return GrowthDiagram(m, n, tuple(tuple(r) for r in grid))


def read_path(diagram: GrowthDiagram, w: str) -> list[Shape]:
    if w.count("+") != diagram.m or w.count("-") != diagram.n:
        raise GrowthError(f"word {w!r} is not a path across a {diagram.m} x {diagram.n} diagram")
    return [diagram[p] for p in path_points(w)]


def read_boundary(diagram: GrowthDiagram, side: str) -> list[Shape]:
    """Boundary labels, bottom to top for left/right, left to right for bottom/top."""
    if side == "left":
        return [row[0] for row in diagram.labels]
    if side == "right":
        return [row[-1] for row in diagram.labels]
    if side == "bottom":
        return list(diagram.labels[0])
    if side == "top":
        return list(diagram.labels[-1])
    raise GrowthError(f"unknown side {side!r}")


def grow_from_TU(T: SCT, U: SCT) -> GrowthDiagram:
    if T.inner != U.inner:
        raise GrowthError(f"inner shapes differ: {T.inner} vs {U.inner}")
    left, bottom = walk_rep(T), walk_rep(U)
    n, m = len(left) - 1, len(bottom) - 1
    grid: list[list[Shape]] = [[None] * (m + 1) for _ in range(n + 1)]  # type: ignore[list-item]
    grid[0] = list(bottom)
    for y in range(1, n + 1):
        grid[y][0] = left[y]
        for x in range(1, m + 1):
            grid[y][x] = forward_local(grid[y - 1][x - 1], grid[y][x - 1], grid[y - 1][x])
    return GrowthDiagram(m, n, tuple(tuple(r) for r in grid))


def crs_by_growth(T: SCT, U: SCT) -> tuple[SCT, SCT]:
    """``(P, Q)`` read from the right and top boundaries of ``grow_from_TU(T, U)``."""
    g = grow_from_TU(T, U)
    return sct_from_walk_rep(read_boundary(g, "right")), sct_from_walk_rep(read_boundary(g, "top"))


def shrink_from_PQ(P: SCT, Q: SCT) -> GrowthDiagram:
    """Diagram with right boundary ``walk_rep(P)`` and top boundary ``walk_rep(Q)``."""
    if P.outer != Q.outer:
        raise GrowthError(f"outer shapes differ: {P.outer} vs {Q.outer}")
    top, right = walk_rep(Q), walk_rep(P)
    w = "+" * (len(top) - 1) + "-" * (len(right) - 1)
    return complete_from_path(w, top + right[::-1][1:])


def validate_diagram(diagram: GrowthDiagram) -> DiagramViolation | None:
    """First square (scanning rows bottom up, left to right) breaking the edge or square rules."""
    g = diagram
    for y in range(g.n + 1):
        for x in range(g.m + 1):
            here = g[x, y]
            if (here.d, here.L) != (g[0, 0].d, g[0, 0].L):
                return DiagramViolation(x, y, "period mismatch")
    for y in range(max(g.n, 1)):
        for x in range(max(g.m, 1)):
            edges = []
            if x < g.m:
                edges.append(((x, y), (x + 1, y)))
                if y < g.n:
                    edges.append(((x, y + 1), (x + 1, y + 1)))
            if y < g.n:
                edges.append(((x, y), (x, y + 1)))
                if x < g.m:
                    edges.append(((x + 1, y), (x + 1, y + 1)))
            for a, b in edges:
                if cover_row(g[a], g[b]) is None:
                    return DiagramViolation(x, y, f"{g[b]} at {b} does not cover {g[a]} at {a}")
            if x < g.m and y < g.n:
                ur = forward_local(g[x, y], g[x, y + 1], g[x + 1, y])
                if ur != g[x + 1, y + 1]:
                    return DiagramViolation(x, y, f"square rule gives {ur}, found {g[x + 1, y + 1]}")
    return None


def symmetric_diagram(oct: OCT) -> GrowthDiagram:
    """Complete the palindromic tableau ``oct`` followed by its reverse."""
    w = oct_type(oct)
    return complete_from_path(w + flip_word(w), list(oct.shapes) + list(oct.shapes[-2::-1]))


def read_symmetric(diagram: GrowthDiagram, w: str) -> OCT:
    """First half of the path of ``w`` followed by its flip in a symmetric diagram."""
    return OCT(tuple(read_path(diagram, w + flip_word(w))[: len(w) + 1]))


def retype_oct(oct: OCT, w_new: str, *, symmetric: bool = False) -> OCT:
    """Move ``oct`` to the oscillating tableau of type ``w_new`` in the same diagram.

    Without ``symmetric`` both endpoints are kept and ``w_new`` must have as
    many ``+`` and ``-`` signs as the type of ``oct``.  With ``symmetric`` only
    the start is kept: the tableau is doubled into a palindrome, completed, and
    the first half of the path of ``w_new`` followed by its flip is read off.
    """
    w = oct_type(oct)
    if symmetric:
        if len(w_new) != len(w):
            raise GrowthError(f"new type has length {len(w_new)}, expected {len(w)}")
        return read_symmetric(symmetric_diagram(oct), w_new)
    if sorted(w_new) != sorted(w):
        raise GrowthError(f"type {w_new!r} does not have the sign counts of {w!r}")
    return OCT(tuple(read_path(complete_from_path(w, oct.shapes), w_new)))
