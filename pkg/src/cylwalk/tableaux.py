"""Standard and oscillating cylindric tableaux.

A standard cylindric tableau (SCT) fills the cells of a skew shape
``outer / inner`` with ``1..n`` so that entries increase along rows and down
columns, including across the seam where row ``d + 1`` is row 1 shifted
left by ``L``.  It is stored as the tuple ``cells`` where ``cells[k - 1]``
is the (canonical) cell holding ``k``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping, NamedTuple, Sequence

from .shapes import (
    Cell,
    DomainError,
    Shape,
    add_cell,
    addable_rows,
    canonical_cell,
    complement,
    conjugate,
    contains,
    cover_row,
    remove_cell,
    removable_rows,
    skew_cells,
)


class TableauError(DomainError):
    kind = "tableau"


class Violation(NamedTuple):
    """Two cells whose entries break the increase condition."""

    first: Cell
    second: Cell
    reason: str


@dataclass(frozen=True)
class SCT:
    inner: Shape
    outer: Shape
    cells: tuple[Cell, ...]
    _checked: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self) -> None:
        if (self.inner.d, self.inner.L) != (self.outer.d, self.outer.L):
            raise TableauError("inner and outer shapes have different periods")
        if not contains(self.inner, self.outer):
            raise TableauError(f"inner shape {self.inner} is not contained in {self.outer}")
        if sorted(self.cells) != skew_cells(self.outer, self.inner):
            raise TableauError("entries do not fill the skew shape exactly")
        if self._checked:
            bad = validate_sct(self)
            if bad is not None:
                raise TableauError(
                    f"entries not increasing: {bad.first} and {bad.second} ({bad.reason})"
                )

    @classmethod
    def from_entries(cls, inner: Shape, outer: Shape, entries: Mapping[Cell, int], *, check: bool = True) -> SCT:
        """Build from a map ``cell -> value``; cells may be given in any representative."""
        d, L = inner.d, inner.L
        placed: dict[int, Cell] = {}
        for (r, c), v in entries.items():
            if v in placed:
                raise TableauError(f"value {v} appears twice")
            placed[v] = canonical_cell(d, L, r, c)
        n = len(placed)
        if sorted(placed) != list(range(1, n + 1)):
            raise TableauError(f"values must be exactly 1..{n}")
        return cls(inner, outer, tuple(placed[k] for k in range(1, n + 1)), check)

    @classmethod
    def empty(cls, shape: Shape) -> SCT:
        return cls(shape, shape, ())

    @property
    def d(self) -> int:
        return self.inner.d

    @property
    def L(self) -> int:
        return self.inner.L

    @property
    def n(self) -> int:
        return len(self.cells)

    @cached_property
    def entries(self) -> dict[Cell, int]:
        return {c: k for k, c in enumerate(self.cells, start=1)}

    def value_at(self, row: int, col: int) -> int | None:
        return self.entries.get(canonical_cell(self.d, self.L, row, col))

    def row_entries(self, i: int) -> list[int]:
        """Entries of row ``i`` from left to right."""
        return [self.entries[(i, j)] for j in range(self.inner[i] + 1, self.outer[i] + 1)]


def validate_sct(T: SCT) -> Violation | None:
    """First violating pair, scanning rows top to bottom and each row left to right.

    For each cell the right neighbour is checked before the one below.
    """
    for (i, j) in skew_cells(T.outer, T.inner):
        v = T.entries[(i, j)]
        right = T.value_at(i, j + 1)
        if right is not None and right < v:
            return Violation((i, j), (i, j + 1), "row")
        below_cell = canonical_cell(T.d, T.L, i + 1, j)
        below = T.entries.get(below_cell)
        if below is not None and below < v:
            return Violation((i, j), below_cell, "column")
    return None


def walk_rep(T: SCT) -> list[Shape]:
    """Outer shapes of the sub-tableaux on entries ``1..k`` for ``k = 0..n``."""
    shapes = [T.inner]
    for row, _ in T.cells:
        shapes.append(add_cell(shapes[-1], row))
    return shapes


def walk_rows(T: SCT) -> list[int]:
    """Row of each entry in increasing order."""
    return [row for row, _ in T.cells]


def sct_from_walk_rep(shapes: Sequence[Shape]) -> SCT:
    if not shapes:
        raise TableauError("a walk representation needs at least one shape")
    cells = []
    for a, b in zip(shapes, shapes[1:]):
        i = cover_row(a, b)
        if i is None:
            raise TableauError(f"{b} does not cover {a}")
        cells.append((i, b[i]))
    # A chain of shapes always yields an increasing filling.
    return SCT(shapes[0], shapes[-1], tuple(cells), False)


def sct_from_rows(inner: Shape, rows: Sequence[int]) -> SCT:
    """Tableau whose entry ``k`` sits at the end of row ``rows[k - 1]``."""
    shapes = [inner]
    for i in rows:
        shapes.append(add_cell(shapes[-1], i))
    return sct_from_walk_rep(shapes)


def conjugate_sct(T: SCT) -> SCT:
    """Transpose ``T``; the result has period ``(L, d)``."""
    entries = {(j, i): k for k, (i, j) in enumerate(T.cells, start=1)}
    return SCT.from_entries(conjugate(T.inner), conjugate(T.outer), entries)


def complement_sct(T: SCT) -> SCT:
    """Rotate ``T`` by 180 degrees and replace entry ``k`` with ``n + 1 - k``."""
    d, L, n = T.d, T.L, T.n
    cells = tuple(
        canonical_cell(d, L, d + 1 - i, L + 1 - j) for (i, j) in reversed(T.cells)
    )
    return SCT(complement(T.outer), complement(T.inner), cells, False)


def enumerate_sct(inner: Shape, n: int) -> Iterator[SCT]:
    """All tableaux with the given inner shape and ``n`` entries."""
    def rec(shapes: list[Shape]) -> Iterator[SCT]:
        if len(shapes) == n + 1:
            yield sct_from_walk_rep(shapes)
            return
        for i in addable_rows(shapes[-1]):
            shapes.append(add_cell(shapes[-1], i))
            yield from rec(shapes)
            shapes.pop()

    yield from rec([inner])


def enumerate_sct_outer(outer: Shape, n: int) -> Iterator[SCT]:
    """All tableaux with the given outer shape and ``n`` entries."""
    def rec(shapes: list[Shape]) -> Iterator[SCT]:
        if len(shapes) == n + 1:
            yield sct_from_walk_rep(shapes[::-1])
            return
        for i in removable_rows(shapes[-1]):
            shapes.append(remove_cell(shapes[-1], i))
            yield from rec(shapes)
            shapes.pop()

    yield from rec([outer])


def enumerate_skew_sct(outer: Shape, inner: Shape) -> Iterator[SCT]:
    """All tableaux of shape ``outer / inner``."""
    if not contains(inner, outer):
        return
    n = outer.size - inner.size

    def rec(shapes: list[Shape]) -> Iterator[SCT]:
        cur = shapes[-1]
        if len(shapes) == n + 1:
            yield sct_from_walk_rep(shapes)
            return
        for i in addable_rows(cur):
            if cur.rows[i - 1] < outer.rows[i - 1]:
                shapes.append(add_cell(cur, i))
                yield from rec(shapes)
                shapes.pop()

    yield from rec([inner])


def random_sct(d: int, L: int, alpha: Sequence[int], n: int, seed: int) -> SCT:
    """Grow ``n`` cells outward from ``alpha``, picking an addable row uniformly each step."""
    rng = random.Random(seed)
    shapes = [Shape(d, L, tuple(alpha))]
    for _ in range(n):
        shapes.append(add_cell(shapes[-1], rng.choice(addable_rows(shapes[-1]))))
    return sct_from_walk_rep(shapes)


# Oscillating tableaux

@dataclass(frozen=True)
class OCT:
    shapes: tuple[Shape, ...]

    def __post_init__(self) -> None:
        if not self.shapes:
            raise TableauError("an oscillating tableau needs at least one shape")
        for k, (a, b) in enumerate(zip(self.shapes, self.shapes[1:]), start=1):
            if cover_row(a, b) is None and cover_row(b, a) is None:
                raise TableauError(f"step {k}: {a} and {b} do not differ by one cell")

    @property
    def n(self) -> int:
        return len(self.shapes) - 1


def oct_make(shapes: Sequence[Shape]) -> OCT:
    return OCT(tuple(shapes))


def oct_type(oct: OCT) -> str:
    return "".join(
        "+" if cover_row(a, b) is not None else "-" for a, b in zip(oct.shapes, oct.shapes[1:])
    )


def oct_steps(oct: OCT) -> list[tuple[int, str]]:
    """``(row, sign)`` for every step of the tableau."""
    steps = []
    for a, b in zip(oct.shapes, oct.shapes[1:]):
        up = cover_row(a, b)
        steps.append((up, "+") if up is not None else (cover_row(b, a), "-"))
    return steps


def oct_reverse(oct: OCT) -> OCT:
    return OCT(oct.shapes[::-1])


def flip_word(w: str) -> str:
    """Reverse a type word and exchange its signs."""
    return w[::-1].translate(str.maketrans("+-", "-+"))


def enumerate_oct(alpha: Shape, w: str) -> Iterator[OCT]:
    """All oscillating tableaux of type ``w`` starting at ``alpha``."""
    def rec(shapes: list[Shape]) -> Iterator[OCT]:
        k = len(shapes) - 1
        if k == len(w):
            yield OCT(tuple(shapes))
            return
        cur = shapes[-1]
        if w[k] == "+":
            nxt = [add_cell(cur, i) for i in addable_rows(cur)]
        else:
            nxt = [remove_cell(cur, i) for i in removable_rows(cur)]
        for s in nxt:
            shapes.append(s)
            yield from rec(shapes)
            shapes.pop()

    yield from rec([alpha])


def random_oct(d: int, L: int, alpha: Sequence[int], w: str, seed: int) -> OCT:
    rng = random.Random(seed)
    shapes = [Shape(d, L, tuple(alpha))]
    for sign in w:
        cur = shapes[-1]
        if sign == "+":
            shapes.append(add_cell(cur, rng.choice(addable_rows(cur))))
        elif sign == "-":
            shapes.append(remove_cell(cur, rng.choice(removable_rows(cur))))
        else:
            raise TableauError(f"type words use '+' and '-', got {sign!r}")
    return OCT(tuple(shapes))


# Straight-shape tableaux and evacuation

def straight_rows(T: SCT) -> list[list[int]]:
    """Rows of a tableau with inner shape ``[0, ..., 0]`` viewed as an ordinary Young tableau.

    Requires ``d`` and ``L`` to be at least ``n`` so that the cylinder does not
    interact with the filling.
    """
    if any(r != 0 for r in T.inner.rows) or T.d < T.n or T.L < T.n:
        raise TableauError("expected inner shape [0,...,0] with d, L >= n")
    return [row for i in range(1, T.d + 1) if (row := T.row_entries(i))]


def sct_from_straight(rows: Sequence[Sequence[int]], d: int, L: int) -> SCT:
    shape = [len(r) for r in rows] + [0] * (d - len(rows))
    entries = {(i, j): v for i, r in enumerate(rows, start=1) for j, v in enumerate(r, start=1)}
    return SCT.from_entries(Shape(d, L, (0,) * d), Shape(d, L, tuple(shape)), entries)


def _delta(rows: list[list[int]]) -> tuple[list[list[int]], tuple[int, int]]:
    """Remove the entry 1, slide the hole out by jeu de taquin, decrement.

    Returns the new rows and the (0-based) position the hole left through.
    """
    rows = [list(r) for r in rows]
    i, j = 0, 0
    while True:
        right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
        below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[i][j] = right
            j += 1
        else:
            rows[i][j] = below
            i += 1
    rows[i].pop()
    if not rows[i]:
        rows.pop()
    return [[v - 1 for v in r] for r in rows], (i, j)


def evacuation_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Schützenberger evacuation of a standard Young tableau given by rows."""
    n = sum(len(r) for r in rows)
    out = [[0] * len(r) for r in rows]
    cur = [list(r) for r in rows]
    for k in range(n):
        cur, (i, j) = _delta(cur)
        out[i][j] = n - k
    return out


def evacuation_syt(T: SCT) -> SCT:
    """Evacuation of a straight-shape tableau encoded over a large enough period."""
    return sct_from_straight(evacuation_rows(straight_rows(T)), T.d, T.L)


def standard_young_tableaux(shape: Sequence[int]) -> Iterator[list[list[int]]]:
    """All standard Young tableaux of a partition shape, as rows."""
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def rec(k: int) -> Iterator[list[list[int]]]:
        if k > n:
            yield [list(r) for r in rows]
            return
        for i, target in enumerate(shape):
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                yield from rec(k + 1)
                rows[i].pop()

    yield from rec(1)


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def descents(rows: Sequence[Sequence[int]]) -> set[int]:
    """Entries ``k`` such that ``k + 1`` lies in a strictly lower row."""
    where = {v: i for i, r in enumerate(rows) for v in r}
    return {k for k in where if k + 1 in where and where[k + 1] > where[k]}
