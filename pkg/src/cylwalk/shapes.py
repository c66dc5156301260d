"""Cylindric shapes of period (d, L).

A shape is a doubly infinite weakly decreasing integer sequence with
``lam[i] == lam[i + d] + L``.  It is stored through its window
``(lam[1], ..., lam[d])``; every other entry follows from periodicity.

Cells are equivalence classes of lattice points under
``<i, j> ~ <i - d, j + L>`` and are kept with their row reduced into
``[1, d]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DomainError(ValueError):
    """Raised when an input is not a valid combinatorial object."""

    kind = "domain"


class ShapeError(DomainError):
    kind = "shape"


Cell = tuple[int, int]


def canonical_cell(d: int, L: int, row: int, col: int) -> Cell:
    """Representative of ``<row, col>`` whose row lies in ``[1, d]``.

    >>> canonical_cell(3, 4, 4, 1)
    (1, 5)
    >>> canonical_cell(3, 4, 0, 5)
    (3, 1)
    """
    q, r = divmod(row - 1, d)
    return (r + 1, col + q * L)


@dataclass(frozen=True, slots=True)
class Shape:
    """A cylindric shape given by its window ``rows`` over period ``(d, L)``."""

    d: int
    L: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.d < 1 or self.L < 1:
            raise ShapeError(f"period must be positive, got d={self.d}, L={self.L}")
        if len(self.rows) != self.d:
            raise ShapeError(f"window has {len(self.rows)} entries, expected d={self.d}")
        if not all(isinstance(r, int) for r in self.rows):
            raise ShapeError("window entries must be integers")
        for i in range(1, self.d):
            if self.rows[i - 1] < self.rows[i]:
                raise ShapeError(f"row {i} ({self.rows[i - 1]}) is shorter than row {i + 1} ({self.rows[i]})")
        if self.rows[-1] + self.L < self.rows[0]:
            raise ShapeError(
                f"row 1 ({self.rows[0]}) exceeds row {self.d} + L ({self.rows[-1] + self.L})"
            )

    def __getitem__(self, i: int) -> int:
        """Entry ``lam[i]`` for any integer index."""
        q, r = divmod(i - 1, self.d)
        return self.rows[r] - q * self.L

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.rows)) + f"]@({self.d},{self.L})"

    @property
    def size(self) -> int:
        """Sum of the window entries.  Only differences of sizes are meaningful."""
        return sum(self.rows)

    def _with(self, rows: Iterable[int]) -> Shape:
        return Shape(self.d, self.L, tuple(rows))


def make_shape(d: int, L: int, rows: Sequence[int]) -> Shape:
    return Shape(d, L, tuple(rows))


def row_value(shape: Shape, i: int) -> int:
    return shape[i]


def _same_period(a: Shape, b: Shape) -> None:
    if (a.d, a.L) != (b.d, b.L):
        raise ShapeError(f"period mismatch: ({a.d},{a.L}) vs ({b.d},{b.L})")


def contains(mu: Shape, lam: Shape) -> bool:
    """True when ``mu`` is contained in ``lam``."""
    _same_period(mu, lam)
    return all(m <= l for m, l in zip(mu.rows, lam.rows))


def skew_size(lam: Shape, mu: Shape) -> int:
    if not contains(mu, lam):
        raise ShapeError(f"{mu} is not contained in {lam}")
    return lam.size - mu.size


def addable_rows(shape: Shape) -> list[int]:
    """Rows ``i`` in ``[1, d]`` where a cell can be added (``lam[i-1] > lam[i]``)."""
    return [i for i in range(1, shape.d + 1) if shape[i - 1] > shape[i]]


def removable_rows(shape: Shape) -> list[int]:
    """Rows ``i`` in ``[1, d]`` where a cell can be removed (``lam[i] > lam[i+1]``)."""
    return [i for i in range(1, shape.d + 1) if shape[i] > shape[i + 1]]


def corner_count(shape: Shape) -> int:
    return len(addable_rows(shape))


def add_cell(shape: Shape, i: int) -> Shape:
    if not 1 <= i <= shape.d or shape[i - 1] <= shape[i]:
        raise ShapeError(f"row {i} of {shape} is not addable")
    rows = list(shape.rows)
    rows[i - 1] += 1
    return shape._with(rows)


def remove_cell(shape: Shape, i: int) -> Shape:
    if not 1 <= i <= shape.d or shape[i] <= shape[i + 1]:
        raise ShapeError(f"row {i} of {shape} is not removable")
    rows = list(shape.rows)
    rows[i - 1] -= 1
    return shape._with(rows)


def cover_row(small: Shape, big: Shape) -> int | None:
    """Row where ``big`` has one more cell than ``small``, or None if ``big`` does not cover ``small``."""
    if (small.d, small.L) != (big.d, big.L):
        return None
    diff = [b - s for s, b in zip(small.rows, big.rows)]
    if sorted(diff) != [0] * (small.d - 1) + [1]:
        return None
    return diff.index(1) + 1


def boundary_word(shape: Shape) -> str:
    """One period of the boundary, read as W and S steps starting at row 0.

    >>> boundary_word(make_shape(3, 4, [3, 1, 0]))
    'WSWWSWS'
    """
    return "".join("W" * (shape[i - 1] - shape[i]) + "S" for i in range(1, shape.d + 1))


def shape_from_boundary(word: str, d: int, L: int, row_zero: int) -> Shape:
    """Inverse of ``boundary_word`` once the value of ``lam[0]`` is fixed."""
    if word.count("S") != d or word.count("W") != L or len(word) != d + L:
        raise ShapeError(f"boundary word {word!r} does not have {d} S and {L} W steps")
    if not word.endswith("S"):
        raise ShapeError("boundary word must end with S")
    rows = []
    col = row_zero
    for step in word:
        if step == "W":
            col -= 1
        else:
            rows.append(col)
    return Shape(d, L, tuple(rows))


def conjugate(shape: Shape) -> Shape:
    """Transpose of ``shape``; lands in period ``(L, d)``.

    The boundary is traced once starting at the vertex ``(0, lam[0])``.  Each
    W step crosses a column ``c`` while sitting on the boundary below row
    ``i``, which says exactly that ``conj[c] = i``.  The ``L`` consecutive
    columns crossed are folded back into ``[1, L]`` by periodicity.

    >>> conjugate(make_shape(3, 4, [3, 1, 0]))
    Shape(d=4, L=3, rows=(2, 1, 1, 0))
    """
    d, L = shape.d, shape.L
    conj = [0] * L
    row, col = 0, shape[0]
    for step in boundary_word(shape):
        if step == "S":
            row += 1
        else:
            q, r = divmod(col - 1, L)
            conj[r] = row + q * d
            col -= 1
    return Shape(L, d, tuple(conj))


def complement(shape: Shape) -> Shape:
    """``[L - lam[d], ..., L - lam[1]]``, an involution of the same period."""
    return shape._with(shape.L - r for r in reversed(shape.rows))


def shape_union(a: Shape, b: Shape) -> Shape:
    _same_period(a, b)
    return a._with(map(max, a.rows, b.rows))


def shape_intersection(a: Shape, b: Shape) -> Shape:
    _same_period(a, b)
    return a._with(map(min, a.rows, b.rows))


def skew_cells(lam: Shape, mu: Shape) -> list[Cell]:
    """Cells of ``lam / mu`` listed row by row, left to right."""
    if not contains(mu, lam):
        raise ShapeError(f"{mu} is not contained in {lam}")
    return [(i, j) for i in range(1, lam.d + 1) for j in range(mu[i] + 1, lam[i] + 1)]


def shapes_in_box(d: int, L: int, low: int, high: int) -> Iterator[Shape]:
    """All shapes of period ``(d, L)`` whose window entries lie in ``[low, high]``."""

    def rec(prefix: list[int], cap: int) -> Iterator[Shape]:
        if len(prefix) == d:
            if prefix[-1] + L >= prefix[0]:
                yield Shape(d, L, tuple(prefix))
            return
        for v in range(cap, low - 1, -1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], high)
