"""Counting: bounded Motzkin paths, the d = 4 spectral sum, and shape-graph DPs."""

from __future__ import annotations

import math
import os
from functools import lru_cache
from typing import Sequence

from .shapes import DomainError, Shape, add_cell, addable_rows, remove_cell, removable_rows

DEFAULT_STATE_CAP = 10**7


class ResourceCapError(DomainError):
    kind = "resource"


class NumericalError(DomainError):
    kind = "numerical"


def state_cap() -> int:
    """Enumeration cap, overridable through ``CYLWALK_STATE_CAP``."""
    raw = os.environ.get("CYLWALK_STATE_CAP")
    if raw is None:
        return DEFAULT_STATE_CAP
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"CYLWALK_STATE_CAP must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError("CYLWALK_STATE_CAP must be positive")
    return value


def motzkin_table(n_max: int, h: int, flat_at_top: bool = True) -> list[list[int]]:
    """``table[k][y]``: paths of length ``k`` from height 0 to ``y`` within ``[0, h]``."""
    if n_max < 0 or h < 0:
        raise DomainError("n and h must be nonnegative")
    table = [[0] * (h + 1) for _ in range(n_max + 1)]
    table[0][0] = 1
    for k in range(n_max):
        row, nxt = table[k], table[k + 1]
        for y, c in enumerate(row):
            if not c:
                continue
            if y < h or flat_at_top:
                nxt[y] += c
            if y < h:
                nxt[y + 1] += c
            if y > 0:
                nxt[y - 1] += c
    return table


def motzkin_bounded(n: int, h: int) -> int:
    """Motzkin paths of length ``n`` and height at most ``h``."""
    return motzkin_table(n, h)[n][0]


def motzkin_bounded_noflat_top(n: int, h: int) -> int:
    """As ``motzkin_bounded`` but with no flat step at height ``h``."""
    return motzkin_table(n, h, flat_at_top=False)[n][0]


def a_series(n: int, L: int) -> int:
    if L < 1:
        raise DomainError("L must be positive")
    h, odd = divmod(L, 2)
    return motzkin_bounded(n, h) if odd else motzkin_bounded_noflat_top(n, h)


def d4_value(n: int, L: int, *, squared: bool = True) -> float:
    """Real evaluation of the spectral sum for walks from the corner of the 4-simplex.

    With ``theta = pi / (L + 4)`` and ``c_j = 2 cos(j theta)`` the sum runs over
    odd ``1 <= j < k <= L + 3`` of

        (c_k - c_j)^e (2 + c_j)(2 + c_k)(c_j + c_k)^n / (L + 4)^2

    with ``e = 2``.  ``squared=False`` gives ``e = 1``, the variant whose
    values are wrong (negative for every j < k); it is kept for reporting.
    """
    if n < 0 or L < 1:
        raise DomainError("need n >= 0 and L >= 1")
    theta = math.pi / (L + 4)
    c = [2 * math.cos(j * theta) for j in range(L + 4)]
    odd = range(1, L + 4, 2)
    power = 2 if squared else 1
    total = 0.0
    for j in odd:
        for k in odd:
            if j < k:
                total += (c[k] - c[j]) ** power * (2 + c[j]) * (2 + c[k]) * (c[j] + c[k]) ** n
    return total / (L + 4) ** 2


def d4_coefficient(n: int, L: int, *, squared: bool = True, tol: float = 1e-6) -> int:
    """Number of ``n``-step walks from the corner of the simplex with d = 4."""
    value = d4_value(n, L, squared=squared)
    nearest = round(value)
    if abs(value - nearest) >= tol:
        raise NumericalError(f"d4 sum for n={n}, L={L} is {value!r}, not within {tol} of an integer")
    return int(nearest)


# Shape-graph counting

def _frontier_count(start: Shape, signs: str, cap: int) -> dict[Shape, int]:
    frontier = {start: 1}
    seen = 1
    for s in signs:
        nxt: dict[Shape, int] = {}
        for shape, c in frontier.items():
            if s == "+":
                targets = [add_cell(shape, i) for i in addable_rows(shape)]
            elif s == "-":
                targets = [remove_cell(shape, i) for i in removable_rows(shape)]
            else:
                raise DomainError(f"type words use '+' and '-', got {s!r}")
            for t in targets:
                nxt[t] = nxt.get(t, 0) + c
        frontier = nxt
        seen += len(frontier)
        if seen > cap:
            raise ResourceCapError(f"shape DP visits more than {cap} states")
    return frontier


def count_sct(d: int, L: int, alpha: Sequence[int], n: int, side: str) -> int:
    """Tableaux with ``n`` entries and inner (``side='inner'``) or outer shape ``alpha``."""
    if side not in ("inner", "outer"):
        raise DomainError(f"side must be 'inner' or 'outer', got {side!r}")
    start = Shape(d, L, tuple(alpha))
    return sum(_frontier_count(start, ("+" if side == "inner" else "-") * n, state_cap()).values())


def count_oct(d: int, L: int, alpha: Sequence[int], w: str) -> int:
    return sum(_frontier_count(Shape(d, L, tuple(alpha)), w, state_cap()).values())


def count_oct_between(alpha: Shape, beta: Shape, w: str) -> int:
    return _frontier_count(alpha, w, state_cap()).get(beta, 0)


@lru_cache(maxsize=None)
def count_skew_sct(outer: Shape, inner: Shape) -> int:
    """Tableaux of shape ``outer / inner``, by recursion on the cell holding the largest entry."""
    if outer == inner:
        return 1
    if any(o < i for o, i in zip(outer.rows, inner.rows)):
        return 0
    return sum(
        count_skew_sct(remove_cell(outer, i), inner)
        for i in removable_rows(outer)
        if outer.rows[i - 1] > inner.rows[i - 1]
    )
