from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cylwalk.shapes import (
    DomainError,
    Shape,
    add_cell,
    addable_rows,
    boundary_word,
    canonical_cell,
    complement,
    conjugate,
    contains,
    corner_count,
    make_shape,
    remove_cell,
    removable_rows,
    row_value,
    shape_from_boundary,
    shape_intersection,
    shape_union,
    shapes_in_box,
    skew_cells,
    skew_size,
)


@st.composite
def shapes(draw, max_d=5, max_L=5):
    d = draw(st.integers(1, max_d))
    L = draw(st.integers(1, max_L))
    last = draw(st.integers(-6, 6))
    gaps = draw(st.lists(st.integers(0, L), min_size=d - 1, max_size=d - 1))
    # Rows bottom-up; rows[0] - rows[-1] <= L keeps the window valid.
    rows = [last]
    for g in gaps:
        rows.append(rows[-1] + g)
        if rows[-1] - last > L:
            rows[-1] = last + L
    return Shape(d, L, tuple(reversed(rows)))


def cyclic_equal(a: str, b: str) -> bool:
    return len(a) == len(b) and a in b + b


def conjugate_by_max(s: Shape) -> list[int]:
    """Column lengths by direct scan: the largest row index i with lam[i] >= j."""
    span = 4 * (s.d + 1) * (abs(min(s.rows)) + abs(max(s.rows)) + s.L + 2)
    return [max(i for i in range(-span, span) if s[i] >= j) for j in range(1, s.L + 1)]


def test_make_shape_examples():
    assert make_shape(3, 4, [3, 1, 0]).rows == (3, 1, 0)
    assert make_shape(3, 3, [0, 0, 0]).rows == (0, 0, 0)
    with pytest.raises(DomainError, match="row 1"):
        make_shape(3, 2, [3, 0, 0])


def test_make_shape_names_the_offending_row():
    with pytest.raises(DomainError, match="row 2"):
        make_shape(3, 4, [1, 0, 2])
    with pytest.raises(DomainError):
        make_shape(2, 4, [1, 0, 0])


def test_row_value():
    assert row_value(make_shape(3, 4, [5, 5, 3]), 0) == 7
    s = make_shape(3, 4, [3, 1, 0])
    assert row_value(s, 2) == 1
    assert row_value(s, 5) == -3
    assert s[-1] == s[2] + 4


def test_contains_and_skew_size():
    mu, lam = make_shape(3, 4, [3, 1, 0]), make_shape(3, 4, [5, 5, 3])
    assert contains(mu, lam) and skew_size(lam, mu) == 9
    assert contains(lam, lam) and skew_size(lam, lam) == 0
    assert not contains(mu, make_shape(3, 4, [3, 0, 0]))


def test_corners():
    s = make_shape(3, 4, [3, 1, 0])
    assert addable_rows(s) == [1, 2, 3] and corner_count(s) == 3
    rect = make_shape(3, 3, [0, 0, 0])
    assert addable_rows(rect) == [1] and removable_rows(rect) == [3]
    s = make_shape(3, 3, [2, 2, 0])
    assert addable_rows(s) == [1, 3] and removable_rows(s) == [2, 3]


def test_add_and_remove_examples():
    assert add_cell(make_shape(3, 3, [0, 0, 0]), 1).rows == (1, 0, 0)
    with pytest.raises(DomainError):
        add_cell(make_shape(3, 3, [1, 1, 1]), 2)
    assert remove_cell(make_shape(3, 3, [2, 2, 0]), 2).rows == (2, 1, 0)
    with pytest.raises(DomainError):
        remove_cell(make_shape(3, 3, [2, 2, 0]), 1)


def test_boundary_word_examples():
    assert boundary_word(make_shape(3, 4, [3, 1, 0])) == "WSWWSWS"
    assert boundary_word(make_shape(3, 3, [0, 0, 0])) == "WWWSSS"
    assert boundary_word(make_shape(3, 3, [2, 2, 0])) == "WSSWWS"


def test_conjugate_examples():
    assert conjugate(make_shape(3, 4, [3, 1, 0])) == make_shape(4, 3, [2, 1, 1, 0])
    # Direct scan: the largest i with lam[i] >= 1, 2, 3 is 2, 2, 0.
    assert conjugate(make_shape(3, 3, [2, 2, 0])) == make_shape(3, 3, [2, 2, 0])
    assert conjugate(make_shape(3, 2, [2, 0, 0])) == make_shape(2, 3, [1, 1])


def test_complement_examples():
    assert complement(make_shape(3, 3, [2, 2, 0])).rows == (3, 1, 1)
    assert complement(make_shape(3, 3, [1, 0, 0])).rows == (3, 3, 2)


def test_union_intersection_examples():
    a, b = make_shape(3, 2, [2, 1, 0]), make_shape(3, 2, [1, 1, 1])
    assert shape_union(a, b).rows == (2, 1, 1)
    assert shape_intersection(a, b).rows == (1, 1, 0)


def test_skew_cells_examples():
    cells = skew_cells(make_shape(3, 4, [5, 5, 3]), make_shape(3, 4, [3, 1, 0]))
    assert len(cells) == 9 and {(1, 4), (1, 5), (3, 1)} <= set(cells)
    s = make_shape(3, 3, [1, 0, 0])
    assert skew_cells(s, s) == []
    assert skew_cells(s, make_shape(3, 3, [0, 0, 0])) == [(1, 1)]


def test_canonical_cell():
    assert canonical_cell(3, 4, 4, 1) == (1, 5)
    assert canonical_cell(3, 4, -2, 0) == (1, -4)
    assert canonical_cell(3, 4, 3, 7) == (3, 7)


def test_shapes_in_box_is_complete():
    found = set(shapes_in_box(3, 2, -1, 2))
    brute = set()
    for rows in itertools.product(range(-1, 3), repeat=3):
        try:
            brute.add(Shape(3, 2, rows))
        except DomainError:
            pass
    assert found == brute


@given(shapes())
def test_corner_counts_agree(s):
    assert len(addable_rows(s)) == len(removable_rows(s)) == corner_count(s) >= 1


@given(shapes(), st.integers(1, 5))
def test_add_then_remove_is_identity(s, i):
    if i <= s.d and i in addable_rows(s):
        assert remove_cell(add_cell(s, i), i) == s
    if i <= s.d and i in removable_rows(s):
        assert add_cell(remove_cell(s, i), i) == s


@given(shapes())
def test_conjugate_matches_max_formula(s):
    c = conjugate(s)
    assert (c.d, c.L) == (s.L, s.d)
    assert list(c.rows) == conjugate_by_max(s)


@given(shapes())
def test_conjugate_is_involution_and_transposes_boundary(s):
    assert conjugate(conjugate(s)) == s
    swapped = boundary_word(s).translate(str.maketrans("WS", "SW"))[::-1]
    assert cyclic_equal(boundary_word(conjugate(s)), swapped)


@given(shapes())
def test_complement_is_involution_and_reverses_boundary(s):
    assert complement(complement(s)) == s
    assert cyclic_equal(boundary_word(complement(s)), boundary_word(s)[::-1])


@given(shapes())
def test_boundary_word_round_trip(s):
    assert shape_from_boundary(boundary_word(s), s.d, s.L, s[0]) == s


@pytest.mark.parametrize("d,L", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_union_and_intersection_are_join_and_meet(d, L):
    box = list(shapes_in_box(d, L, -1, 2))
    for a, b in itertools.product(box, repeat=2):
        u, m = shape_union(a, b), shape_intersection(a, b)
        assert contains(a, u) and contains(b, u)
        assert contains(m, a) and contains(m, b)
        assert shape_union(a, shape_intersection(a, b)) == a
        assert shape_intersection(a, shape_union(a, b)) == a
        uppers = [c for c in box if contains(a, c) and contains(b, c)]
        lowers = [c for c in box if contains(c, a) and contains(c, b)]
        assert all(contains(u, c) for c in uppers)
        assert all(contains(c, m) for c in lowers)


@pytest.mark.parametrize("d,L", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_common_covers(d, L):
    box = list(shapes_in_box(d, L, -2, 3))
    up = {s: {add_cell(s, i) for i in addable_rows(s)} for s in box}
    down = {s: {remove_cell(s, i) for i in removable_rows(s)} for s in box}
    for a, b in itertools.combinations(box, 2):
        assert len(up[a] & up[b]) == len(down[a] & down[b]) <= 1
