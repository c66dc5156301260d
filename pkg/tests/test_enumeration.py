from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cylwalk.enumeration import (
    DEFAULT_STATE_CAP,
    NumericalError,
    ResourceCapError,
    a_series,
    count_oct,
    count_sct,
    count_skew_sct,
    d4_coefficient,
    d4_value,
    motzkin_bounded,
    motzkin_bounded_noflat_top,
    motzkin_table,
    state_cap,
)
from cylwalk.models import corner, enumerate_walks
from cylwalk.shapes import DomainError, conjugate, make_shape, shapes_in_box
from cylwalk.tableaux import enumerate_skew_sct

# Walk counts from the corner of the 4-simplex, listed by brute force.
D4_WALKS = {
    1: [1] * 9,
    2: [1, 1, 2, 3, 6, 9, 18, 27, 54],
    3: [1, 1, 2, 4, 9, 20, 45, 101, 227],
}


def motzkin_by_listing(n: int, h: int, flat_at_top: bool = True) -> int:
    """Count step sequences in {U, F, D}^n directly."""
    total = 0
    for steps in itertools.product((1, 0, -1), repeat=n):
        y, ok = 0, True
        for s in steps:
            if s == 0 and y == h and not flat_at_top:
                ok = False
                break
            y += s
            if not 0 <= y <= h:
                ok = False
                break
        total += ok and y == 0
    return total


def test_motzkin_examples():
    assert all(motzkin_bounded(n, 0) == 1 for n in range(10))
    assert motzkin_bounded(4, 1) == 8
    assert motzkin_bounded_noflat_top(3, 1) == 3
    # Unbounded height recovers the Motzkin numbers.
    assert [motzkin_bounded(n, n) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]


@pytest.mark.parametrize("h", [0, 1, 2, 3])
def test_motzkin_matches_listing(h):
    for n in range(9):
        assert motzkin_bounded(n, h) == motzkin_by_listing(n, h)
        assert motzkin_bounded_noflat_top(n, h) == motzkin_by_listing(n, h, flat_at_top=False)


def test_motzkin_table_shape():
    table = motzkin_table(5, 2)
    assert table[0] == [1, 0, 0] and len(table) == 6


def test_a_series_examples():
    assert all(a_series(n, 1) == 1 for n in range(10))
    assert a_series(3, 2) == 3
    assert a_series(4, 3) == 8
    with pytest.raises(DomainError):
        a_series(3, 0)


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5])
def test_a_series_counts_simplex_walks(L):
    for n in range(9):
        assert enumerate_walks("simplex", corner(3, L), "+" * n) == a_series(n, L)


@pytest.mark.parametrize("L", [1, 2, 3])
def test_d4_matches_listed_walks(L):
    for n, expected in enumerate(D4_WALKS[L]):
        assert enumerate_walks("simplex", corner(4, L), "+" * n) == expected
        assert d4_coefficient(n, L) == expected
        assert abs(d4_value(n, L) - expected) < 1e-6


def test_d4_examples():
    assert d4_coefficient(0, 1) == 1
    assert d4_coefficient(1, 1) == 1
    assert d4_coefficient(6, 2) == enumerate_walks("simplex", corner(4, 2), "+" * 6)


def test_first_power_variant_disagrees():
    # With the factor to the first power every term is negative.
    assert d4_value(0, 1, squared=False) < 0
    for L, counts in D4_WALKS.items():
        for n, expected in enumerate(counts):
            assert abs(d4_value(n, L, squared=False) - expected) > 1e-3
    with pytest.raises(NumericalError):
        d4_coefficient(0, 1, squared=False)


def test_d4_rejects_bad_arguments():
    with pytest.raises(DomainError):
        d4_value(-1, 2)
    with pytest.raises(DomainError):
        d4_value(2, 0)


def test_count_sct_examples():
    for n in range(11):
        assert count_sct(3, 3, [0, 0, 0], n, "inner") == a_series(n, 3)
    assert count_sct(3, 2, [1, 1, 0], 0, "outer") == count_sct(3, 2, [1, 1, 0], 0, "inner") == 1
    base = count_sct(3, 2, [1, 1, 0], 3, "inner")
    for w in itertools.product("+-", repeat=3):
        assert count_oct(3, 2, [1, 1, 0], "".join(w)) == base
    with pytest.raises(DomainError):
        count_sct(3, 2, [1, 1, 0], 3, "sideways")


@pytest.mark.parametrize("d,L", [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)])
def test_inner_outer_and_conjugate_counts_agree(d, L):
    for alpha in shapes_in_box(d, L, -1, 1):
        for n in range(6):
            inner = count_sct(d, L, list(alpha.rows), n, "inner")
            assert inner == count_sct(d, L, list(alpha.rows), n, "outer")
            c = conjugate(alpha)
            assert inner == count_sct(L, d, list(c.rows), n, "inner")


@given(st.sampled_from([(2, 2), (3, 2), (3, 3)]), st.text("+-", max_size=6))
def test_oct_count_depends_only_on_length(period, w):
    d, L = period
    alpha = [1] + [0] * (d - 1)
    assert count_oct(d, L, alpha, w) == count_oct(d, L, alpha, "+" * len(w))


def test_skew_count_matches_enumeration():
    inner = make_shape(3, 2, [1, 1, 0])
    for outer in shapes_in_box(3, 2, 1, 3):
        if all(o >= i for o, i in zip(outer.rows, inner.rows)):
            assert count_skew_sct(outer, inner) == len(list(enumerate_skew_sct(outer, inner)))


def test_state_cap(monkeypatch):
    monkeypatch.delenv("CYLWALK_STATE_CAP", raising=False)
    assert state_cap() == DEFAULT_STATE_CAP
    monkeypatch.setenv("CYLWALK_STATE_CAP", "20")
    assert state_cap() == 20
    with pytest.raises(ResourceCapError):
        count_sct(3, 3, [0, 0, 0], 12, "inner")
    monkeypatch.setenv("CYLWALK_STATE_CAP", "lots")
    with pytest.raises(DomainError):
        state_cap()
