from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylwalk.enumeration import count_oct_between, count_skew_sct
from cylwalk.growth import (
    GrowthDiagram,
    GrowthError,
    backward_local,
    complete_from_path,
    crs_by_growth,
    forward_local,
    grow_from_TU,
    path_points,
    read_boundary,
    read_path,
    retype_oct,
    shrink_from_PQ,
    symmetric_diagram,
    validate_diagram,
)
from cylwalk.insertion import crs_forward, crs_iterates
from cylwalk.shapes import (
    add_cell,
    addable_rows,
    complement,
    contains,
    make_shape,
    remove_cell,
    removable_rows,
    shapes_in_box,
    skew_size,
)
from cylwalk.tableaux import (
    OCT,
    SCT,
    enumerate_oct,
    enumerate_sct,
    oct_make,
    oct_reverse,
    oct_type,
    random_oct,
    random_sct,
    walk_rep,
)

SMALL = [(2, 2), (3, 2), (2, 3), (3, 3)]


def S(*rows, d=3, L=2):
    return make_shape(d, L, list(rows))


def example_oct() -> OCT:
    rows = [[3, 3, 1], [3, 3, 2], [3, 2, 2], [4, 2, 2], [4, 3, 2], [4, 2, 2], [3, 2, 2], [3, 3, 2], [3, 2, 2], [2, 2, 2]]
    return oct_make([make_shape(3, 2, r) for r in rows])


def small_oct() -> OCT:
    return oct_make([make_shape(3, 3, r) for r in ([1, 0, 0], [2, 0, 0], [2, 0, -1], [1, 0, -1])])


def words(m: int, n: int):
    for pos in itertools.combinations(range(m + n), m):
        yield "".join("+" if k in pos else "-" for k in range(m + n))


def test_forward_local_examples():
    assert forward_local(S(1, 1, 0), S(2, 1, 0), S(1, 1, 1)) == S(2, 1, 1)
    assert forward_local(S(2, 2, 1), S(2, 2, 2), S(2, 2, 2)) == S(3, 2, 2)
    assert forward_local(S(0, 0, -1, L=3), S(1, 0, -1, L=3), S(0, 0, 0, L=3)) == S(1, 0, 0, L=3)


def test_forward_local_needs_covers_from_the_lower_left():
    # [0,0,-1] sits inside [0,0,0], so this triple is not a valid square.
    with pytest.raises(GrowthError):
        forward_local(S(0, 0, 0, L=3), S(1, 0, 0, L=3), S(0, 0, -1, L=3))


def test_backward_local_examples():
    assert backward_local(S(2, 2, 2), S(2, 2, 2), S(3, 2, 2)) == S(2, 2, 1)
    assert backward_local(S(2, 1, 0), S(1, 1, 1), S(2, 1, 1)) == S(1, 1, 0)


def test_local_rules_reject_non_covers():
    with pytest.raises(GrowthError):
        forward_local(S(1, 1, 0), S(2, 2, 0), S(1, 1, 1))
    with pytest.raises(GrowthError):
        backward_local(S(2, 1, 0), S(1, 1, 1), S(3, 2, 1))


def random_cover_pair(rng: random.Random, d: int, L: int):
    rows = sorted((rng.randint(-2, 2) for _ in range(d)), reverse=True)
    rows = [min(r, rows[-1] + L) for r in rows]
    ll = make_shape(d, L, rows)
    ul = add_cell(ll, rng.choice(addable_rows(ll)))
    lr = add_cell(ll, rng.choice(addable_rows(ll)))
    return ll, ul, lr


def test_local_rules_invert_each_other_on_500_random_squares():
    rng = random.Random(1729)
    for _ in range(500):
        d, L = rng.choice(SMALL + [(1, 3), (4, 2), (2, 5)])
        ll, ul, lr = random_cover_pair(rng, d, L)
        ur = forward_local(ll, ul, lr)
        assert contains(ul, ur) and contains(lr, ur)
        assert backward_local(ul, lr, ur) == ll
        # And from the top right: two cells above ll, then two removals.
        top = add_cell(ul, rng.choice(addable_rows(ul)))
        a = remove_cell(top, rng.choice(removable_rows(top)))
        b = remove_cell(top, rng.choice(removable_rows(top)))
        assert forward_local(backward_local(a, b, top), a, b) == top


def test_grow_example(crs_quad):
    T, U, P, Q = crs_quad
    g = grow_from_TU(T, U)
    assert (g.m, g.n) == (4, 5)
    assert g[2, 2] == S(3, 2, 1)
    assert g[4, 5] == S(5, 3, 3)
    assert read_boundary(g, "right") == walk_rep(P)
    assert read_boundary(g, "top") == walk_rep(Q)
    assert read_boundary(g, "left") == walk_rep(T)
    assert read_boundary(g, "bottom") == walk_rep(U)
    assert validate_diagram(g) is None
    assert crs_by_growth(T, U) == (P, Q)


def test_grow_with_empty_second_tableau(crs_quad):
    T = crs_quad[0]
    g = grow_from_TU(T, SCT.empty(T.inner))
    assert g.m == 0 and read_boundary(g, "left") == walk_rep(T)


def test_grow_of_a_tableau_with_itself_is_symmetric(phi_pair):
    T, P = phi_pair
    g = grow_from_TU(T, T)
    assert (g.m, g.n) == (8, 8)
    assert all(g[x, y] == g[y, x] for x in range(9) for y in range(9))
    assert read_boundary(g, "top") == walk_rep(P)


def test_grow_rejects_mismatched_inner_shapes(crs_quad):
    with pytest.raises(GrowthError):
        grow_from_TU(crs_quad[0], SCT.empty(S(0, 0, 0)))


def test_read_boundary_of_a_point():
    g = GrowthDiagram(0, 0, ((S(1, 0, 0),),))
    assert all(read_boundary(g, side) == [S(1, 0, 0)] for side in ("left", "right", "top", "bottom"))
    with pytest.raises(GrowthError):
        read_boundary(g, "middle")


def test_path_points():
    assert path_points("+-") == [(0, 1), (1, 1), (1, 0)]
    assert path_points("") == [(0, 0)]
    with pytest.raises(GrowthError):
        path_points("+x")


def test_complete_from_example_path(crs_quad):
    T, U, _, _ = crs_quad
    o = example_oct()
    g = complete_from_path(oct_type(o), o.shapes)
    assert g == grow_from_TU(T, U)
    assert read_path(g, oct_type(o)) == list(o.shapes)


def test_complete_from_corner_path_is_growth(crs_quad):
    T, U, _, _ = crs_quad
    left, bottom = walk_rep(T), walk_rep(U)
    w = "-" * (len(left) - 1) + "+" * (len(bottom) - 1)
    assert complete_from_path(w, left[::-1] + bottom[1:]) == grow_from_TU(T, U)


def test_complete_small_symmetric_path():
    o = small_oct()
    g = symmetric_diagram(o)
    assert (g.m, g.n) == (3, 3)
    assert all(g[x, y] == g[y, x] for x in range(4) for y in range(4))
    assert validate_diagram(g) is None


def test_complete_rejects_bad_paths():
    o = example_oct()
    with pytest.raises(GrowthError):
        complete_from_path("+" * 9, o.shapes)
    with pytest.raises(GrowthError):
        complete_from_path(oct_type(o), o.shapes[:-1])


def test_validate_diagram_finds_a_bad_square(crs_quad):
    T, U, _, _ = crs_quad
    g = grow_from_TU(T, U)
    labels = [list(r) for r in g.labels]
    labels[2][2] = S(2, 2, 2)
    v = validate_diagram(GrowthDiagram(g.m, g.n, tuple(tuple(r) for r in labels)))
    assert v is not None
    assert (v.x, v.y) in {(1, 1), (1, 2), (2, 1), (2, 2)}


@pytest.mark.parametrize("d,L", SMALL)
def test_growth_diagrams_are_valid_and_transpose(d, L):
    for mu in shapes_in_box(d, L, 0, 1):
        tabs = [T for n in range(3) for T in enumerate_sct(mu, n)]
        for T, U in itertools.product(tabs, repeat=2):
            g = grow_from_TU(T, U)
            assert validate_diagram(g) is None
            assert grow_from_TU(U, T) == g.transpose()
            # Column k carries the k-th insertion iterate.
            for k, Pk in enumerate(crs_iterates(T, U)):
                assert [row[k] for row in g.labels] == walk_rep(Pk)


@given(st.sampled_from(SMALL), st.integers(0, 5), st.integers(0, 5), st.integers(0, 10**6))
@settings(max_examples=150)
def test_completion_is_path_independent(period, n, m, seed):
    d, L = period
    alpha = [0] * d
    T = random_sct(d, L, alpha, n, seed)
    U = random_sct(d, L, alpha, m, seed + 1)
    g = grow_from_TU(T, U)
    rng = random.Random(seed)
    for _ in range(4):
        w = "".join(rng.sample("+" * m + "-" * n, m + n))
        assert complete_from_path(w, read_path(g, w)) == g


@given(st.sampled_from(SMALL), st.integers(0, 5), st.integers(0, 5), st.integers(0, 10**6))
@settings(max_examples=150)
def test_complement_and_rotation_give_a_valid_diagram(period, n, m, seed):
    d, L = period
    T = random_sct(d, L, [0] * d, n, seed)
    U = random_sct(d, L, [0] * d, m, seed + 7)
    g = grow_from_TU(T, U)
    rotated = tuple(tuple(complement(s) for s in reversed(row)) for row in reversed(g.labels))
    assert validate_diagram(GrowthDiagram(g.m, g.n, rotated)) is None


@given(st.integers(0, 6), st.integers(0, 10**6))
def test_inverse_growth_recovers_the_inputs(n, seed):
    T = random_sct(3, 3, [2, 2, 0], n, seed)
    U = random_sct(3, 3, [2, 2, 0], n + 1, seed + 3)
    P, Q = crs_forward(T, U)
    g = shrink_from_PQ(P, Q)
    assert g == grow_from_TU(T, U)


def test_retype_examples(crs_quad):
    T, U, _, _ = crs_quad
    o = example_oct()
    w = "-" * 5 + "+" * 4
    r = retype_oct(o, w)
    assert list(r.shapes) == walk_rep(T)[::-1] + walk_rep(U)[1:]
    assert retype_oct(o, oct_type(o)) == o
    back = retype_oct(r, oct_type(o))
    assert back == o


def test_symmetric_retype_example():
    r = retype_oct(small_oct(), "+++", symmetric=True)
    assert [list(s.rows) for s in r.shapes] == [[1, 0, 0], [2, 0, 0], [2, 1, 0], [3, 1, 0]]
    assert retype_oct(r, "+--", symmetric=True) == small_oct()


def test_retype_rejects_wrong_sign_counts():
    with pytest.raises(GrowthError):
        retype_oct(example_oct(), "+" * 9)
    with pytest.raises(GrowthError):
        retype_oct(small_oct(), "++", symmetric=True)


@pytest.mark.parametrize("d,L", SMALL)
def test_retype_is_a_bijection_between_fixed_endpoint_sets(d, L):
    alpha = make_shape(d, L, [0] * d)
    for m, n in [(1, 1), (2, 1), (2, 2), (3, 1)]:
        targets = {}
        for w in words(m, n):
            for o in enumerate_oct(alpha, w):
                targets.setdefault(o.shapes[-1], {}).setdefault(w, set()).add(o)
        for beta, by_word in targets.items():
            sizes = {w: count_oct_between(alpha, beta, w) for w in words(m, n)}
            assert len(set(sizes.values())) == 1
            for w, octs in by_word.items():
                assert len(octs) == sizes[w]
                for w2 in words(m, n):
                    image = {retype_oct(o, w2) for o in octs}
                    assert len(image) == len(octs)
                    assert all(o.shapes[0] == alpha and o.shapes[-1] == beta for o in image)
                    assert image == by_word.get(w2, set())


@pytest.mark.parametrize("d,L", [(2, 2), (3, 2)])
def test_fixed_endpoint_count_matches_both_sums(d, L):
    alpha = make_shape(d, L, [0] * d)
    box = list(shapes_in_box(d, L, -3, 3))
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        ends = {o.shapes[-1] for o in enumerate_oct(alpha, "+" * m + "-" * n)}
        for beta in ends:
            total = count_oct_between(alpha, beta, "+" * m + "-" * n)
            lower = sum(count_skew_sct(alpha, mu) * count_skew_sct(beta, mu) for mu in box
                        if contains(mu, alpha) and contains(mu, beta) and skew_size(alpha, mu) == n)
            upper = sum(count_skew_sct(lam, beta) * count_skew_sct(lam, alpha) for lam in box
                        if contains(alpha, lam) and contains(beta, lam) and skew_size(lam, alpha) == m)
            assert total == lower == upper


@given(st.text("+-", min_size=1, max_size=6), st.text("+-", min_size=1, max_size=6), st.integers(0, 10**6))
@settings(max_examples=150)
def test_symmetric_retype_is_involutive(w, w2, seed):
    w2 = (w2 * 6)[: len(w)]
    o = random_oct(3, 2, [1, 1, 0], w, seed)
    r = retype_oct(o, w2, symmetric=True)
    assert oct_type(r) == w2 and r.shapes[0] == o.shapes[0]
    assert retype_oct(r, w, symmetric=True) == o


def test_reverse_of_reverse():
    o = example_oct()
    assert oct_reverse(oct_reverse(o)) == o
