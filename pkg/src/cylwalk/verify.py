"""Acceptance suite: one check per criterion, each returning a ``CriterionResult``.

Every check is exhaustive over a small, fixed range (plus seeded random
instances where noted), so the outcome is deterministic.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from typing import Callable, Iterable, NamedTuple

from .enumeration import a_series, count_oct, count_sct, d4_value
from .fixtures import run_fixtures
from .growth import (
    grow_from_TU,
    read_boundary,
    read_symmetric,
    retype_oct,
    symmetric_diagram,
    validate_diagram,
)
from .insertion import crs_forward, crs_inverse, crs_inverse_bumping, crs_iterates, phi, phi_inverse
from .models import (
    COVERS,
    Walk,
    corner,
    edge_label,
    enumerate_walks,
    image,
    lift_walk,
    map_gf,
    map_h,
    map_q,
    neighbors,
    project_walk,
    simplex_points,
    tasep_states,
)
from .shapes import Shape, add_cell, addable_rows, corner_count, remove_cell, removable_rows, shapes_in_box
from .tableaux import (
    SCT,
    complement_sct,
    enumerate_oct,
    enumerate_sct,
    enumerate_sct_outer,
    evacuation_rows,
    partitions,
    random_sct,
    sct_from_straight,
    standard_young_tableaux,
    straight_rows,
    walk_rep,
)

DEFAULT_SEED = 1729
SMALL_PERIODS = ((2, 2), (3, 2), (2, 3), (3, 3))


class CriterionResult(NamedTuple):
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:>2}. {self.title}: {self.detail} ({self.seconds:.1f}s)"


def _timed(number: int, title: str, fn: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    passed, detail = fn()
    return CriterionResult(number, title, passed, detail, time.perf_counter() - t0)


def _first_failures(failures: list[str], total: int, what: str) -> tuple[bool, str]:
    if failures:
        return False, f"{len(failures)} of {total} {what} failed; first: {failures[0]}"
    return True, f"{total} {what} checked"


# 1

def check_motzkin() -> tuple[bool, str]:
    bad = []
    for L in range(1, 7):
        for n in range(13):
            walks = enumerate_walks("simplex", corner(3, L), "+" * n)
            if walks != a_series(n, L):
                bad.append(f"L={L} n={n}: walks {walks}, a={a_series(n, L)}")
    return _first_failures(bad, 6 * 13, "(n, L) pairs")


# 2

def check_d4() -> tuple[bool, str]:
    bad, printed_bad, worst = [], [], 0.0
    total = 0
    for L in (1, 2, 3):
        for n in range(9):
            total += 1
            brute, _ = enumerate_walks("simplex", corner(4, L), "+" * n, collect=True)
            value = d4_value(n, L, squared=True)
            residual = abs(value - round(value))
            worst = max(worst, residual)
            if residual >= 1e-6 or round(value) != brute:
                bad.append(f"L={L} n={n}: sum {value:.9g}, walks {brute}")
            printed = d4_value(n, L, squared=False)
            if abs(printed - brute) >= 1e-6:
                printed_bad.append(f"L={L} n={n}: {printed:.6g} vs {brute}")
    note = (
        f"first-power factor (c_k - c_j) disagrees with brute force in {len(printed_bad)}/{total} cases"
        f" (e.g. {printed_bad[0]})" if printed_bad else "first-power factor also agrees"
    )
    passed, detail = _first_failures(bad, total, "(n, L) pairs with squared factor (c_k - c_j)^2")
    return passed, f"{detail}, max residual {worst:.1e}; {note}"


# 3, 4, 5

def _crs_range() -> Iterable[tuple[SCT, SCT]]:
    for d, L in SMALL_PERIODS:
        for mu in shapes_in_box(d, L, -1, 2):
            tabs = [T for n in range(4) for T in enumerate_sct(mu, n)]
            for T in tabs:
                for U in tabs:
                    yield T, U


def check_crs() -> tuple[bool, str]:
    bad, total = [], 0
    for T, U in _crs_range():
        total += 1
        P, Q = crs_forward(T, U)
        ok = (
            P.inner == U.outer
            and Q.inner == T.outer
            and P.outer == Q.outer
            and P.n == T.n
            and Q.n == U.n
            and crs_inverse(P, Q) == (T, U)
            and crs_forward(U, T) == (Q, P)
        )
        if not ok:
            bad.append(f"T rows {[r for r, _ in T.cells]} U rows {[r for r, _ in U.cells]} over {T.inner}")
    return _first_failures(bad, total, "pairs (T, U)")


def check_insertion_growth() -> tuple[bool, str]:
    bad, total = [], 0
    for T, U in _crs_range():
        total += 1
        g = grow_from_TU(T, U)
        iterates = crs_iterates(T, U)
        columns = [[g[x, y] for y in range(g.n + 1)] for x in range(g.m + 1)]
        P, Q = crs_forward(T, U)
        ok = (
            all(columns[k] == walk_rep(Pk) for k, Pk in enumerate(iterates))
            and read_boundary(g, "right") == walk_rep(P)
            and read_boundary(g, "top") == walk_rep(Q)
            and validate_diagram(g) is None
        )
        if not ok:
            bad.append(f"T rows {[r for r, _ in T.cells]} U rows {[r for r, _ in U.cells]} over {T.inner}")
    return _first_failures(bad, total, "pairs (T, U)")


def _complement_ok(T: SCT, U: SCT) -> bool:
    P, Q = crs_forward(T, U)
    if crs_forward(complement_sct(P), complement_sct(Q)) != (complement_sct(T), complement_sct(U)):
        return False
    if crs_inverse_bumping(P, Q) != (T, U):
        return False
    # Phi on the outer-shape side: T and U also serve as tableaux with fixed outer shape.
    return phi_inverse(phi(T)) == T and phi(phi_inverse(P)) == P and crs_inverse(P, P)[0] == phi_inverse(P)


def check_complement(seed: int = DEFAULT_SEED, samples: int = 500) -> tuple[bool, str]:
    bad, total = [], 0
    for T, U in _crs_range():
        total += 1
        if not _complement_ok(T, U):
            bad.append(f"exhaustive T rows {[r for r, _ in T.cells]} U rows {[r for r, _ in U.cells]} over {T.inner}")
    rng = random.Random(seed)
    periods = SMALL_PERIODS + ((4, 3), (3, 4), (4, 4), (2, 5))
    for k in range(samples):
        d, L = rng.choice(periods)
        mu = rng.choice(list(shapes_in_box(d, L, -2, 3)))
        T = random_sct(d, L, mu.rows, rng.randint(0, 6), rng.randrange(1 << 30))
        U = random_sct(d, L, mu.rows, rng.randint(0, 6), rng.randrange(1 << 30))
        total += 1
        if not _complement_ok(T, U):
            bad.append(f"random sample {k}")
    return _first_failures(bad, total, "pairs (T, U), including 500 random")


# 6

def _vertices(model: str, d: int, L: int, low: int, high: int) -> list:
    if model == "shapes":
        return list(shapes_in_box(d, L, low, high))
    if model == "simplex":
        return list(simplex_points(d, L))
    if model == "tasep":
        return list(tasep_states(d, L))
    raise ValueError(model)


def _all_walks(model: str, start, length: int) -> Iterable[Walk]:
    def rec(v, steps: list):
        yield Walk(model, start, tuple(steps))
        if len(steps) == length:
            return
        for sign in "+-":
            for label, u in neighbors(model, v, sign):
                steps.append((label, sign))
                yield from rec(u, steps)
                steps.pop()

    yield from rec(start, [])


def check_covering() -> tuple[bool, str]:
    bad = []
    vertices = walks = 0
    for d, L in SMALL_PERIODS:
        for cover, (src, dst) in COVERS.items():
            for v in _vertices(src, d, L, -1, 2):
                vertices += 1
                for sign in "+-":
                    mapped = Counter(
                        (edge_label(cover, v, lab, sign), image(cover, u)) for lab, u in neighbors(src, v, sign)
                    )
                    target = Counter(neighbors(dst, image(cover, v), sign))
                    if mapped != target or max(target.values(), default=1) > 1:
                        bad.append(f"{cover} at {v} ({sign}): neighbour multisets differ")
                for w in _all_walks(src, v, 4):
                    walks += 1
                    down = project_walk(cover, w)
                    if down.type_word != w.type_word or lift_walk(cover, v, down) != w:
                        bad.append(f"{cover}: walk {w.steps} from {v} does not round-trip")
                for w in _all_walks(dst, image(cover, v), 4):
                    walks += 1
                    if project_walk(cover, lift_walk(cover, v, w)) != w:
                        bad.append(f"{cover}: lift of {w.steps} from {v} does not project back")
    shapes = 0
    for d in (2, 3):
        for L in (2, 3):
            for s in shapes_in_box(d, L, -3, 6):
                shapes += 1
                if map_gf(s) != map_q(map_h(s)):
                    bad.append(f"g(f({s})) != q(h({s}))")
    passed, _ = _first_failures(bad, 1, "")
    detail = f"{vertices} vertices, {walks} walks round-tripped, {shapes} shapes with g.f = q.h"
    return passed, (detail if passed else f"{len(bad)} failures; first: {bad[0]}")


# 7

def check_type_invariance(seed: int = DEFAULT_SEED) -> tuple[bool, str]:
    bad = []
    rng = random.Random(seed)
    pairs = 0
    for d, L in ((3, 2), (3, 3)):
        pool = list(shapes_in_box(d, L, -2, 3))
        for alpha in rng.sample(pool, 10):
            for n in range(6):
                words = ["".join(p) for p in itertools.product("+-", repeat=n)]
                expected = count_sct(d, L, alpha.rows, n, "inner")
                diagrams = {}
                for w in words:
                    octs = list(enumerate_oct(alpha, w))
                    if len(octs) != expected or count_oct(d, L, alpha.rows, w) != expected:
                        bad.append(f"{alpha} type {w}: {len(octs)} tableaux, expected {expected}")
                    diagrams[w] = {o: symmetric_diagram(o) for o in octs}
                for w, w2 in itertools.product(words, repeat=2):
                    pairs += 1
                    images = set()
                    for o, g in diagrams[w].items():
                        o2 = read_symmetric(g, w2)
                        images.add(o2)
                        back = diagrams[w2].get(o2)
                        if back is None or read_symmetric(back, w) != o:
                            bad.append(f"{alpha}: {w} -> {w2} -> {w} is not the identity")
                            break
                    if len(images) != len(diagrams[w2]):
                        bad.append(f"{alpha}: {w} -> {w2} is not onto")
                # The shared diagrams above agree with the public entry point.
                checks = itertools.product(words, repeat=2) if n <= 3 else [(words[-1], words[0])]
                for w, w2 in checks:
                    for o, g in diagrams[w].items():
                        if retype_oct(o, w2, symmetric=True) != read_symmetric(g, w2):
                            bad.append(f"{alpha}: retype_oct disagrees with the symmetric diagram")
    return _first_failures(bad, pairs, "type pairs (w, w')")


# 8

def _skew_counts_down(top: Shape, k: int) -> Counter:
    """``mu -> |SCT(top / mu)|`` over all ``mu`` with ``k`` cells fewer, by listing tableaux."""
    return Counter(T.inner for T in enumerate_sct_outer(top, k))


def _skew_counts_up(bottom: Shape, k: int) -> Counter:
    return Counter(T.outer for T in enumerate_sct(bottom, k))


def check_pairwise_sums() -> tuple[bool, str]:
    bad, total = [], 0
    for d, L in SMALL_PERIODS:
        box = list(shapes_in_box(d, L, -1, 2))
        for alpha in box:
            for n, m in itertools.product(range(4), repeat=2):
                below_a, above_a = _skew_counts_down(alpha, n), _skew_counts_up(alpha, m)
                for beta in box:
                    if beta.size != alpha.size + m - n:
                        continue
                    total += 1
                    below_b, above_b = _skew_counts_down(beta, m), _skew_counts_up(beta, n)
                    lower = sum(c * below_b[mu] for mu, c in below_a.items())
                    upper = sum(c * above_b[lam] for lam, c in above_a.items())
                    counts = {
                        sum(1 for o in enumerate_oct(alpha, w) if o.shapes[-1] == beta)
                        for w in _words(m, n)
                    }
                    if lower != upper or counts != {lower}:
                        bad.append(f"{alpha} -> {beta}, n={n} m={m}: sums {lower}, {upper}, tableaux {sorted(counts)}")
    return _first_failures(bad, total, "(alpha, beta, n, m) cases")


def _words(plus: int, minus: int) -> list[str]:
    out = []
    for pos in itertools.combinations(range(plus + minus), plus):
        out.append("".join("+" if k in pos else "-" for k in range(plus + minus)))
    return out


# 9

def check_poset() -> tuple[bool, str]:
    bad, pairs, shapes = [], 0, 0
    for d, L in SMALL_PERIODS:
        box = list(shapes_in_box(d, L, -2, 3))
        up = {s: {add_cell(s, i) for i in addable_rows(s)} for s in box}
        down = {s: {remove_cell(s, i) for i in removable_rows(s)} for s in box}
        for s in box:
            shapes += 1
            if not len(up[s]) == len(down[s]) == corner_count(s):
                bad.append(f"{s}: {len(up[s])} up covers, {len(down[s])} down covers")
        for a, b in itertools.combinations(box, 2):
            pairs += 1
            common_up, common_down = len(up[a] & up[b]), len(down[a] & down[b])
            if common_up != common_down or common_up > 1:
                bad.append(f"{a}, {b}: {common_up} common covers, {common_down} common co-covers")
    passed, _ = _first_failures(bad, 1, "")
    return passed, (f"{shapes} shapes, {pairs} pairs" if passed else f"{len(bad)} failures; first: {bad[0]}")


# 10

def phi_of_complement_straight(rows: list[list[int]]) -> list[list[int]]:
    """``P -> phi(complement(P))`` for a straight-shape tableau, shifted back to inner shape 0."""
    n = sum(map(len, rows))
    d = L = max(n, 1)
    R = phi(complement_sct(sct_from_straight(rows, d, L)))
    entries = {(r, c - L): v for (r, c), v in R.entries.items()}
    zero = Shape(d, L, (0,) * d)
    shifted = Shape(d, L, tuple(x - L for x in R.outer.rows))
    return straight_rows(SCT.from_entries(zero, shifted, entries))


def check_evacuation(max_n: int = 8) -> tuple[bool, str]:
    bad, total = [], 0
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            for rows in standard_young_tableaux(lam):
                total += 1
                if phi_of_complement_straight(rows) != evacuation_rows(rows):
                    bad.append(f"{rows}")
    passed, detail = _first_failures(bad, total, f"standard Young tableaux with at most {max_n} cells")
    return passed, detail + " [conjecture-level]"


# 11

def check_fixtures() -> tuple[bool, str]:
    results = list(run_fixtures())
    bad = [f"{r.file}: {r.name}" for r in results if not r.passed]
    return _first_failures(bad, len(results), "golden cases")


CRITERIA: dict[int, tuple[str, Callable[[], tuple[bool, str]]]] = {
    1: ("walks from the corner of the 3-simplex match a_{n,L}", check_motzkin),
    2: ("d=4 spectral sum matches brute-force walk counts", check_d4),
    3: ("CRS is a bijection with swap symmetry", check_crs),
    4: ("insertion iterates match growth diagram columns", check_insertion_growth),
    5: ("complement involution and phi inverse", check_complement),
    6: ("covering maps, walk lifting, g.f = q.h", check_covering),
    7: ("retyping oscillating tableaux is a bijection for every pair of types", check_type_invariance),
    8: ("pairwise-sum identity for oscillating tableaux", check_pairwise_sums),
    9: ("cover counts in the shape poset", check_poset),
    10: ("phi of the complement equals evacuation (conjecture)", check_evacuation),
    11: ("golden worked examples reproduce byte-exactly", check_fixtures),
}


def run_criterion(number: int, seed: int | None = None) -> CriterionResult:
    title, fn = CRITERIA[number]
    if seed is not None and number in (5, 7):
        return _timed(number, title, lambda: fn(seed))
    return _timed(number, title, fn)


def run_all(numbers: Iterable[int] | None = None, seed: int | None = None) -> list[CriterionResult]:
    return [run_criterion(k, seed) for k in (numbers or sorted(CRITERIA))]
