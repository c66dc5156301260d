"""Walk models and the covering maps between them.

Four directed graphs are modelled:

``shapes``
    cylindric shapes of period (d, L); an edge adds one cell in row ``i``.
``simplex``
    points of the dilated simplex ``x_1 + ... + x_d = L``; the forward step
    with label ``i`` is ``x -> x - e_i + e_{i+1}`` (indices mod d).
``tasep``
    cyclic binary words with d ones and L zeros; the forward step with label
    ``r`` turns ``u[r-1] u[r] = 01`` into ``10`` (1-based, cyclic).
``necklace``
    rotation classes of such words, represented by their least rotation,
    with edge labels taken as positions in that representative.

Vertices are ``Shape``, ``tuple[int, ...]`` (simplex), ``str`` (tasep) and
``Necklace`` respectively.  The maps f, g, h, q send edges to edges; for each
cover ``edge_label`` records where an edge goes, which is all that walk
lifting needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterator, Sequence

from .shapes import DomainError, Shape, add_cell, addable_rows, remove_cell, removable_rows

MODELS = ("shapes", "simplex", "tasep", "necklace")
COVERS = {
    # name: (source model, target model)
    "f": ("shapes", "simplex"),
    "g": ("simplex", "necklace"),
    "h": ("shapes", "tasep"),
    "q": ("tasep", "necklace"),
    "gf": ("shapes", "necklace"),
}


class WalkError(DomainError):
    kind = "walk"


@dataclass(frozen=True, slots=True)
class Necklace:
    """Rotation class of a binary word, stored as its least rotation."""

    canonical: str

    def __post_init__(self) -> None:
        if least_rotation(self.canonical)[0] != self.canonical:
            raise WalkError(f"{self.canonical!r} is not the least rotation of its class")


@dataclass(frozen=True)
class Walk:
    """A walk in one of the models: a start vertex and ``(label, sign)`` steps."""

    model: str
    start: Hashable
    steps: tuple[tuple[int, str], ...]

    @property
    def type_word(self) -> str:
        return "".join(s for _, s in self.steps)


def least_rotation(s: str) -> tuple[str, int]:
    """Least rotation of ``s`` and the smallest shift ``k`` with ``s[k:] + s[:k]`` minimal.

    Booth's algorithm, linear time.

    >>> least_rotation("0011001")
    ('0010011', 4)
    """
    n = len(s)
    if n == 0:
        return s, 0
    ss = s + s
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = fail[j - k - 1]
        while i != -1 and c != ss[k + i + 1]:
            if c < ss[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if c != ss[k + i + 1]:
            if c < ss[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return ss[k:k + n], k


def rotate(u: str, k: int) -> str:
    """Apply the left rotation ``k`` times (negative ``k`` rotates right)."""
    if not u:
        return u
    k %= len(u)
    return u[k:] + u[:k]


# Vertices

def simplex_point(coords: Sequence[int], L: int | None = None) -> tuple[int, ...]:
    x = tuple(coords)
    if not x or any((not isinstance(c, int)) or c < 0 for c in x):
        raise WalkError(f"simplex coordinates must be nonnegative integers, got {list(x)}")
    if L is not None and sum(x) != L:
        raise WalkError(f"coordinates sum to {sum(x)}, expected L={L}")
    return x


def tasep_state(bits: str, d: int | None = None, L: int | None = None) -> str:
    if not bits or set(bits) - {"0", "1"}:
        raise WalkError(f"a state is a nonempty word over 0/1, got {bits!r}")
    if d is not None and bits.count("1") != d:
        raise WalkError(f"state {bits} has {bits.count('1')} particles, expected {d}")
    if L is not None and bits.count("0") != L:
        raise WalkError(f"state {bits} has {bits.count('0')} holes, expected {L}")
    return bits


def corner(d: int, L: int) -> tuple[int, ...]:
    """The corner ``(L, 0, ..., 0)`` of the simplex."""
    return (L,) + (0,) * (d - 1)


def word_of_point(x: Sequence[int]) -> str:
    """``0^{x_1} 1 0^{x_2} 1 ... 0^{x_d} 1``."""
    return "".join("0" * c + "1" for c in x)


# Covering maps

def map_f(shape: Shape) -> tuple[int, ...]:
    """Successive differences ``(lam[0]-lam[1], ..., lam[d-1]-lam[d])``."""
    return tuple(shape[i - 1] - shape[i] for i in range(1, shape.d + 1))


def map_g(x: Sequence[int]) -> Necklace:
    return Necklace(least_rotation(word_of_point(x))[0])


def map_h(shape: Shape) -> str:
    """The word of ``map_f(shape)`` rotated left ``lam[d]`` times."""
    return rotate(word_of_point(map_f(shape)), shape.rows[-1])


def map_q(u: str) -> Necklace:
    return Necklace(least_rotation(u)[0])


def map_gf(shape: Shape) -> Necklace:
    return map_g(map_f(shape))


def reverse_complement(u: str) -> str:
    """``u'[k] = 1 - u[N + 1 - k]``; exchanges the roles of d and L.

    >>> reverse_complement("10011")
    '00110'
    """
    return "".join("1" if b == "0" else "0" for b in reversed(u))


# Neighbours

def _cyclic_pairs(u: str, pair: str) -> list[int]:
    """Positions ``r`` (1-based) with ``u[r-1] u[r] == pair``, read cyclically."""
    n = len(u)
    return [r for r in range(1, n + 1) if u[r - 2] + u[r - 1] == pair]


def _swap(u: str, r: int) -> str:
    """Exchange the letters at cyclic positions ``r - 1`` and ``r``."""
    chars = list(u)
    a, b = (r - 2) % len(u), (r - 1) % len(u)
    chars[a], chars[b] = chars[b], chars[a]
    return "".join(chars)


def neighbors(model: str, vertex, sign: str) -> list[tuple[int, Hashable]]:
    """Out-neighbours (``sign='+'``) or in-neighbours (``'-'``) with their edge labels.

    Labels are sorted, and in a multigraph the same target may appear under
    several labels.
    """
    forward = _check_sign(sign)
    if model == "shapes":
        if forward:
            return [(i, add_cell(vertex, i)) for i in addable_rows(vertex)]
        return [(i, remove_cell(vertex, i)) for i in removable_rows(vertex)]
    if model == "simplex":
        x = vertex
        d = len(x)
        out = []
        for i in range(d):
            j = (i + 1) % d
            y = list(x)
            if forward and x[i] > 0:
                y[i] -= 1
                y[j] += 1
            elif not forward and x[j] > 0:
                y[i] += 1
                y[j] -= 1
            else:
                continue
            out.append((i + 1, tuple(y)))
        return out
    if model == "tasep":
        pair = "01" if forward else "10"
        return [(r, _swap(vertex, r)) for r in _cyclic_pairs(vertex, pair)]
    if model == "necklace":
        pair = "01" if forward else "10"
        c = vertex.canonical
        return [(r, Necklace(least_rotation(_swap(c, r))[0])) for r in _cyclic_pairs(c, pair)]
    raise WalkError(f"unknown model {model!r}")


def _check_sign(sign: str) -> bool:
    if sign not in ("+", "-"):
        raise WalkError(f"sign must be '+' or '-', got {sign!r}")
    return sign == "+"


def step(model: str, vertex, label: int, sign: str):
    for lab, v in neighbors(model, vertex, sign):
        if lab == label:
            return v
    raise WalkError(f"no {sign} step labelled {label} from {_show(vertex)} in the {model} model")


def _show(v) -> str:
    if isinstance(v, Necklace):
        return v.canonical
    return str(v if not isinstance(v, tuple) else list(v))


def walk_vertices(walk: Walk) -> list:
    out = [walk.start]
    for label, sign in walk.steps:
        out.append(step(walk.model, out[-1], label, sign))
    return out


# Edge correspondences for the covers

def _block_ends(x: Sequence[int]) -> list[int]:
    """Position (1-based) of the ``i``-th 1 in ``word_of_point(x)``."""
    ends, pos = [], 0
    for c in x:
        pos += c + 1
        ends.append(pos)
    return ends


def _point_label_to_word(x: Sequence[int], i: int, sign: str) -> int:
    """Position in ``word_of_point(x)`` of the swap realising step ``(i, sign)``."""
    p = _block_ends(x)[i - 1]
    return p if sign == "+" else p % len(word_of_point(x)) + 1


def _shift(pos: int, k: int, n: int) -> int:
    """Where position ``pos`` ends up after rotating a length-``n`` word left by ``k``."""
    return (pos - 1 - k) % n + 1


def image(cover: str, vertex):
    if cover == "f":
        return map_f(vertex)
    if cover == "g":
        return map_g(vertex)
    if cover == "h":
        return map_h(vertex)
    if cover == "q":
        return map_q(vertex)
    if cover == "gf":
        return map_gf(vertex)
    raise WalkError(f"unknown cover {cover!r}")


def edge_label(cover: str, vertex, label: int, sign: str) -> int:
    """Label of the image of the edge ``(label, sign)`` leaving ``vertex`` under ``cover``."""
    if cover == "f":
        return label
    if cover == "g":
        word = word_of_point(vertex)
        k = least_rotation(word)[1]
        return _shift(_point_label_to_word(vertex, label, sign), k, len(word))
    if cover == "h":
        x = map_f(vertex)
        n = vertex.d + vertex.L
        return _shift(_point_label_to_word(x, label, sign), vertex.rows[-1], n)
    if cover == "q":
        k = least_rotation(vertex)[1]
        return _shift(label, k, len(vertex))
    if cover == "gf":
        return edge_label("g", map_f(vertex), label, sign)
    raise WalkError(f"unknown cover {cover!r}")


def project_walk(cover: str, walk: Walk) -> Walk:
    src, dst = COVERS[cover]
    if walk.model != src:
        raise WalkError(f"cover {cover} maps {src} walks, got a {walk.model} walk")
    steps = []
    v = walk.start
    for label, sign in walk.steps:
        steps.append((edge_label(cover, v, label, sign), sign))
        v = step(src, v, label, sign)
    return Walk(dst, image(cover, walk.start), tuple(steps))


def lift_walk(cover: str, start, walk: Walk) -> Walk:
    """The unique walk from ``start`` whose image under ``cover`` is ``walk``."""
    src, dst = COVERS[cover]
    if walk.model != dst:
        raise WalkError(f"cover {cover} lifts {dst} walks, got a {walk.model} walk")
    if image(cover, start) != walk.start:
        raise WalkError(f"{_show(start)} does not lie over {_show(walk.start)}")
    steps = []
    v = start
    for label, sign in walk.steps:
        hits = [(lab, w) for lab, w in neighbors(src, v, sign) if edge_label(cover, v, lab, sign) == label]
        if len(hits) != 1:
            raise WalkError(f"step ({label},{sign}) from {_show(v)} has {len(hits)} lifts")
        steps.append((hits[0][0], sign))
        v = hits[0][1]
    return Walk(src, start, tuple(steps))


# Tableaux as walks

def walk_of_tableau(T) -> Walk:
    """Simplex walk traced by an SCT (rows of its entries) or an OCT (its steps)."""
    from .tableaux import SCT, oct_steps

    if isinstance(T, SCT):
        return Walk("simplex", map_f(T.inner), tuple((row, "+") for row, _ in T.cells))
    return Walk("simplex", map_f(T.shapes[0]), tuple(oct_steps(T)))


def tableau_of_walk(alpha: Shape, walk: Walk):
    """Lift a simplex walk to the oscillating tableau starting at ``alpha``."""
    from .tableaux import OCT

    shape_walk = lift_walk("f", alpha, walk)
    return OCT(tuple(walk_vertices(shape_walk)))


def shape_over(x: Sequence[int], L: int) -> Shape:
    """The shape with last window entry 0 that maps to ``x`` under ``map_f``."""
    x = simplex_point(x, L)
    rows = [0] * len(x)
    for i in range(len(x) - 2, -1, -1):
        rows[i] = rows[i + 1] + x[i + 1]
    return Shape(len(x), L, tuple(rows))


def walk_to_tasep(walk: Walk, *, anchor: str = "start") -> Walk:
    """Turn a simplex walk into a particle walk.

    With ``anchor='start'`` the particles are numbered left to right in the
    word of the starting point and step ``(i, +)`` moves particle ``i`` one
    site to the left.  With ``anchor='end'`` the numbering is taken in the
    word of the final point and the walk is rebuilt backwards, each step
    undone by moving the particle one site to the right.
    """
    if walk.model != "simplex":
        raise WalkError("expected a simplex walk")
    pts = walk_vertices(walk)
    if anchor == "start":
        u, steps = word_of_point(pts[0]), walk.steps
    elif anchor == "end":
        u, steps = word_of_point(pts[-1]), tuple((i, "-" if s == "+" else "+") for i, s in reversed(walk.steps))
    else:
        raise WalkError(f"anchor must be 'start' or 'end', got {anchor!r}")
    n = len(u)
    sites = [p for p in range(1, n + 1) if u[p - 1] == "1"]
    states = [u]
    labels = []
    for i, sign in steps:
        src = sites[i - 1]
        dst = (src - 2) % n + 1 if sign == "+" else src % n + 1
        cur = states[-1]
        if cur[dst - 1] == "1":
            raise WalkError(f"particle {i} is blocked at site {src}")
        chars = list(cur)
        chars[src - 1], chars[dst - 1] = "0", "1"
        states.append("".join(chars))
        sites[i - 1] = dst
        labels.append(src if sign == "+" else dst)
    if anchor == "start":
        return Walk("tasep", u, tuple((r, s) for r, (_, s) in zip(labels, steps)))
    # Replay in forward order: the walk starts at the last state built.
    fwd = [(r, "+" if s == "-" else "-") for r, (_, s) in zip(labels, steps)]
    return Walk("tasep", states[-1], tuple(reversed(fwd)))


def enumerate_walks(model: str, start, w: str, *, collect: bool = False, cap: int | None = None):
    """Count (and optionally list) walks of type ``w`` from ``start``.

    Counting runs a frontier DP keyed on vertices, so multigraph edges are
    counted with multiplicity.  Listing is in lexicographic order of the
    ``(label, sign)`` steps.  Both refuse work above ``cap`` states or walks.
    """
    from .enumeration import ResourceCapError, state_cap

    cap = state_cap() if cap is None else cap
    for s in w:
        _check_sign(s)
    frontier = {start: 1}
    seen = 1
    for s in w:
        nxt: dict = {}
        for v, c in frontier.items():
            for _, u in neighbors(model, v, s):
                nxt[u] = nxt.get(u, 0) + c
        frontier = nxt
        seen += len(frontier)
        if seen > cap:
            raise ResourceCapError(f"walk enumeration visits more than {cap} states")
    count = sum(frontier.values())
    if not collect:
        return count
    if count > cap:
        raise ResourceCapError(f"{count} walks exceed the cap of {cap}")
    walks: list[Walk] = []

    def rec(v, steps: list) -> None:
        if len(steps) == len(w):
            walks.append(Walk(model, start, tuple(steps)))
            return
        for lab, u in neighbors(model, v, w[len(steps)]):
            steps.append((lab, w[len(steps)]))
            rec(u, steps)
            steps.pop()

    rec(start, [])
    return count, walks


def tasep_states(d: int, L: int) -> Iterator[str]:
    from itertools import combinations

    n = d + L
    for ones in combinations(range(n), d):
        yield "".join("1" if k in ones else "0" for k in range(n))


def simplex_points(d: int, L: int) -> Iterator[tuple[int, ...]]:
    if d == 1:
        yield (L,)
        return
    for first in range(L, -1, -1):
        for rest in simplex_points(d - 1, L - first):
            yield (first,) + rest


def necklaces(d: int, L: int) -> list[Necklace]:
    return sorted({map_q(u) for u in tasep_states(d, L)}, key=lambda c: c.canonical)
