from __future__ import annotations

import pytest

from cylwalk.shapes import Shape
from cylwalk.tableaux import SCT


def sct(d, L, inner, outer, cells):
    """Tableau from ``{value: (row, col)}``."""
    return SCT.from_entries(
        Shape(d, L, tuple(inner)), Shape(d, L, tuple(outer)), {rc: v for v, rc in cells.items()}
    )


@pytest.fixture
def make_sct():
    return sct


@pytest.fixture
def skew_T():
    """Nine entries over (3,4), inner [3,1,0], outer [5,5,3]."""
    return sct(3, 4, [3, 1, 0], [5, 5, 3],
               {1: (2, 2), 2: (1, 4), 3: (3, 1), 4: (3, 2), 5: (2, 3), 6: (3, 3), 7: (1, 5), 8: (2, 4), 9: (2, 5)})


@pytest.fixture
def phi_pair():
    """(T, P) over (3,3) with phi(T) = P; T has outer shape [2,2,0], P inner shape [2,2,0]."""
    T = sct(3, 3, [-1, -1, -2], [2, 2, 0],
            {1: (1, 0), 2: (3, -1), 3: (1, 1), 4: (2, 0), 5: (2, 1), 6: (1, 2), 7: (2, 2), 8: (3, 0)})
    P = sct(3, 3, [2, 2, 0], [5, 4, 3],
            {1: (1, 3), 2: (3, 1), 3: (3, 2), 4: (2, 3), 5: (3, 3), 6: (1, 4), 7: (1, 5), 8: (2, 4)})
    return T, P


@pytest.fixture
def crs_quad():
    """(T, U, P, Q) over (3,2) with crs(T, U) = (P, Q)."""
    T = sct(3, 2, [1, 1, 0], [3, 3, 1], {1: (1, 2), 2: (3, 1), 3: (1, 3), 4: (2, 2), 5: (2, 3)})
    U = sct(3, 2, [1, 1, 0], [2, 2, 2], {1: (3, 1), 2: (1, 2), 3: (2, 2), 4: (3, 2)})
    P = sct(3, 2, [2, 2, 2], [5, 3, 3], {1: (1, 3), 2: (2, 3), 3: (1, 4), 4: (3, 3), 5: (1, 5)})
    Q = sct(3, 2, [3, 3, 1], [5, 3, 3], {1: (3, 2), 2: (1, 4), 3: (3, 3), 4: (1, 5)})
    return T, U, P, Q
