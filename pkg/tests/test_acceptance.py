"""Acceptance criteria, one test each, printing a PASS/FAIL line per criterion.

Run directly (``python tests/test_acceptance.py``) for just the table.
"""

from __future__ import annotations

import pytest

from cylwalk.verify import CRITERIA, DEFAULT_SEED, run_criterion


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    result = run_criterion(number, DEFAULT_SEED)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.line()


if __name__ == "__main__":
    import sys

    results = [run_criterion(k, DEFAULT_SEED) for k in sorted(CRITERIA)]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
