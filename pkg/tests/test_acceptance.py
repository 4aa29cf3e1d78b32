"""Acceptance criteria, one test each, at the stated (exact) tolerance.

Each test prints a ``[PASS]``/``[FAIL]`` line; the lines are repeated in
the pytest terminal summary.  Run directly (``python tests/test_acceptance.py``)
to get just the table.
"""
import sys

import pytest

from gel.acceptance import CRITERIA, run_check

LINES: list[str] = []

# stated runtime ceilings, seconds
CEILING = {"1": 300, "2": 10, "3": 60, "4": 120, "5": 120, "6": 600, "7": 120,
           "8": 300, "9": 600, "10": 120, "11": 300}


@pytest.mark.parametrize("key", [k for k, _, _ in CRITERIA], ids=[f"criterion_{k}" for k, _, _ in CRITERIA])
def test_criterion(key):
    chk = run_check(key)
    line = chk.line()
    LINES.append(line)
    print(line)
    assert chk.passed, line
    assert chk.seconds < CEILING[key], f"criterion {key} took {chk.seconds:.1f}s"


if __name__ == "__main__":
    failed = 0
    for k, _, _ in CRITERIA:
        chk = run_check(k)
        print(chk.line())
        failed += not chk.passed
    sys.exit(1 if failed else 0)
