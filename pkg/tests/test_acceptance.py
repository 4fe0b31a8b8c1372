"""Every acceptance criterion, one test each.

A pass/fail line per criterion is printed (visible with ``-s``) and repeated
in the terminal summary.  Run directly with ``python3 tests/test_acceptance.py``
for the plain report.
"""

import sys

import pytest

from sympoly.verify import CRITERIA, run_criterion


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, acceptance_log):
    result = run_criterion(number)
    line = result.line()
    print(line)
    for note in result.notes:
        print(f"    note: {note}")
    acceptance_log.append(line)
    failures = "\n".join(f"{c.name}: expected {c.expected!r}, got {c.actual!r}"
                         for c in result.failures())
    assert result.passed, failures


if __name__ == "__main__":
    ok = True
    for n in sorted(CRITERIA):
        r = run_criterion(n)
        print(r.line(), flush=True)
        ok &= r.passed
    sys.exit(0 if ok else 1)
