"""The acceptance gate: every criterion runs and must pass.

Each criterion is its own parametrized test, so a ``pytest -v`` run shows
one pass/fail line per criterion; the summary line for each is also printed
(visible with ``-s`` or in the captured output of a failure).
"""

import pytest

from ribbonforge import criterion_numbers, run_criterion


@pytest.mark.parametrize("number", criterion_numbers())
def test_criterion(number):
    result = run_criterion(number)
    print(result.line)
    assert result.passed, result.line
