"""The thirteen-point verification checklist, one test per criterion.

Each criterion is exact: limits, dimensions, decompositions, and survival
sets are compared for equality, never within a tolerance.  The same checks
back the ``projlim selftest`` subcommand.
"""

import pytest

from projlim.acceptance import CHECKS, run_all

RESULTS = run_all()


@pytest.mark.parametrize(
    "result", RESULTS, ids=[f"{r.number:02d}-{r.name}" for r in RESULTS]
)
def test_criterion(result):
    assert result.passed, f"criterion {result.number} ({result.name}): {result.detail}"


def test_all_thirteen_present():
    assert len(CHECKS) == len(RESULTS) == 13
    assert [r.number for r in RESULTS] == list(range(1, 14))
