"""Acceptance suite: one test per corpus criterion.

Each test runs a single criterion end to end and prints a one-line
verdict.  Run with -v (or -s to see the detail lines) for the per
criterion report.
"""

import pytest

from belyilab.corpus import CRITERIA, DEFAULT_SEED, criterion_10


@pytest.mark.parametrize(
    "number,description,fn",
    CRITERIA,
    ids=["criterion_%02d" % number for number, _, _ in CRITERIA],
)
def test_criterion(number, description, fn):
    try:
        if fn is criterion_10:
            detail = fn(DEFAULT_SEED)
        else:
            detail = fn()
    except Exception as exc:
        print("criterion %2d: FAIL  %s -- %s" % (number, description, exc))
        raise
    print("criterion %2d: PASS  %s -- %s" % (number, description, detail))
