"""Acceptance criteria, one test each, at desk scale.

Each test prints a single PASS/FAIL line (visible in the terminal even
without ``-s``) and then asserts the suite found no counterexample.
"""

import pytest

from kshapes import verify

CRITERIA = {
    1: ("branching tables, degrees 2-6, every k", lambda: verify.verify_tables(range(2, 7))),
    2: ("tableau decomposition, k in 2..4, boundary <= 7", lambda: verify.verify_decomposition([2, 3, 4], 7)),
    3: ("weak bijection, k in 2..3, boundary <= 6", lambda: verify.verify_bijection([2, 3], 6)),
    4: ("push/pull round trips, k <= 3, boundary <= 5", lambda: verify.verify_roundtrip([2, 3], 5)),
    5: ("pieri identity, k in 2..3, n <= 5, r < k", lambda: verify.verify_pieri([2, 3], 5)),
    6: ("structural suite, k <= 4, n <= 8", lambda: verify.verify_structure([2, 3, 4], 8)),
    7: ("pushout of equivalent paths, k <= 3, n <= 5", lambda: verify.verify_equivalence([2, 3], 5)),
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    title, suite = CRITERIA[number]
    report = suite()
    status = "PASS" if report.passed and report.checked else "FAIL"
    with capsys.disabled():
        print(f"\ncriterion {number} {status}: {title} ({report.checked} checked, {len(report.failures)} failures)")
        for msg in report.failures[:10]:
            print(f"    {msg}")
    assert report.checked > 0
    assert report.passed, report.failures[:10]
