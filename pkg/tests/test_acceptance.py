"""The eleven acceptance criteria, each at its stated range and time limit.

Every criterion prints one PASS/FAIL line to the terminal, even when pytest
captures output.
"""

import time

import pytest

from biserial_walls import checks

CRITERIA = [
    (1, "string-class-count", checks.string_class_count, range(1, 7), 1.0),
    (2, "indecomposable-count", checks.indecomposable_count, range(1, 7), 1.0),
    (3, "no-bands", checks.no_bands, range(1, 7), 5.0),
    (4, "golden-cones-n1", checks.golden_cones_n1, [1], 1.0),
    (5, "golden-cones-n2", checks.golden_cones_n2, [2], 1.0),
    (6, "oracle-vs-closed-form", checks.oracle_matches_closed_form, range(1, 4), 30.0),
    (7, "nonthin-stability-spaces", checks.nonthin_spaces, range(1, 5), 10.0),
    (8, "thin-reduction", checks.thin_reduction, range(1, 5), 30.0),
    (9, "sub-quot-symmetry", checks.sub_quot_symmetry, range(1, 6), 10.0),
    (10, "chambers-n1", checks.chambers_n1, [1], 1.0),
    (11, "property-suite", checks.property_suite, range(1, 5), 60.0),
]


@pytest.mark.parametrize("number,name,check,ns,limit", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(number, name, check, ns, limit, capsys):
    failures = []
    start = time.perf_counter()
    for n in ns:
        passed, detail = check(n)
        if not passed:
            failures.append(f"n={n}: {detail}")
    elapsed = time.perf_counter() - start
    in_time = elapsed < limit
    ok = not failures and in_time
    span = f"n={min(ns)}..{max(ns)}" if len(ns) > 1 else f"n={ns[0]}"
    line = f"[acceptance {number:2d}] {'PASS' if ok else 'FAIL'} {name} {span} {elapsed:.2f}s (limit {limit:g}s)"
    if failures:
        line += " | " + "; ".join(failures)
    elif not in_time:
        line += " | over time limit"
    with capsys.disabled():
        print("\n" + line)
    assert not failures, line
    assert in_time, line


def test_verify_aggregates_exactly_the_criteria():
    names = {c[1] for c in CRITERIA}
    assert set(checks.CHECK_NAMES) == names
    assert len(checks.CHECKS) == 11
