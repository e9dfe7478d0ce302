"""Named correctness checks shared by ``verify`` and the acceptance tests.

Each check takes ``n`` and returns ``(passed, detail)``.  ``applies`` says
whether a check makes sense at that ``n`` (the worked examples only exist
for n = 1 and n = 2).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from biserial_walls.chambers import MAX_DESK_N, chamber_structure
from biserial_walls.cones import ConeH, canonical_form, cone_dim, cone_equal, cone_subset
from biserial_walls.quiver import enumerate_strings, find_bands, star
from biserial_walls.representations import check_relations, enumerate_indecomposables, find_module, is_thin
from biserial_walls.stability import closed_form_cone, nonthin_cone, stability_cone
from biserial_walls.strings import INTERVAL, group_by_star, phi, profile, psi, star_classes
from biserial_walls.subobjects import quotient_dimvectors, subobject_dimvectors

Outcome = tuple[bool, str]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"{status} {self.name} ({self.seconds:.2f}s){tail}"


def _desc(*rows: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Rows written as (v_n, ..., v_0), returned ascending."""
    return tuple(tuple(reversed(r)) for r in rows)


# Worked examples, written in the printed descending order.
# n = 1: coordinates (v_1, v_0).
REFERENCE_N1: dict[str, ConeH] = {
    "S0": ConeH(2, _desc((0, 1))),
    "S1": ConeH(2, _desc((1, 0))),
    # the ray through (1, -1): v_1 + v_0 = 0 and v_0 <= 0
    "M(0,1,-1)": ConeH(2, _desc((1, 1)), _desc((0, 1))),
    "M(0,1,1)": ConeH(2, _desc((1, 1)), _desc((0, -1))),
    "M(b0a0)": ConeH(2, _desc((1, 0), (0, 1))),
}

# n = 2: coordinates (x, y, z) = (v_2, v_1, v_0).
REFERENCE_N2: dict[str, ConeH] = {
    "S0": ConeH(3, _desc((0, 0, 1))),
    "S1": ConeH(3, _desc((0, 1, 0))),
    "S2": ConeH(3, _desc((1, 0, 0))),
    "M(0,1,-1)": ConeH(3, _desc((0, 1, 1)), _desc((0, 0, 1))),
    "M(0,1,1)": ConeH(3, _desc((0, 1, 1)), _desc((0, 0, -1))),
    "M(1,2,-1)": ConeH(3, _desc((1, 1, 0)), _desc((0, 1, 0))),
    "M(1,2,1)": ConeH(3, _desc((1, 1, 0)), _desc((0, -1, 0))),
    "M(0,2,-1)": ConeH(3, _desc((1, 1, 1)), _desc((1, 0, 0), (0, 0, 1))),
    "M(0,2,1)": ConeH(3, _desc((1, 1, 1)), _desc((-1, 0, 0), (0, 0, -1))),
}


def _golden(n: int, reference: dict[str, ConeH]) -> Outcome:
    bad = []
    for ident, expected in reference.items():
        got = stability_cone(find_module(n, ident).rep)
        if not (cone_equal(got, expected) and canonical_form(got) == canonical_form(expected)):
            bad.append(ident)
    return (not bad, f"mismatched cones: {', '.join(bad)}" if bad else f"{len(reference)} cones match")


def string_class_count(n: int) -> Outcome:
    groups = group_by_star(n)
    expected = (n + 1) ** 2 + 1
    ok = len(groups) == expected and set(groups) == set(star_classes(n))
    return ok, f"{len(groups)} classes from enumeration, expected {expected}"


def indecomposable_count(n: int) -> Outcome:
    size = len(enumerate_indecomposables(n))
    expected = n + (n + 1) ** 2
    return size == expected, f"{size} modules, expected {expected}"


def no_bands(n: int) -> Outcome:
    bands = find_bands(n)
    return not bands, "none" if not bands else f"bands found: {', '.join(map(str, bands))}"


def golden_cones_n1(n: int) -> Outcome:
    return _golden(1, REFERENCE_N1)


def golden_cones_n2(n: int) -> Outcome:
    return _golden(2, REFERENCE_N2)


def oracle_matches_closed_form(n: int) -> Outcome:
    bad, count = [], 0
    for m in enumerate_indecomposables(n):
        c = m.string_class
        if c is None or c.kind != INTERVAL:
            continue
        count += 1
        if not cone_equal(stability_cone(m.rep), closed_form_cone(c, n)):
            bad.append(m.id)
    return not bad, f"{count} interval classes" if not bad else f"disagree: {', '.join(bad)}"


def nonthin_spaces(n: int) -> Outcome:
    bad = []
    for m in enumerate_indecomposables(n):
        if is_thin(m.rep):
            continue
        closed = nonthin_cone(m.string_class if m.string_class else m.r_index, n)
        coordinate = all(sorted(e) == [0] * n + [1] for e in closed.equalities) and not closed.inequalities
        oracle = stability_cone(m.rep)
        if not coordinate or cone_dim(closed) > n - 1 or not cone_equal(oracle, closed):
            bad.append(m.id)
    return not bad, "oracle equals coordinate subspaces" if not bad else f"failed: {', '.join(bad)}"


def thin_reduction(n: int) -> Outcome:
    modules = enumerate_indecomposables(n)
    cones = {m.id: stability_cone(m.rep) for m in modules}
    thin = [m.id for m in modules if is_thin(m.rep)]
    bad = [
        m.id
        for m in modules
        if not any(cone_subset(cones[m.id], cones[t]) for t in thin)
    ]
    return not bad, f"{len(modules)} modules covered" if not bad else f"no thin cover: {', '.join(bad)}"


def sub_quot_symmetry(n: int) -> Outcome:
    bad = [
        m.id
        for m in enumerate_indecomposables(n)
        if not is_thin(m.rep) and subobject_dimvectors(m.rep) != quotient_dimvectors(m.rep)
    ]
    return not bad, "subobjects equal quotients" if not bad else f"asymmetric: {', '.join(bad)}"


def chambers_n1(n: int) -> Outcome:
    result = chamber_structure(1)
    got = (len(result.walls), len(result.regions), result.merges, result.count)
    return got == (4, 6, 0, 6), "walls={} regions={} merges={} chambers={}".format(*got)


def property_suite(n: int, seed: int = 0) -> Outcome:
    failures = []
    for w in enumerate_strings(n):
        if w.is_alternating() and len(w) >= 1:
            f = profile(w)
            steps = {y - x for x, y in zip(f, f[1:])}
            if len(steps) != 1 or sorted(f) != list(range(min(f), max(f) + 1)):
                failures.append(f"profile {w}")
        c = phi(w, n)
        if psi(c, n) not in (w, star(w)):
            failures.append(f"psi(phi({w}))")
    for c in star_classes(n):
        if phi(psi(c, n), n) != c:
            failures.append(f"phi(psi({c.label}))")
    failures += [f"relations {m.id}" for m in enumerate_indecomposables(n) if not check_relations(m.rep)]
    if n <= MAX_DESK_N:
        rng = random.Random(seed)
        base = chamber_structure(n)
        size = len(base.hyperplanes)
        for _ in range(2):
            order = rng.sample(range(size), size)
            again = chamber_structure(n, order=order)
            if again.count != base.count or [c.region_ids for c in again.chambers] != [c.region_ids for c in base.chambers]:
                failures.append(f"chamber order {order}")
    return not failures, "all properties hold" if not failures else "; ".join(failures[:5])


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[int], Outcome]
    applies: Callable[[int], bool] = lambda n: True


CHECKS: tuple[Check, ...] = (
    Check("string-class-count", string_class_count),
    Check("indecomposable-count", indecomposable_count),
    Check("no-bands", no_bands),
    Check("golden-cones-n1", golden_cones_n1, lambda n: n == 1),
    Check("golden-cones-n2", golden_cones_n2, lambda n: n == 2),
    Check("oracle-vs-closed-form", oracle_matches_closed_form),
    Check("nonthin-stability-spaces", nonthin_spaces),
    Check("thin-reduction", thin_reduction),
    Check("sub-quot-symmetry", sub_quot_symmetry),
    Check("chambers-n1", chambers_n1, lambda n: n == 1),
    Check("property-suite", property_suite),
)

CHECK_NAMES = tuple(c.name for c in CHECKS)


def run_check(check: Check, n: int) -> CheckResult:
    start = time.perf_counter()
    try:
        passed, detail = check.run(n)
    except Exception as exc:  # a crash is a failed check, reported by name
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(check.name, passed, time.perf_counter() - start, detail)


def verify(n: int, fail_fast: bool = True) -> list[CheckResult]:
    """Run every applicable check at ``n``; stop at the first failure by default."""
    results = []
    for check in CHECKS:
        if not check.applies(n):
            continue
        result = run_check(check, n)
        results.append(result)
        if fail_fast and not result.passed:
            break
    return results
