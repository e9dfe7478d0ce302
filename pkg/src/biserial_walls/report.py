"""JSON-ready reports and text rendering shared by the CLI.

Rationals are written as strings ``"p/q"`` (``"p"`` when integral) so JSON
never carries a float.  Vectors are ascending by vertex unless the caller asks
for ``paper-descending`` order, which lists ``v_n`` first.
"""

from __future__ import annotations

import json
from itertools import product
from fractions import Fraction
from typing import Any, Sequence

from biserial_walls.chambers import FanChambers, chamber_cone
from biserial_walls.cones import ConeH, cone_dim, double_description, minimal_h
from biserial_walls.linalg import primitive, rref, sign_normalized
from biserial_walls.representations import Indecomposable, is_thin
from biserial_walls.strings import StringClass, profile, psi
from biserial_walls.quiver import star

ASCENDING = "ascending"
DESCENDING = "paper-descending"
ORDERS = (ASCENDING, DESCENDING)


def rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def ordered(v: Sequence, order: str) -> list:
    return list(reversed(v)) if order == DESCENDING else list(v)


def vector(v: Sequence, order: str) -> list[str]:
    return [rational(x) for x in ordered(v, order)]


def variable_names(n: int, order: str) -> list[str]:
    """Names in ascending vertex order; descending small cases use x, y, z."""
    if order == DESCENDING and n <= 2:
        return list(reversed("xyz"[: n + 1]))
    return [f"v{i}" for i in range(n + 1)]


def linear_form(coeffs: Sequence, names: Sequence[str], order: str) -> str:
    terms = []
    for c, name in zip(ordered(coeffs, order), ordered(names, order)):
        c = Fraction(c)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = name if mag == 1 else f"{rational(mag)}{name}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        text += sign + body
    return text


def constraint_text(cone: ConeH, order: str) -> dict[str, list[str]]:
    """Human-readable constraints; all-nonpositive rows print as ``... >= 0``."""
    names = variable_names(cone.ambient_dim - 1, order)
    eqs = [linear_form(e, names, order) + "=0" for e in cone.equalities]
    ineqs = []
    for b in cone.inequalities:
        if all(x <= 0 for x in b):
            ineqs.append(linear_form([-x for x in b], names, order) + "≥0")
        else:
            ineqs.append(linear_form(b, names, order) + "≤0")
    return {"equalities": eqs, "inequalities": ineqs}


def _sparsest(b, eqs) -> tuple:
    """The variant of ``b`` modulo small multiples of the equalities with fewest
    nonzero entries, ties broken towards low vertices."""
    best = None
    for ts in product((-1, 0, 1), repeat=len(eqs)):
        w = list(b)
        for t, e in zip(ts, eqs):
            w = [x + t * y for x, y in zip(w, e)]
        if not any(w):
            continue
        support = tuple(i for i, x in enumerate(w) if x)
        key = (len(support), support, ts != (0,) * len(eqs))
        if best is None or key < best[0]:
            best = (key, primitive(w))
    return best[1]


def display_h(cone: ConeH) -> ConeH:
    """Irredundant H-form for printing: RREF equalities and sparse inequalities."""
    small = minimal_h(cone)
    rows, _ = rref(small.equalities)
    eqs = [sign_normalized(r) for r in rows]
    ineqs = sorted(
        (_sparsest(b, eqs) for b in small.inequalities),
        key=lambda v: tuple(abs(x) for x in reversed(v)),
        reverse=True,
    )
    return ConeH(cone.ambient_dim, tuple(eqs), tuple(ineqs))


def class_record(c: StringClass, n: int) -> dict[str, Any]:
    w = psi(c, n)
    return {
        "class": c.label,
        "kind": c.kind,
        "a": c.a,
        "b": c.b,
        "eta": c.eta,
        "word": str(w),
        "star_word": str(star(w)),
        "profile": profile(w),
    }


def module_record(m: Indecomposable, order: str) -> dict[str, Any]:
    record: dict[str, Any] = {
        "id": m.id,
        "kind": "string" if m.is_string_module else "biserial",
        "dim_vector": ordered(m.rep.dims, order),
        "thin": is_thin(m.rep),
    }
    if m.string_class is not None:
        record["word"] = str(psi(m.string_class, m.rep.n))
    else:
        record["r_index"] = m.r_index
    return record


def cone_record(ident: str, cone: ConeH, order: str, rays: bool = True) -> dict[str, Any]:
    small = display_h(cone)
    record: dict[str, Any] = {
        "id": ident,
        "dim": cone_dim(cone),
        "equalities": [vector(e, order) for e in small.equalities],
        "inequalities": [vector(b, order) for b in small.inequalities],
        "text": constraint_text(small, order),
    }
    if rays:
        v = double_description(cone)
        record["rays"] = [vector(r, order) for r in v.rays]
        record["lineality"] = [vector(vec, order) for vec in v.lineality]
    return record


def chambers_record(result: FanChambers, detail: bool = False, emit_rays: bool = False, order: str = ASCENDING) -> dict[str, Any]:
    record: dict[str, Any] = {
        "n": result.n,
        "walls": len(result.walls),
        "regions": len(result.regions),
        "chambers": result.count,
    }
    if detail or emit_rays:
        record["merges"] = result.merges
        composition = []
        for chamber in result.chambers:
            entry: dict[str, Any] = {
                "id": chamber.id,
                "regions": [result.regions[i].signs for i in chamber.region_ids],
            }
            if emit_rays:
                entry["rays"] = [vector(r, order) for r in chamber_cone(result, chamber).rays]
            composition.append(entry)
        record["composition"] = composition
    return record


def dumps(obj: Any) -> str:
    """Canonical JSON: insertion key order, compact separators, UTF-8 text."""
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(str(r[i])) for r in rows + [header]) for i in range(len(header))]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)
