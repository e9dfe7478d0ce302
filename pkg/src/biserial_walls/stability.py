"""King semistability cones D(M) and the walls of B(n).

A vector ``v`` (indexed by vertex, ascending) is in D(M) when
``<v, dim M> = 0`` and ``<v, dim N> <= 0`` for every nonzero proper
subobject N.  Cones are built two ways: from the exhaustive subobject oracle,
and from closed-form interval descriptions.
"""

from __future__ import annotations

from biserial_walls.cones import ConeH, cone_dim
from biserial_walls.representations import Indecomposable, Representation, enumerate_indecomposables, is_thin
from biserial_walls.strings import CYCLE, TRIVIAL, StringClass
from biserial_walls.subobjects import F2, parity_family, subobject_dimvectors

ORACLE = "oracle"
CLOSED_FORM = "closed-form"


def _indicator(n: int, lo: int, hi: int) -> tuple[int, ...]:
    return tuple(int(lo <= j <= hi) for j in range(n + 1))


def _unit(n: int, i: int) -> tuple[int, ...]:
    return _indicator(n, i, i)


def stability_cone(rep: Representation, field: str = F2) -> ConeH:
    """D(M) from the full set of subobject dimension vectors."""
    subs = sorted(subobject_dimvectors(rep, field))
    return ConeH(rep.n + 1, (rep.dims,), tuple(subs))


def closed_form_cone(c: StringClass, n: int) -> ConeH:
    """D(M(c)) for a thin class, without computing any subobjects.

    ``(a, b, -1)``: interval sums over the parity family are <= 0;
    ``(a, b, +1)``: the same sums are >= 0.
    """
    if c.kind == TRIVIAL:
        if c.a > n:
            raise ValueError(f"vertex {c.a} is not on Q({n})")
        return ConeH(n + 1, (_unit(n, c.a),))
    if c.kind == CYCLE:
        raise ValueError("the cycle class is not thin; use nonthin_cone")
    if c.b > n:
        raise ValueError(f"class {c.label} does not live on Q({n})")
    sign = 1 if c.eta == -1 else -1
    ineqs = tuple(
        tuple(sign * x for x in _indicator(n, lo, hi)) for lo, hi in parity_family(c.a, c.b)
    )
    return ConeH(n + 1, (_indicator(n, c.a, c.b),), ineqs)


def nonthin_cone(m: StringClass | int, n: int) -> ConeH:
    """D(M) for the cycle module (pass its class) or for R(i) (pass i).

    These are the coordinate subspaces ``v_n = v_{n-1} = 0`` and
    ``v_i = v_{i+1} = v_{i+2} = 0``.
    """
    if isinstance(m, StringClass):
        if m.kind != CYCLE:
            raise ValueError(f"{m.label} is thin; use closed_form_cone")
        if n < 1 or m.b != n:
            raise ValueError(f"cycle class {m.label} does not belong to n={n}")
        return ConeH(n + 1, (_unit(n, n), _unit(n, n - 1)))
    i = m
    if n < 2 or not 0 <= i <= n - 2:
        raise ValueError(f"R({i}) does not exist for n={n}")
    return ConeH(n + 1, (_unit(n, i), _unit(n, i + 1), _unit(n, i + 2)))


def module_cone(module: Indecomposable, n: int, method: str = ORACLE) -> ConeH:
    if method == ORACLE:
        return stability_cone(module.rep)
    if method != CLOSED_FORM:
        raise ValueError(f"unknown method {method!r}")
    if module.string_class is None:
        return nonthin_cone(module.r_index, n)
    if module.string_class.kind == CYCLE:
        return nonthin_cone(module.string_class, n)
    return closed_form_cone(module.string_class, n)


def walls(n: int, method: str = ORACLE, include_nonthin: bool = False) -> list[tuple[str, ConeH]]:
    """Stability cones of codimension one.

    Only thin modules are tried by default: non-thin cones have codimension
    at least two.  ``include_nonthin`` tries every module anyway.
    """
    out = []
    for module in enumerate_indecomposables(n):
        if not include_nonthin and not is_thin(module.rep):
            continue
        cone = module_cone(module, n, method)
        if cone_dim(cone) == n:
            out.append((module.id, cone))
    return out


def all_stability_cones(n: int, method: str = ORACLE) -> list[tuple[str, ConeH]]:
    return [(m.id, module_cone(m, n, method)) for m in enumerate_indecomposables(n)]

