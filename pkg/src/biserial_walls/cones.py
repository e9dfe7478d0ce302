"""Exact rational polyhedral cones: H- and V-representations.

Constraints are written ``<e, v> = 0`` (equalities) and ``<b, v> <= 0``
(inequalities).  The V-representation is computed by the double description
method on primitive integer vectors, so no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from biserial_walls.linalg import IntVector, Vector, as_fractions, dot, primitive, rank, rref, sign_normalized


@dataclass(frozen=True)
class ConeH:
    ambient_dim: int
    equalities: tuple[Vector, ...] = ()
    inequalities: tuple[Vector, ...] = ()

    def __post_init__(self) -> None:
        eqs = tuple(as_fractions(e) for e in self.equalities)
        ineqs = tuple(as_fractions(b) for b in self.inequalities)
        for v in eqs + ineqs:
            if len(v) != self.ambient_dim:
                raise ValueError(f"constraint {v} has length {len(v)}, expected {self.ambient_dim}")
        object.__setattr__(self, "equalities", eqs)
        object.__setattr__(self, "inequalities", ineqs)

    def with_constraints(self, equalities: Iterable = (), inequalities: Iterable = ()) -> ConeH:
        return ConeH(
            self.ambient_dim,
            self.equalities + tuple(equalities),
            self.inequalities + tuple(inequalities),
        )


@dataclass(frozen=True)
class ConeV:
    """Extreme rays modulo the lineality space, plus a lineality basis.

    Rays are primitive integer vectors orthogonal to the lineality space and
    sorted lexicographically; the lineality basis is the primitive form of
    the reduced row echelon basis.
    """

    ambient_dim: int
    lineality: tuple[IntVector, ...]
    rays: tuple[IntVector, ...]

    def generators(self) -> list[IntVector]:
        """Rays together with both signs of every lineality vector."""
        return list(self.rays) + [s for line in self.lineality for s in (line, tuple(-x for x in line))]


AnyCone = Union[ConeH, ConeV]


def _int_row(v: Sequence[Fraction]) -> list[int]:
    den = reduce(lcm, (x.denominator for x in v), 1)
    return [int(x * den) for x in v]


def _prim(v: list[int]) -> list[int]:
    g = reduce(gcd, v, 0)
    return v if g in (0, 1) else [x // g for x in v]


def _idot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


class DoubleDescription:
    """Incremental double description state for ``{x : c.x <= 0, e.x = 0}``."""

    def __init__(self, dim: int) -> None:
        self.dim = dim
        self.lineality: list[list[int]] = [[int(i == j) for j in range(dim)] for i in range(dim)]
        self.rays: list[list[int]] = []
        self.zeros: list[int] = []  # bitmask of processed inequalities vanishing on each ray
        self.count = 0

    def copy(self) -> DoubleDescription:
        twin = DoubleDescription.__new__(DoubleDescription)
        twin.dim = self.dim
        twin.lineality = list(self.lineality)
        twin.rays = list(self.rays)
        twin.zeros = list(self.zeros)
        twin.count = self.count
        return twin

    def add(self, c: list[int], equality: bool = False) -> None:
        bit = 0 if equality else 1 << self.count
        if not equality:
            self.count += 1
        if not any(c):
            return
        for k, line in enumerate(self.lineality):
            a = _idot(c, line)
            if a:
                self._split_lineality(c, k, bit, equality)
                return
        values = [_idot(c, r) for r in self.rays]
        pos = [i for i, v in enumerate(values) if v > 0]
        neg = [i for i, v in enumerate(values) if v < 0]
        if not pos and (not equality or not neg):
            self.zeros = [z | bit if values[i] == 0 else z for i, z in enumerate(self.zeros)]
            return
        new_rays, new_zeros = [], []
        for i, v in enumerate(values):
            if v == 0:
                new_rays.append(self.rays[i])
                new_zeros.append(self.zeros[i] | bit)
            elif v < 0 and not equality:
                new_rays.append(self.rays[i])
                new_zeros.append(self.zeros[i])
        for i in pos:
            for j in neg:
                common = self.zeros[i] & self.zeros[j]
                if not self._adjacent(i, j, common):
                    continue
                p, q = self.rays[i], self.rays[j]
                vp, vq = values[i], values[j]
                new_rays.append(_prim([vp * y - vq * x for x, y in zip(p, q)]))
                new_zeros.append(common | bit)
        self.rays, self.zeros = new_rays, new_zeros

    def _adjacent(self, i: int, j: int, common: int) -> bool:
        return not any(
            k != i and k != j and (z & common) == common for k, z in enumerate(self.zeros)
        )

    def _split_lineality(self, c: list[int], k: int, bit: int, equality: bool) -> None:
        l0 = self.lineality.pop(k)
        a = _idot(c, l0)
        if a > 0:
            l0 = [-x for x in l0]
            a = -a
        # x -> (-a) x + (c.x) l0 keeps x in the cone and lands on c.x = 0
        self.lineality = [_prim([-a * x + _idot(c, line) * y for x, y in zip(line, l0)]) for line in self.lineality]
        self.rays = [_prim([-a * x + _idot(c, r) * y for x, y in zip(r, l0)]) for r in self.rays]
        self.zeros = [z | bit for z in self.zeros]
        if not equality:
            everything = (1 << self.count) - 1
            self.rays.append(_prim(l0))
            self.zeros.append(everything & ~bit)


def _orthogonal_basis(vectors: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    basis: list[list[Fraction]] = []
    for v in vectors:
        w = [Fraction(x) for x in v]
        for u in basis:
            f = dot(w, u) / dot(u, u)
            w = [x - f * y for x, y in zip(w, u)]
        if any(w):
            basis.append(w)
    return basis


def _canonical_v(dim: int, lineality: list[list[int]], rays: list[list[int]]) -> ConeV:
    lin_rows, _ = rref(lineality)
    lin = tuple(sign_normalized(r) for r in lin_rows)
    ortho = _orthogonal_basis(lin)
    out = set()
    for r in rays:
        w = [Fraction(x) for x in r]
        for u in ortho:
            f = dot(w, u) / dot(u, u)
            w = [x - f * y for x, y in zip(w, u)]
        if any(w):
            out.add(primitive(w))
    return ConeV(dim, lin, tuple(sorted(out)))


def double_description(c: ConeH) -> ConeV:
    """Exact V-representation of an H-cone; redundant input is fine."""
    dd = DoubleDescription(c.ambient_dim)
    for e in c.equalities:
        dd.add(_int_row(e), equality=True)
    for b in c.inequalities:
        dd.add(_int_row(b))
    return _canonical_v(c.ambient_dim, dd.lineality, dd.rays)


def as_v(c: AnyCone) -> ConeV:
    return c if isinstance(c, ConeV) else double_description(c)


def cone_from_v(v: ConeV) -> ConeH:
    """H-representation of a V-cone via double description on its polar."""
    polar = double_description(ConeH(v.ambient_dim, v.lineality, v.rays))
    return ConeH(v.ambient_dim, polar.lineality, polar.rays)


def cone_dim(c: AnyCone) -> int:
    """Dimension of the linear span of the cone."""
    v = as_v(c)
    return rank(list(v.lineality) + list(v.rays))


def _check_dim(c: AnyCone, dim: int) -> None:
    if c.ambient_dim != dim:
        raise ValueError(f"dimension mismatch: cone in R^{c.ambient_dim}, point in R^{dim}")


def contains_point(c: ConeH, p: Sequence) -> bool:
    _check_dim(c, len(p))
    p = as_fractions(p)
    return all(dot(e, p) == 0 for e in c.equalities) and all(dot(b, p) <= 0 for b in c.inequalities)


def cone_subset(a: AnyCone, b: ConeH) -> bool:
    """Whether cone ``a`` lies inside cone ``b``."""
    if isinstance(b, ConeV):
        b = cone_from_v(b)
    _check_dim(a, b.ambient_dim)
    return all(contains_point(b, g) for g in as_v(a).generators())


def cone_equal(a: AnyCone, b: AnyCone) -> bool:
    ha = cone_from_v(a) if isinstance(a, ConeV) else a
    hb = cone_from_v(b) if isinstance(b, ConeV) else b
    return cone_subset(a, hb) and cone_subset(b, ha)


def minimal_h(c: ConeH) -> ConeH:
    """Same cone with implicit equalities promoted and redundant rows dropped.

    Surviving rows keep their input form, so printed constraints stay
    recognisable.
    """
    gens = as_v(c).generators()
    implicit = [b for b in c.inequalities if all(dot(b, g) == 0 for g in gens)]
    eqs: list[Vector] = []
    for e in list(c.equalities) + implicit:
        if rank(eqs + [e]) > len(eqs):
            eqs.append(e)
    ineqs: list[Vector] = []
    seen = set()
    for b in c.inequalities:
        key = primitive(b)
        if b in implicit or key in seen:
            continue
        seen.add(key)
        ineqs.append(b)
    k = 0
    while k < len(ineqs):
        rest = ConeH(c.ambient_dim, eqs, ineqs[:k] + ineqs[k + 1 :])
        if all(dot(ineqs[k], g) <= 0 for g in as_v(rest).generators()):
            ineqs.pop(k)
        else:
            k += 1
    return ConeH(c.ambient_dim, tuple(eqs), tuple(ineqs))


def canonical_form(c: ConeH) -> tuple[frozenset, frozenset]:
    """Comparable fingerprint: equality span (RREF) and the irredundant
    inequalities reduced modulo that span."""
    m = minimal_h(c)
    rows, pivots = rref(m.equalities)
    reduced = set()
    for b in m.inequalities:
        w = list(b)
        for row, p in zip(rows, pivots):
            f = w[p]
            if f:
                w = [x - f * y for x, y in zip(w, row)]
        reduced.add(primitive(w))
    return frozenset(primitive(r) for r in rows), frozenset(reduced)


def interior_point(v: ConeV) -> tuple[Fraction, ...]:
    """A point in the relative interior of the cone (sum of the rays)."""
    total = [Fraction(0)] * v.ambient_dim
    for r in v.rays:
        total = [x + y for x, y in zip(total, r)]
    return tuple(total)
