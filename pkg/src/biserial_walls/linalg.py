"""Exact linear algebra over the rationals on plain lists of ``Fraction``."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
IntVector = tuple[int, ...]


def as_fractions(v: Iterable) -> Vector:
    return tuple(Fraction(x) for x in v)


def dot(u: Sequence, v: Sequence):
    return sum((x * y for x, y in zip(u, v)), 0)


def primitive(v: Iterable) -> IntVector:
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    v = as_fractions(v)
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def sign_normalized(v: Iterable) -> IntVector:
    """Primitive integer vector with positive leading nonzero entry."""
    p = primitive(v)
    for x in p:
        if x:
            return p if x > 0 else tuple(-y for y in p)
    return p


def rref(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(as_fractions(r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : row . x = 0 for every row}."""
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def in_span(v: Sequence, rows: Sequence[Sequence]) -> bool:
    return rank(list(rows) + [v]) == rank(rows)
