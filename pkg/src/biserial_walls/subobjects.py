"""Dimension vectors of subobjects and quotients of B(n)-modules.

Two independent routes: a combinatorial rule for thin string modules, and an
exhaustive search over tuples of subspaces (over F2, or over Q with a sampled
family of lines) closed under every arrow map.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

from biserial_walls.linalg import rank
from biserial_walls.representations import Matrix, Representation
from biserial_walls.strings import INTERVAL, StringClass

F2 = "F2"
RATIONALS_SAMPLED = "rationals-sampled"

MAX_VERTEX_DIM = 2


@dataclass(frozen=True, order=True)
class SupportInterval:
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def indicator(self, n: int) -> tuple[int, ...]:
        return tuple(int(self.lo <= j <= self.hi) for j in range(n + 1))


def _is_sink(c: StringClass, x: int) -> bool:
    # psi(a, b, -1) ends with alpha_a^*, so a is a sink; sinks alternate from there
    return ((x - c.a) % 2 == 0) == (c.eta == -1)


def thin_subobject_supports(c: StringClass) -> set[SupportInterval]:
    """Supports of the indecomposable subobjects of M(a, b, eta), the module included.

    A sub-interval is a submodule support when none of its sources has an
    arrow leaving it.  For eta = -1 this is the family a' = a mod 2 and
    (b' = b or b' = a mod 2); the same family gives the quotient supports
    of M(a, b, +1).
    """
    if c.kind != INTERVAL:
        raise ValueError(f"{c.label} is not an interval class")
    out = set()
    for lo in range(c.a, c.b + 1):
        for hi in range(lo, c.b + 1):
            closed = True
            for x in {lo, hi}:
                if _is_sink(c, x):
                    continue
                if (x - 1 >= c.a and x - 1 < lo) or (x + 1 <= c.b and x + 1 > hi):
                    closed = False
            if closed:
                out.add(SupportInterval(lo, hi))
    return out


def parity_family(a: int, b: int) -> list[tuple[int, int]]:
    """Intervals [a', b'] in [a, b] with a' = a mod 2 and (b' = b or b' = a mod 2)."""
    return [
        (lo, hi)
        for lo in range(a, b + 1)
        for hi in range(lo, b + 1)
        if (lo - a) % 2 == 0 and (hi == b or (hi - a) % 2 == 0)
    ]


def _check_dims(rep: Representation) -> None:
    if any(d > MAX_VERTEX_DIM for d in rep.dims):
        raise ValueError(
            f"exhaustive subobject search refuses vertex dimensions above {MAX_VERTEX_DIM}: {rep.dims}"
        )


def _f2_subspaces(d: int) -> list[frozenset[tuple[int, ...]]]:
    vectors = list(product((0, 1), repeat=d))
    spaces = set()
    for k in range(len(vectors) + 1):
        for gens in combinations(vectors, k):
            span = {tuple([0] * d)}
            for g in gens:
                span |= {tuple((x + y) % 2 for x, y in zip(s, g)) for s in span}
            spaces.add(frozenset(span))
    return sorted(spaces, key=lambda s: (len(s), sorted(s)))


def _mod2(mat: Matrix) -> list[list[int]]:
    out = []
    for row in mat:
        cells = []
        for x in row:
            if x.denominator % 2 == 0:
                raise ValueError("matrix entry with even denominator has no F2 reduction")
            cells.append(x.numerator % 2)
        out.append(cells)
    return out


def _f2_subrepresentations(rep: Representation) -> Iterator[tuple[int, ...]]:
    options = [_f2_subspaces(d) for d in rep.dims]
    maps = [(arrow.source, arrow.target, _mod2(mat)) for arrow, mat in rep.maps.items()]
    for choice in product(*options):
        if all(
            tuple(sum(a * x for a, x in zip(row, u)) % 2 for row in mat) in choice[dst]
            for src, dst, mat in maps
            for u in choice[src]
        ):
            yield tuple(len(space).bit_length() - 1 for space in choice)


def _rational_subspaces(d: int, rng: random.Random, samples: int) -> list[list[tuple[Fraction, ...]]]:
    """Bases of {0}, the whole space and a family of lines (coordinate, diagonal, random)."""
    if d == 0:
        return [[]]
    unit = [tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)]
    if d == 1:
        return [[], unit]
    lines = [(1, 0), (0, 1), (1, 1), (1, -1)]
    lines += [(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(samples)]
    return [[]] + [[tuple(Fraction(x) for x in line)] for line in lines] + [unit]


def _apply(mat: Matrix, u: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((a * x for a, x in zip(row, u)), Fraction(0)) for row in mat)


def _rational_subrepresentations(rep: Representation, seed: int, samples: int) -> Iterator[tuple[int, ...]]:
    rng = random.Random(seed)
    options = [_rational_subspaces(d, rng, samples) for d in rep.dims]
    for choice in product(*options):
        ok = True
        for arrow, mat in rep.maps.items():
            target_basis = choice[arrow.target]
            for u in choice[arrow.source]:
                image = _apply(mat, u)
                if any(image) and rank(target_basis + [image]) > len(target_basis):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(len(basis) for basis in choice)


def subobject_dimvectors(
    rep: Representation, field: str = F2, seed: int = 0, samples: int = 4
) -> set[tuple[int, ...]]:
    """Dimension vectors of the nonzero proper subrepresentations of ``rep``."""
    _check_dims(rep)
    if field == F2:
        found = _f2_subrepresentations(rep)
    elif field == RATIONALS_SAMPLED:
        found = _rational_subrepresentations(rep, seed, samples)
    else:
        raise ValueError(f"unknown field {field!r}")
    zero = tuple(0 for _ in rep.dims)
    return {d for d in found if d != zero and d != rep.dims}


def quotient_dimvectors(rep: Representation, field: str = F2) -> set[tuple[int, ...]]:
    """Dimension vectors of nonzero proper quotients, as ``dim M - dim N``."""
    return {
        tuple(m - s for m, s in zip(rep.dims, sub))
        for sub in subobject_dimvectors(rep, field)
    }
