"""Chambers of the wall-and-chamber structure of B(n).

Every wall spans an interval-sum hyperplane ``v_a + ... + v_b = 0`` and is cut
out by further interval sums, so the regions of the interval arrangement
refine the fan.  Chambers are the classes of regions glued across facets that
avoid every wall.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from biserial_walls.cones import (
    ConeH,
    ConeV,
    DoubleDescription,
    as_v,
    cone_from_v,
    contains_point,
    double_description,
    minimal_h,
)
from biserial_walls.linalg import IntVector, dot, primitive, rank
from biserial_walls.representations import enumerate_indecomposables, is_thin
from biserial_walls.stability import ORACLE, module_cone, walls as stability_walls

log = logging.getLogger(__name__)

MAX_DESK_N = 4


@dataclass(frozen=True)
class Region:
    """An open region of a central arrangement: a sign per hyperplane and a witness."""

    sign_vector: tuple[int, ...]
    witness: tuple[Fraction, ...]

    @property
    def signs(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.sign_vector)


@dataclass(frozen=True)
class Chamber:
    id: int
    region_ids: tuple[int, ...]


@dataclass
class FanChambers:
    n: int
    hyperplanes: list[IntVector]
    regions: list[Region]
    walls: list[tuple[str, ConeH]]
    chambers: list[Chamber]
    merges: int
    facets: list[tuple[int, int, int, tuple[Fraction, ...]]] = field(repr=False, default_factory=list)

    @property
    def count(self) -> int:
        return len(self.chambers)

    def chamber_of(self) -> dict[int, int]:
        return {r: c.id for c in self.chambers for r in c.region_ids}


def interval_hyperplanes(n: int) -> list[IntVector]:
    """Normals of ``v_a + ... + v_b = 0`` for 0 <= a <= b <= n, ordered by (a, b)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [
        tuple(int(a <= j <= b) for j in range(n + 1))
        for a in range(n + 1)
        for b in range(a, n + 1)
    ]


def _witness(dd: DoubleDescription) -> tuple[Fraction, ...]:
    total = [0] * dd.dim
    for ray in dd.rays:
        total = [x + y for x, y in zip(total, ray)]
    return tuple(Fraction(x) for x in total)


def _side(dd: DoubleDescription, h: Sequence[int]) -> int:
    """+1 / -1 if the open region lies on one side of h, 0 if h cuts it."""
    if any(dot(h, vec) for vec in dd.lineality):
        return 0
    values = [dot(h, ray) for ray in dd.rays]
    if any(v > 0 for v in values) and any(v < 0 for v in values):
        return 0
    return 1 if any(v > 0 for v in values) else -1


def arrangement_regions(
    hyperplanes: Sequence[Sequence[int]], order: Sequence[int] | None = None
) -> list[Region]:
    """All full-dimensional regions of a central arrangement, by incremental insertion.

    Each region keeps the double description of its closure; a new
    hyperplane splits it exactly when it takes both signs on the generators.
    Sign vectors are reported in the order of ``hyperplanes`` whatever the
    insertion ``order``, and regions are sorted by sign vector.
    """
    hyperplanes = [tuple(int(x) for x in h) for h in hyperplanes]
    if any(not any(h) for h in hyperplanes):
        raise ValueError("hyperplane normals must be nonzero")
    if not hyperplanes:
        return []
    dim = len(hyperplanes[0])
    order = list(range(len(hyperplanes))) if order is None else list(order)
    if sorted(order) != list(range(len(hyperplanes))):
        raise ValueError("order must be a permutation of the hyperplane indices")
    regions: list[tuple[dict[int, int], DoubleDescription]] = [({}, DoubleDescription(dim))]
    for k in order:
        h = list(hyperplanes[k])
        split = []
        for signs, dd in regions:
            side = _side(dd, h)
            if side:
                split.append(({**signs, k: side}, dd))
                continue
            for s in (1, -1):
                child = dd.copy()
                child.add([-s * x for x in h])
                split.append(({**signs, k: s}, child))
        regions = split
    out = []
    for signs, dd in regions:
        sign_vector = tuple(signs[k] for k in range(len(hyperplanes)))
        witness = _witness(dd)
        for h, s in zip(hyperplanes, sign_vector):
            if s * dot(h, witness) <= 0:
                raise AssertionError(f"witness {witness} violates region {sign_vector}")
        out.append(Region(sign_vector, witness))
    out.sort(key=lambda r: r.sign_vector)
    return out


def count_regions_by_rank(hyperplanes: Sequence[Sequence[int]]) -> int:
    """Zaslavsky's count for a central arrangement, sum over subsets of (-1)^(|S| - rank S)."""
    hs = [tuple(h) for h in hyperplanes]
    total = 0
    for k in range(len(hs) + 1):
        for subset in combinations(hs, k):
            total += (-1) ** (k - rank(subset))
    return total


def facet_point(p: Sequence[Fraction], q: Sequence[Fraction], h: Sequence[int]) -> tuple[Fraction, ...]:
    """Where the segment p -> q crosses h.

    For regions separated only by h the other hyperplanes keep a strict sign
    along the whole segment, so this point is interior to the shared facet.
    """
    hp, hq = dot(h, p), dot(h, q)
    t = hp / (hp - hq)
    return tuple(x + t * (y - x) for x, y in zip(p, q))


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[max(rx, ry)] = min(rx, ry)
        return True


def _nonthin_cones(n: int) -> list[tuple[str, ConeH]]:
    return [(m.id, module_cone(m, n, ORACLE)) for m in enumerate_indecomposables(n) if not is_thin(m.rep)]


def chamber_structure(
    n: int,
    walls: Sequence[tuple[str, ConeH]] | None = None,
    order: Sequence[int] | None = None,
    strict: bool = False,
    allow_large: bool = False,
) -> FanChambers:
    """Regions of the interval arrangement glued into chambers.

    ``walls`` overrides the wall set (default: thin walls from the oracle).
    ``strict`` also blocks gluing across non-thin stability spaces.
    """
    if n > MAX_DESK_N and not allow_large:
        raise ValueError(f"chamber enumeration is limited to n <= {MAX_DESK_N}; pass allow_large to override")
    if n > MAX_DESK_N:
        log.warning("enumerating chambers for n=%d; this grows quickly", n)
    hyperplanes = interval_hyperplanes(n)
    wall_list = list(stability_walls(n)) if walls is None else list(walls)
    blockers = list(wall_list)
    if strict:
        blockers += _nonthin_cones(n)
    regions = arrangement_regions(hyperplanes, order)
    index = {r.sign_vector: i for i, r in enumerate(regions)}
    uf = _UnionFind(len(regions))
    merges = 0
    facets = []
    for i, region in enumerate(regions):
        for k, h in enumerate(hyperplanes):
            if region.sign_vector[k] < 0:
                continue
            flipped = region.sign_vector[:k] + (-1,) + region.sign_vector[k + 1 :]
            j = index.get(flipped)
            if j is None:
                continue
            point = facet_point(region.witness, regions[j].witness, h)
            facets.append((i, j, k, point))
            if not any(contains_point(cone, point) for _, cone in blockers):
                merges += 1
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(len(regions)):
        groups.setdefault(uf.find(i), []).append(i)
    chambers = [Chamber(cid, tuple(members)) for cid, members in enumerate(sorted(groups.values()))]
    return FanChambers(n, hyperplanes, regions, wall_list, chambers, merges, facets)


def chambers(n: int, **kwargs) -> tuple[list[Chamber], int]:
    result = chamber_structure(n, **kwargs)
    return result.chambers, result.count


def region_cone(result: FanChambers, region_id: int) -> ConeH:
    """Closure of a region as an H-cone."""
    signs = result.regions[region_id].sign_vector
    return ConeH(result.n + 1, (), tuple(tuple(-s * x for x in h) for s, h in zip(signs, result.hyperplanes)))


def chamber_cone(result: FanChambers, chamber: Chamber) -> ConeV:
    """Conical hull of a chamber's closure (its extreme rays, for plotting)."""
    rays = set()
    for r in chamber.region_ids:
        rays.update(double_description(region_cone(result, r)).rays)
    hull = cone_from_v(ConeV(result.n + 1, (), tuple(sorted(rays))))
    return double_description(hull)


def chamber_is_convex(result: FanChambers, chamber: Chamber) -> bool:
    """Exact test that the chamber's closure equals its conical hull.

    The hull must be cut out by arrangement hyperplanes (so it is a union of
    region closures) and must contain no region outside the chamber.
    """
    hull = minimal_h(cone_from_v(chamber_cone(result, chamber)))
    normals = {primitive(h) for h in result.hyperplanes}
    normals |= {primitive([-x for x in h]) for h in result.hyperplanes}
    if hull.equalities or any(primitive(b) not in normals for b in hull.inequalities):
        return False
    members = set(chamber.region_ids)
    return not any(
        contains_point(hull, region.witness)
        for i, region in enumerate(result.regions)
        if i not in members
    )


def wall_witness(cone: ConeH, hyperplanes: Sequence[Sequence[int]], attempts: int = 50) -> tuple[Fraction, ...] | None:
    """A relative-interior point of ``cone`` lying on as few hyperplanes as possible.

    Tries positive combinations of the generators with deterministic weights
    and returns the first point on exactly one hyperplane, or None.
    """
    v = as_v(cone)
    gens = list(v.rays) + list(v.lineality)
    rng = random.Random(0)
    for attempt in range(attempts):
        if attempt == 0:
            weights = [1] * len(gens)
        else:
            weights = [rng.randint(1, 97) for _ in v.rays] + [rng.randint(-97, 97) for _ in v.lineality]
        point = [Fraction(0)] * cone.ambient_dim
        for w, g in zip(weights, gens):
            point = [x + w * y for x, y in zip(point, g)]
        if sum(1 for h in hyperplanes if dot(h, point) == 0) == 1:
            return tuple(point)
    return None


def sampled_chamber_count(n: int, samples: int = 300, seed: int = 0, bound: int = 60) -> int:
    """Independent estimate: random points joined when the segment between
    them meets no wall.

    Exact integer tests throughout.  The result counts chambers that contain
    a sample, assuming chambers are convex; it never exceeds the true count
    under that assumption.
    """
    rng = random.Random(seed)
    hyperplanes = interval_hyperplanes(n)
    wall_rows = []
    for _, cone in stability_walls(n):
        cone = minimal_h(cone)
        eqs = [primitive(e) for e in cone.equalities]
        wall_rows.append((eqs[0], [primitive(b) for b in cone.inequalities], eqs[1:]))
    points: list[tuple[int, ...]] = []
    while len(points) < samples:
        p = tuple(rng.randint(-bound, bound) for _ in range(n + 1))
        if all(dot(h, p) != 0 for h in hyperplanes):
            points.append(p)
    uf = _UnionFind(len(points))
    for i, j in combinations(range(len(points)), 2):
        if uf.find(i) == uf.find(j):
            continue
        if not _segment_hits_wall(points[i], points[j], wall_rows):
            uf.union(i, j)
    return len({uf.find(i) for i in range(len(points))})


def _segment_hits_wall(p, q, wall_rows) -> bool:
    for eq, ineqs, extra in wall_rows:
        ep, eq_ = dot(eq, p), dot(eq, q)
        if (ep > 0) == (eq_ > 0):
            continue
        # D * crossing point, with D = ep - eq_ made positive
        y = [-eq_ * x + ep * z for x, z in zip(p, q)]
        if ep - eq_ < 0:
            y = [-x for x in y]
        if all(dot(e, y) == 0 for e in extra) and all(dot(b, y) <= 0 for b in ineqs):
            return True
    return False
