"""Matrix representations of B(n): string modules, R(i) and the full catalogue."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from biserial_walls.quiver import Letter, Walk, alpha, beta, build_quiver, is_string
from biserial_walls.strings import INTERVAL, StringClass, profile, psi, star_classes

Matrix = tuple[tuple[Fraction, ...], ...]


def zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))


def matmul(a: Matrix, b: Matrix, shape: tuple[int, int, int]) -> Matrix:
    """Product of an ``r x k`` and a ``k x c`` matrix; shape = (r, k, c).

    Shapes are explicit because empty matrices do not carry them.
    """
    rows, inner, cols = shape
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols))
        for i in range(rows)
    )


@dataclass(frozen=True)
class Representation:
    """Vector spaces ``k^dims[j]`` and one matrix per arrow of Q(n).

    ``maps[arrow]`` has shape ``dims[target] x dims[source]``.
    """

    n: int
    dims: tuple[int, ...]
    maps: Mapping[Letter, Matrix] = field(hash=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.dims) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} dimensions, got {len(self.dims)}")
        arrows = build_quiver(self.n).arrows
        maps = {}
        for arrow in arrows:
            mat = self.maps.get(arrow)
            rows, cols = self.dims[arrow.target], self.dims[arrow.source]
            if mat is None:
                mat = zero_matrix(rows, cols)
            mat = tuple(tuple(Fraction(x) for x in row) for row in mat)
            if len(mat) != rows or any(len(row) != cols for row in mat):
                raise ValueError(f"map for {arrow} must be {rows}x{cols}")
            maps[arrow] = mat
        object.__setattr__(self, "maps", maps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.n, self.dims, self.maps) == (other.n, other.dims, other.maps)

    def compose(self, path: Sequence[Letter]) -> Matrix:
        """Matrix of a path ``g_1 ... g_m`` (``g_m`` applied first)."""
        result = self.maps[path[-1]]
        start = path[-1].source
        for arrow in reversed(path[:-1]):
            shape = (self.dims[arrow.target], self.dims[arrow.source], self.dims[start])
            result = matmul(self.maps[arrow], result, shape)
        return result


def string_module(w: Walk, n: int | None = None) -> Representation:
    """The string representation M(w).

    Position j of the walk is a basis vector at vertex f_w(j); copies at one
    vertex are ordered by position.  The letter joining positions j-1 and j
    puts a 1 from the copy at the source of its honest arrow to the copy at
    the target.  ``n`` defaults to the largest vertex on the walk.
    """
    if n is None:
        n = max(profile(w))
    if not is_string(w, build_quiver(n)):
        raise ValueError(f"{w} is not a string on (Q({n}), I({n}))")
    values = profile(w)
    dims = [0] * (n + 1)
    slot = []
    for vertex in values:
        slot.append(dims[vertex])
        dims[vertex] += 1
    entries: dict[Letter, list[list[int]]] = {}
    length = len(w)
    for j in range(1, length + 1):
        letter = w.letters[length - j]
        arrow = letter.honest
        src, dst = (j, j - 1) if letter.inverted else (j - 1, j)
        mat = entries.setdefault(
            arrow, [[0] * dims[arrow.source] for _ in range(dims[arrow.target])]
        )
        mat[slot[dst]][slot[src]] = 1
    return Representation(n, tuple(dims), {a: tuple(map(tuple, mat)) for a, mat in entries.items()})


def biserial_module(i: int, n: int) -> Representation:
    """The projective-injective module R(i) attached to the i-th binomial relation."""
    if n < 2:
        raise ValueError("R(i) needs n >= 2")
    if not 0 <= i <= n - 2:
        raise ValueError(f"R(i) needs 0 <= i <= {n - 2}, got {i}")
    dims = [0] * (n + 1)
    dims[i], dims[i + 1], dims[i + 2] = 1, 2, 1
    row = ((1, 0),)
    column = ((0,), (1,))
    maps = {alpha(i): row, beta(i + 1): row, beta(i): column, alpha(i + 1): column}
    return Representation(n, tuple(dims), maps)


def relations(n: int) -> list[tuple[tuple[Letter, ...], tuple[Letter, ...] | None]]:
    """Generators of I(n) as (path, path) binomials or (path, None) monomials."""
    q = build_quiver(n)
    return [(lhs, rhs) for lhs, rhs in q.commuting_pairs] + [(p, None) for p in q.monomial_relations]


def check_relations(rep: Representation) -> bool:
    """Whether every generator of I(n) vanishes on ``rep``.

    Malformed matrices raise at construction, so they never reach here.
    """
    for left, right in relations(rep.n):
        lhs = rep.compose(left)
        if right is None:
            if any(x != 0 for row in lhs for x in row):
                return False
        elif lhs != rep.compose(right):
            return False
    return True


def dim_vector(rep: Representation) -> tuple[int, ...]:
    return rep.dims


def is_thin(rep: Representation) -> bool:
    return all(d <= 1 for d in rep.dims)


@dataclass(frozen=True)
class Indecomposable:
    """A catalogue entry: a string class or ``R(i)`` with its representation."""

    id: str
    rep: Representation = field(compare=False)
    string_class: StringClass | None = None
    r_index: int | None = None

    @property
    def is_string_module(self) -> bool:
        return self.string_class is not None


def module_id(c: StringClass) -> str:
    return c.label


def enumerate_indecomposables(n: int) -> list[Indecomposable]:
    """One module per isomorphism class: M(c) for each *-class c, then R(0..n-2)."""
    out = [
        Indecomposable(module_id(c), string_module(psi(c, n), n), string_class=c)
        for c in star_classes(n)
    ]
    out += [Indecomposable(f"R({i})", biserial_module(i, n), r_index=i) for i in range(n - 1)]
    return out


def find_module(n: int, ident: str) -> Indecomposable:
    """Look up a catalogue entry by id (``S0``, ``M(0,2,-1)``, ``R(0)``, ...)."""
    key = ident.replace(" ", "")
    for m in enumerate_indecomposables(n):
        if m.id.replace(" ", "") == key:
            return m
    raise KeyError(f"no indecomposable {ident!r} for n={n}")


def interval_class_modules(n: int) -> list[Indecomposable]:
    return [m for m in enumerate_indecomposables(n) if m.string_class and m.string_class.kind == INTERVAL]
