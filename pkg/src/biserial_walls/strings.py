"""Profiles of walks and the parameterisation of *-classes of strings.

Alternating strings up to ``*`` correspond to triples ``(a, b, eta)`` with
``0 <= a < b <= n`` and ``eta = +-1``.  The canonical representative of a
class is the one whose profile increases from ``a`` to ``b``; ``eta`` records
whether its last letter (the one traversed first) is an honest arrow.
"""

from __future__ import annotations

from dataclasses import dataclass

from biserial_walls.quiver import Walk, alpha, beta, build_quiver, enumerate_strings, is_string, star

TRIVIAL = "trivial"
CYCLE = "cycle"
INTERVAL = "interval"


@dataclass(frozen=True, order=True)
class StringClass:
    """A *-class of strings on (Q(n), I(n)).

    ``trivial``: a == b == the vertex.  ``cycle``: the class of
    ``beta_{n-1} alpha_{n-1}``, stored with ``a = n-1, b = n``.
    ``interval``: the triple ``(a, b, eta)``.
    """

    kind: str
    a: int
    b: int
    eta: int = 0

    def __post_init__(self) -> None:
        if self.kind == TRIVIAL:
            if self.a != self.b or self.a < 0 or self.eta != 0:
                raise ValueError(f"bad trivial class {self}")
        elif self.kind == CYCLE:
            if self.a != self.b - 1 or self.a < 0 or self.eta != 0:
                raise ValueError(f"bad cycle class {self}")
        elif self.kind == INTERVAL:
            if not 0 <= self.a < self.b:
                raise ValueError(f"interval class needs 0 <= a < b, got ({self.a}, {self.b})")
            if self.eta not in (1, -1):
                raise ValueError(f"eta must be +1 or -1, got {self.eta}")
        else:
            raise ValueError(f"unknown class kind {self.kind!r}")

    @classmethod
    def trivial(cls, i: int) -> StringClass:
        return cls(TRIVIAL, i, i)

    @classmethod
    def cycle(cls, n: int) -> StringClass:
        return cls(CYCLE, n - 1, n)

    @classmethod
    def interval(cls, a: int, b: int, eta: int) -> StringClass:
        return cls(INTERVAL, a, b, eta)

    @property
    def label(self) -> str:
        if self.kind == TRIVIAL:
            return f"S{self.a}"
        if self.kind == CYCLE:
            return f"M(b{self.a}a{self.a})"
        return f"M({self.a},{self.b},{self.eta})"


def profile(w: Walk) -> list[int]:
    """The vertex sequence ``f_w(0), ..., f_w(m)``, reading w from its source."""
    if w.is_trivial:
        return [w.vertex]
    return [w.letters[-1].source] + [letter.target for letter in reversed(w.letters)]


def _is_increasing(values: list[int]) -> bool:
    return all(x < y for x, y in zip(values, values[1:]))


def _is_decreasing(values: list[int]) -> bool:
    return all(x > y for x, y in zip(values, values[1:]))


def phi(w: Walk, n: int | None = None) -> StringClass:
    """The *-class of the string ``w``.

    ``n`` defaults to the largest vertex touched by ``w``; it only matters for
    recognising the cycle class and for validating ``w``.
    """
    if w.is_trivial:
        return StringClass.trivial(w.vertex)
    if n is None:
        n = max(profile(w))
    if not is_string(w, build_quiver(n)):
        raise ValueError(f"{w} is not a string on (Q({n}), I({n}))")
    if not w.is_alternating():
        return StringClass.cycle(n)
    values = profile(w)
    if _is_decreasing(values):
        w = star(w)
        values = profile(w)
    if not _is_increasing(values):
        raise ValueError(f"alternating string {w} has a non-monotone profile")
    eta = -1 if w.letters[-1].inverted else 1
    return StringClass.interval(values[0], values[-1], eta)


# First letter (the one ending at b) of psi((a, b, eta)), keyed by
# (eta, a and b have the same parity): True = honest beta_{b-1}, False = alpha_{b-1}^*.
_PSI_FIRST_HONEST = {
    (1, True): False,
    (1, False): True,
    (-1, True): True,
    (-1, False): False,
}


def psi(c: StringClass, n: int | None = None) -> Walk:
    """The canonical string of a class (increasing profile for intervals)."""
    if c.kind == TRIVIAL:
        return Walk.trivial(c.a)
    if c.kind == CYCLE:
        return Walk((beta(c.a), alpha(c.a)))
    if n is not None and c.b > n:
        raise ValueError(f"class {c.label} does not live on Q({n})")
    honest = _PSI_FIRST_HONEST[(c.eta, c.a % 2 == c.b % 2)]
    letters = []
    for k in range(c.b - 1, c.a - 1, -1):
        letters.append(beta(k) if honest else alpha(k, inverted=True))
        honest = not honest
    return Walk(tuple(letters))


def star_classes(n: int) -> list[StringClass]:
    """Trivial classes, then interval classes, then the cycle class."""
    if n < 1:
        raise ValueError("n must be >= 1")
    classes = [StringClass.trivial(i) for i in range(n + 1)]
    classes += [
        StringClass.interval(a, b, eta)
        for a in range(n + 1)
        for b in range(a + 1, n + 1)
        for eta in (-1, 1)
    ]
    classes.append(StringClass.cycle(n))
    return classes


def group_by_star(n: int) -> dict[StringClass, list[Walk]]:
    """Enumerated strings grouped under phi; the brute-force view of the classes."""
    groups: dict[StringClass, list[Walk]] = {}
    for w in enumerate_strings(n):
        groups.setdefault(phi(w, n), []).append(w)
    return groups
