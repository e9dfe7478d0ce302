"""The quivers with relations (Q(n), I(n)), walks on them, strings and bands.

Q(n) has vertices 0..n and arrows ``alpha_i: i+1 -> i``, ``beta_i: i -> i+1``
for 0 <= i < n.  I(n) is generated by

    beta_i alpha_i - alpha_{i+1} beta_{i+1},  alpha_i alpha_{i+1},
    beta_{i+1} beta_i   (0 <= i <= n-2),      alpha_0 beta_0.

Words are written in composition order: ``w = g_1 g_2 ... g_m`` means g_m is
traversed first, so ``t(g_{k+1}) == s(g_k)``, ``s(w) = s(g_m)`` and
``t(w) = t(g_1)``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

ALPHA = "alpha"
BETA = "beta"


@dataclass(frozen=True, order=True)
class Letter:
    """An arrow of Q(n) or its formal inverse."""

    kind: str
    index: int
    inverted: bool = False

    def __post_init__(self) -> None:
        if self.kind not in (ALPHA, BETA):
            raise ValueError(f"unknown arrow kind {self.kind!r}")
        if self.index < 0:
            raise ValueError("arrow index must be non-negative")

    @property
    def honest(self) -> Letter:
        """The underlying arrow of Q(n)."""
        return Letter(self.kind, self.index) if self.inverted else self

    @property
    def source(self) -> int:
        if self.inverted:
            return self.honest.target
        return self.index + 1 if self.kind == ALPHA else self.index

    @property
    def target(self) -> int:
        if self.inverted:
            return self.honest.source
        return self.index if self.kind == ALPHA else self.index + 1

    def inverse(self) -> Letter:
        return Letter(self.kind, self.index, not self.inverted)

    def __str__(self) -> str:
        return f"{self.kind[0]}{self.index}{'*' if self.inverted else ''}"


def alpha(i: int, inverted: bool = False) -> Letter:
    return Letter(ALPHA, i, inverted)


def beta(i: int, inverted: bool = False) -> Letter:
    return Letter(BETA, i, inverted)


@dataclass(frozen=True)
class Walk:
    """A walk ``g_1 ... g_m`` (letters stored left to right) or a trivial walk.

    A trivial walk has no letters and records its vertex; for non-trivial walks
    ``vertex`` is ignored and left as ``None``.
    """

    letters: tuple[Letter, ...] = ()
    vertex: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            if self.vertex is None or self.vertex < 0:
                raise ValueError("a trivial walk needs a vertex >= 0")
            return
        object.__setattr__(self, "vertex", None)
        for left, right in zip(self.letters, self.letters[1:]):
            if right.target != left.source:
                raise ValueError(f"letters {left} {right} do not compose")

    @classmethod
    def trivial(cls, vertex: int) -> Walk:
        return cls((), vertex)

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def source(self) -> int:
        return self.vertex if self.is_trivial else self.letters[-1].source

    @property
    def target(self) -> int:
        return self.vertex if self.is_trivial else self.letters[0].target

    @property
    def is_cycle(self) -> bool:
        return not self.is_trivial and self.source == self.target

    def is_reduced(self) -> bool:
        return all(
            left != right.inverse() for left, right in zip(self.letters, self.letters[1:])
        )

    def is_alternating(self) -> bool:
        return not self.is_trivial and all(
            left.inverted != right.inverted
            for left, right in zip(self.letters, self.letters[1:])
        )

    def power(self, h: int) -> Walk:
        if h < 1:
            raise ValueError("power must be >= 1")
        return Walk(self.letters * h, self.vertex)

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e{self.vertex}"
        return " ".join(str(letter) for letter in self.letters)


_TOKEN = re.compile(r"\s*(?:(e)(\d+)|([ab])(\d+)(\*?))")


def parse_walk(text: str) -> Walk:
    """Parse ``"a1* b0"``, ``"a1*b0"`` or ``"e2"`` into a walk."""
    letters: list[Letter] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ValueError(f"cannot parse walk {text!r} at position {pos}")
        pos = match.end()
        if match.group(1):
            if letters or text[pos:].strip():
                raise ValueError("a trivial walk must stand alone")
            return Walk.trivial(int(match.group(2)))
        kind = ALPHA if match.group(3) == "a" else BETA
        letters.append(Letter(kind, int(match.group(4)), bool(match.group(5))))
    if not letters:
        raise ValueError("empty walk")
    return Walk(tuple(letters))


def star(w: Walk) -> Walk:
    """Reverse the word and invert every letter; trivial walks are fixed."""
    if w.is_trivial:
        return w
    return Walk(tuple(letter.inverse() for letter in reversed(w.letters)))


@dataclass(frozen=True)
class QuiverPresentation:
    n: int
    arrows: tuple[Letter, ...]
    forbidden_paths: frozenset[tuple[Letter, ...]]
    commuting_pairs: tuple[tuple[tuple[Letter, ...], tuple[Letter, ...]], ...]
    monomial_relations: tuple[tuple[Letter, ...], ...]

    @property
    def vertices(self) -> range:
        return range(self.n + 1)

    def letters(self) -> tuple[Letter, ...]:
        return self.arrows + tuple(a.inverse() for a in self.arrows)


def build_quiver(n: int) -> QuiverPresentation:
    """Build (Q(n), I(n)); forbidden paths are read off the generators."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    arrows = tuple(alpha(i) for i in range(n)) + tuple(beta(i) for i in range(n))
    commuting = tuple(
        ((beta(i), alpha(i)), (alpha(i + 1), beta(i + 1))) for i in range(n - 1)
    )
    monomials = (
        tuple((alpha(i), alpha(i + 1)) for i in range(n - 1))
        + tuple((beta(i + 1), beta(i)) for i in range(n - 1))
        + ((alpha(0), beta(0)),)
    )
    forbidden = set(monomials)
    for left, right in commuting:
        forbidden.add(left)
        forbidden.add(right)
    for path in forbidden:
        Walk(path)  # every generator term must itself be a path
    return QuiverPresentation(n, arrows, frozenset(forbidden), commuting, monomials)


def _honest_subpaths(w: Walk) -> Iterator[tuple[Letter, ...]]:
    """Maximal runs of w that are paths, either as written or after ``*``."""
    run: list[Letter] = []
    for letter in w.letters:
        if run and run[-1].inverted != letter.inverted:
            yield _as_path(run)
            run = []
        run.append(letter)
    if run:
        yield _as_path(run)


def _as_path(run: list[Letter]) -> tuple[Letter, ...]:
    if run[0].inverted:
        return tuple(letter.inverse() for letter in reversed(run))
    return tuple(run)


def _contains(path: tuple[Letter, ...], sub: tuple[Letter, ...]) -> bool:
    k = len(sub)
    return any(path[i : i + k] == sub for i in range(len(path) - k + 1))


def is_string(w: Walk, q: QuiverPresentation) -> bool:
    """Reduced, on Q(n), and no contained path contains a generator monomial."""
    if w.is_trivial:
        return 0 <= w.vertex <= q.n
    if any(letter.index >= q.n for letter in w.letters):
        return False
    if not w.is_reduced():
        return False
    for path in _honest_subpaths(w):
        for bad in q.forbidden_paths:
            if _contains(path, bad):
                return False
    return True


def _extend(w: Walk, q: QuiverPresentation) -> Iterator[Walk]:
    for letter in q.letters():
        if letter.target == w.letters[-1].source:
            yield Walk(w.letters + (letter,))


def enumerate_strings(n: int) -> list[Walk]:
    """All strings on (Q(n), I(n)), found by breadth-first right extension.

    Every prefix of a string is a string, so extending strings letter by
    letter reaches all of them; the search ends because there are no bands.
    """
    q = build_quiver(n)
    found = [Walk.trivial(i) for i in q.vertices]
    frontier = deque(Walk((letter,)) for letter in q.letters())
    bound = 2 * n + 4
    while frontier:
        w = frontier.popleft()
        if not is_string(w, q):
            continue
        if len(w) > bound:
            raise RuntimeError(f"string {w} longer than {bound}; is the quiver band-free?")
        found.append(w)
        frontier.extend(_extend(w, q))
    return found


def _is_proper_power(w: Walk) -> bool:
    m = len(w)
    return any(
        m % d == 0 and w.letters == w.letters[:d] * (m // d) for d in range(1, m)
    )


def is_band(w: Walk, q: QuiverPresentation, max_power: int = 2) -> bool:
    """Band test with powers checked up to ``max_power``.

    On B(n) the only string cycles are ``beta_{n-1} alpha_{n-1}`` and its star,
    so ``max_power=2`` already decides the question.
    """
    if w.is_trivial or not w.is_cycle:
        return False
    if not w.is_reduced() or w.letters[-1] == w.letters[0].inverse():
        return False
    if _is_proper_power(w):
        return False
    return all(is_string(w.power(h), q) for h in range(1, max_power + 1))


def reduced_walks(q: QuiverPresentation, max_length: int) -> Iterator[Walk]:
    """Every reduced walk of length 1..max_length on Q(n)."""
    by_target: dict[int, list[Letter]] = {}
    for letter in q.letters():
        by_target.setdefault(letter.target, []).append(letter)
    layer = [(letter,) for letter in q.letters()]
    for _ in range(max_length):
        yield from (Walk(word) for word in layer)
        layer = [
            word + (nxt,)
            for word in layer
            for nxt in by_target[word[-1].source]
            if nxt != word[-1].inverse()
        ]


def find_bands(n: int, max_length: int | None = None, max_power: int = 2) -> list[Walk]:
    """Scan all reduced cycles up to ``max_length`` for bands.

    A band is in particular a string, and strings on Q(n) have length at most
    max(n, 2); the default bound n + 2 leaves a margin.
    """
    q = build_quiver(n)
    if max_length is None:
        max_length = n + 2
    return [w for w in reduced_walks(q, max_length) if w.is_cycle and is_band(w, q, max_power)]


def all_walks(q: QuiverPresentation, max_length: int) -> Iterable[Walk]:
    """Every walk (reduced or not) of length 0..max_length; brute-force helper."""
    yield from (Walk.trivial(i) for i in q.vertices)
    letters = q.letters()
    for m in range(1, max_length + 1):
        for word in product(letters, repeat=m):
            if all(nxt.target == cur.source for cur, nxt in zip(word, word[1:])):
                yield Walk(word)
