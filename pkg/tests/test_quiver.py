import pytest
from hypothesis import given, strategies as st

from biserial_walls.quiver import (
    Letter,
    Walk,
    alpha,
    beta,
    build_quiver,
    enumerate_strings,
    find_bands,
    is_band,
    is_string,
    parse_walk,
    star,
)
from oracles import literal_forbidden, naive_is_string, naive_walks


def w(text):
    return parse_walk(text)


class TestBuildQuiver:
    def test_n2_forbidden_paths(self):
        q = build_quiver(2)
        for path in ["a0 a1", "b1 b0", "a0 b0", "b0 a0", "a1 b1"]:
            assert w(path).letters in q.forbidden_paths
        assert w("b1 a1").letters not in q.forbidden_paths

    def test_n1_only_monomial(self):
        assert build_quiver(1).forbidden_paths == {(alpha(0), beta(0))}

    def test_n3_top_cycle_allowed(self):
        q = build_quiver(3)
        assert (beta(2), alpha(2)) not in q.forbidden_paths
        assert (beta(1), alpha(1)) in q.forbidden_paths

    @pytest.mark.parametrize("n", range(1, 7))
    def test_forbidden_matches_relation_list(self, n):
        assert build_quiver(n).forbidden_paths == literal_forbidden(n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_vertex_valency(self, n):
        q = build_quiver(n)
        assert len(q.arrows) == 2 * n
        for v in q.vertices:
            assert sum(a.source == v for a in q.arrows) <= 2
            assert sum(a.target == v for a in q.arrows) <= 2

    @pytest.mark.parametrize("bad", [0, -1])
    def test_rejects_small_n(self, bad):
        with pytest.raises(ValueError):
            build_quiver(bad)


class TestWalks:
    def test_composition_is_checked(self):
        with pytest.raises(ValueError):
            Walk((alpha(0), alpha(0)))

    def test_source_target(self):
        walk = w("a1* b0")
        assert walk.source == 0 and walk.target == 2

    def test_letter_inverse_swaps_ends(self):
        for letter in (alpha(3), beta(2), alpha(1, True)):
            assert letter.inverse().source == letter.target
            assert letter.inverse().target == letter.source

    def test_star_examples(self):
        assert star(w("a1* b0")) == w("b0* a1")
        assert star(Walk.trivial(2)) == Walk.trivial(2)
        assert star(star(w("b0 a0"))) == w("b0 a0")

    def test_parse_roundtrip(self):
        for text in ["e3", "a1* b0", "b1 a0*", "b0 a0"]:
            assert str(parse_walk(text)) == text

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_walk("x1")


class TestIsString:
    def test_worked_examples(self):
        q = build_quiver(2)
        assert is_string(w("a1* b0"), q)
        assert not is_string(w("b0* a1 b1"), q)
        assert not is_string(w("b1 b0"), q)

    def test_not_reduced(self):
        assert not is_string(w("a0 a0*"), build_quiver(1))

    @pytest.mark.parametrize("n,length", [(1, 5), (2, 5), (3, 4)])
    def test_agrees_with_naive_predicate(self, n, length):
        q = build_quiver(n)
        for walk in naive_walks(n, length):
            assert is_string(walk, q) == naive_is_string(walk, n), str(walk)


class TestEnumerateStrings:
    def test_n1(self):
        got = {str(x) for x in enumerate_strings(1)}
        assert got == {"e0", "e1", "a0", "a0*", "b0", "b0*", "b0 a0", "a0* b0*"}

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_brute_force(self, n):
        # strings have length <= max(n, 2); search a little beyond that
        naive = {x for x in naive_walks(n, max(n, 2) + 2) if naive_is_string(x, n)}
        assert set(enumerate_strings(n)) == naive

    @pytest.mark.parametrize("n", range(1, 7))
    def test_shape(self, n):
        found = enumerate_strings(n)
        trivial = [x for x in found if x.is_trivial]
        cycles = [x for x in found if not x.is_trivial and not x.is_alternating()]
        alternating = [x for x in found if not x.is_trivial and x.is_alternating()]
        assert len(trivial) == n + 1
        assert set(cycles) == {Walk((beta(n - 1), alpha(n - 1))), star(Walk((beta(n - 1), alpha(n - 1))))}
        assert len(alternating) == 2 * n * (n + 1)
        assert all(len(x) <= n for x in alternating)
        assert len(found) == (n + 1) + 2 + 2 * n * (n + 1)

    def test_n2_total(self):
        # 3 trivial + 2 cycles + 12 alternating
        assert len(enumerate_strings(2)) == 17

    @pytest.mark.parametrize("n", range(1, 7))
    def test_closed_under_star(self, n):
        q = build_quiver(n)
        assert all(is_string(star(x), q) for x in enumerate_strings(n))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_no_long_paths_except_top_cycle(self, n):
        top = {Walk((beta(n - 1), alpha(n - 1))), star(Walk((beta(n - 1), alpha(n - 1))))}
        for x in enumerate_strings(n):
            if len(x) >= 2 and x not in top:
                assert x.is_alternating(), str(x)


class TestBands:
    def test_top_cycle_is_not_band(self):
        assert not is_band(w("b0 a0"), build_quiver(1))

    def test_trivial_and_unreduced(self):
        q = build_quiver(1)
        assert not is_band(Walk.trivial(0), q)
        assert not is_band(w("a0 a0*"), q)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_no_bands(self, n):
        assert find_bands(n) == []

    def test_higher_power_bound_agrees(self):
        assert find_bands(3, max_power=4) == []


@given(st.integers(1, 5), st.lists(st.tuples(st.booleans(), st.integers(0, 4), st.booleans()), min_size=1, max_size=6))
def test_star_is_involution_on_random_walks(n, raw):
    letters = []
    for is_alpha, index, inv in raw:
        letter = Letter("alpha" if is_alpha else "beta", index % n, inv)
        if letters and letter.target != letters[-1].source:
            continue
        letters.append(letter)
    walk = Walk(tuple(letters))
    assert star(star(walk)) == walk
    assert star(walk).source == walk.target
    q = build_quiver(n)
    assert is_string(walk, q) == is_string(star(walk), q) == naive_is_string(walk, n)
