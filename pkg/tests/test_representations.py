from fractions import Fraction

import pytest

from biserial_walls.quiver import alpha, beta, parse_walk, star
from biserial_walls.representations import (
    Representation,
    biserial_module,
    check_relations,
    dim_vector,
    enumerate_indecomposables,
    find_module,
    is_thin,
    string_module,
)
from biserial_walls.strings import StringClass, psi
from oracles import f2_homs, is_idempotent, is_iso_map


def w(text):
    return parse_walk(text)


class TestStringModules:
    def test_simple(self):
        rep = string_module(w("e1"), 2)
        assert rep.dims == (0, 1, 0)
        assert check_relations(rep)

    def test_arrow_module(self):
        rep = string_module(w("b0"), 1)
        assert rep.dims == (1, 1)
        assert rep.maps[beta(0)] == ((1,),)
        assert rep.maps[alpha(0)] == ((0,),)

    def test_cycle_module_n1(self):
        rep = string_module(w("b0 a0"), 1)
        assert rep.dims == (1, 2)
        # basis at vertex 1 in order of first appearance along the walk
        assert rep.maps[alpha(0)] == ((1, 0),)
        assert rep.maps[beta(0)] == ((0,), (1,))
        assert check_relations(rep)
        assert not is_thin(rep)

    def test_cycle_module_matches_printed_matrices_up_to_basis_swap(self):
        rep = string_module(w("b0 a0"), 1)
        printed = Representation(1, (1, 2), {alpha(0): ((0, 1),), beta(0): ((1,), (0,))})
        swap = [[[1]], [[0, 1], [1, 0]]]
        assert any(is_iso_map(f, rep.dims) for f in f2_homs(rep, printed))
        assert swap in list(f2_homs(rep, printed))

    def test_star_gives_same_module(self):
        for text in ["a1* b0", "b1 a0*", "b1 a1"]:
            a = string_module(w(text), 2)
            b = string_module(star(w(text)), 2)
            assert a.dims == b.dims
            assert any(is_iso_map(f, a.dims) for f in f2_homs(a, b))

    def test_rejects_non_strings(self):
        with pytest.raises(ValueError):
            string_module(w("b1 b0"), 2)


class TestRModules:
    def test_matrices(self):
        rep = biserial_module(0, 2)
        assert rep.dims == (1, 2, 1)
        one = Fraction(1)
        assert rep.maps[alpha(0)] == ((one, 0),)
        assert rep.maps[beta(1)] == ((one, 0),)
        assert rep.maps[beta(0)] == ((0,), (one,))
        assert rep.maps[alpha(1)] == ((0,), (one,))

    def test_commuting_relation_is_nonzero(self):
        rep = biserial_module(1, 3)
        path = rep.compose((beta(1), alpha(1)))
        assert path == rep.compose((alpha(2), beta(2)))
        assert any(x for row in path for x in row)

    @pytest.mark.parametrize("i,n", [(0, 1), (-1, 3), (2, 3)])
    def test_range(self, i, n):
        with pytest.raises(ValueError):
            biserial_module(i, n)


class TestRepresentation:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            Representation(1, (1, 1), {alpha(0): ((1, 0),)})
        with pytest.raises(ValueError):
            Representation(1, (1,), {})

    def test_relation_violation_detected(self):
        rep = Representation(1, (1, 1), {alpha(0): ((1,),), beta(0): ((1,),)})
        assert not check_relations(rep)

    def test_binomial_violation_detected(self):
        rep = Representation(2, (0, 1, 1), {beta(1): ((1,),), alpha(1): ((1,),)})
        assert not check_relations(rep)


class TestCatalogue:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_count(self, n):
        assert len(enumerate_indecomposables(n)) == n + (n + 1) ** 2

    @pytest.mark.parametrize("n", range(1, 7))
    def test_relations_hold(self, n):
        assert all(check_relations(m.rep) for m in enumerate_indecomposables(n))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_nonthin_modules(self, n):
        nonthin = [m.id for m in enumerate_indecomposables(n) if not is_thin(m.rep)]
        assert nonthin == [f"M(b{n - 1}a{n - 1})"] + [f"R({i})" for i in range(n - 1)]

    def test_dim_vectors_n2(self):
        dims = {m.id: dim_vector(m.rep) for m in enumerate_indecomposables(2)}
        assert dims["M(0,2,-1)"] == (1, 1, 1)
        assert dims["M(b1a1)"] == (0, 1, 2)
        assert dims["R(0)"] == (1, 2, 1)

    def test_find_module(self):
        assert find_module(2, "M(0, 2, -1)").string_class == StringClass.interval(0, 2, -1)
        with pytest.raises(KeyError):
            find_module(2, "R(5)")

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_indecomposable_over_f2(self, n):
        for m in enumerate_indecomposables(n):
            idempotents = [f for f in f2_homs(m.rep, m.rep) if is_idempotent(f, m.rep.dims)]
            assert len(idempotents) == 2, m.id  # zero and identity only

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_pairwise_non_isomorphic_over_f2(self, n):
        modules = enumerate_indecomposables(n)
        for i, a in enumerate(modules):
            for b in modules[i + 1 :]:
                if a.rep.dims != b.rep.dims:
                    continue
                assert not any(is_iso_map(f, a.rep.dims) for f in f2_homs(a.rep, b.rep)), (a.id, b.id)

    def test_string_module_ids_follow_classes(self):
        for m in enumerate_indecomposables(3):
            if m.string_class is not None:
                assert m.rep == string_module(psi(m.string_class, 3), 3)
