from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from biserial_walls.cones import (
    ConeH,
    canonical_form,
    cone_dim,
    cone_equal,
    cone_from_v,
    cone_subset,
    contains_point,
    double_description,
    interior_point,
    minimal_h,
)
from biserial_walls.linalg import dot, nullspace, primitive, rank, rref, sign_normalized
from biserial_walls.stability import all_stability_cones
from oracles import brute_force_rays


def _normalize(v):
    scale = max(abs(Fraction(x)) for x in v)
    return tuple(Fraction(x) / scale for x in v)


class TestDoubleDescription:
    def test_ray_example(self):
        v = double_description(ConeH(2, [(1, 1)], [(1, 0)]))
        assert v.rays == ((-1, 1),) and v.lineality == ()

    def test_origin(self):
        v = double_description(ConeH(2, [(1, 0), (0, 1)]))
        assert v.rays == () and v.lineality == ()

    def test_simplex_slice(self):
        v = double_description(ConeH(3, [(1, 1, 1)], [(1, 0, 0), (0, 0, 1)]))
        assert v.rays == ((-1, 1, 0), (0, 1, -1)) and v.lineality == ()
        assert brute_force_rays(3, [(1, 1, 1)], [(1, 0, 0), (0, 0, 1)]) == {_normalize(r) for r in v.rays}

    def test_unconstrained(self):
        v = double_description(ConeH(3))
        assert v.rays == () and len(v.lineality) == 3
        assert cone_dim(ConeH(3)) == 3

    def test_halfspace(self):
        v = double_description(ConeH(2, (), [(1, 1)]))
        assert len(v.lineality) == 1 and len(v.rays) == 1
        assert dot(v.lineality[0], (1, 1)) == 0
        assert dot(v.rays[0], (1, 1)) < 0

    def test_redundant_input(self):
        plain = ConeH(3, [(1, 1, 1)], [(1, 0, 0), (0, 0, 1)])
        noisy = plain.with_constraints(inequalities=[(1, 0, 1), (2, 0, 0), (1, 0, 0)])
        assert double_description(noisy) == double_description(plain)

    def test_bad_lengths(self):
        with pytest.raises(ValueError):
            ConeH(2, [(1, 0, 0)])


class TestMembership:
    def test_examples(self):
        c = ConeH(3, [(1, 1, 1)], [(1, 0, 0), (0, 0, 1)])
        assert contains_point(c, (-1, 1, 0))
        assert contains_point(c, (0, 0, 0))
        assert not contains_point(c, (1, -1, 0))
        ray = ConeH(2, [(1, 1)], [(1, 0)])
        assert cone_subset(ray, ConeH(2, [(1, 1)]))
        assert not cone_subset(ConeH(2, [(1, 1)]), ray)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            contains_point(ConeH(2), (0, 0, 0))
        with pytest.raises(ValueError):
            cone_subset(ConeH(2), ConeH(3))

    def test_dims(self):
        assert cone_dim(ConeH(2, [(1, 0)])) == 1
        assert cone_dim(ConeH(2, [(1, 0), (0, 1)])) == 0


class TestCanonicalForms:
    def test_minimal_h_promotes_implicit_equalities(self):
        c = ConeH(2, (), [(1, 0), (-1, 0), (0, 1)])
        m = minimal_h(c)
        assert len(m.equalities) == 1 and len(m.inequalities) == 1
        assert cone_equal(m, c)

    def test_canonical_form_ignores_presentation(self):
        a = ConeH(3, [(1, 1, 1)], [(1, 0, 0), (0, 0, 1)])
        b = ConeH(3, [(2, 2, 2)], [(0, -1, -1), (-1, -1, 0), (0, 0, 3)])
        assert cone_equal(a, b)
        assert canonical_form(a) == canonical_form(b)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_roundtrip_on_stability_cones(n):
    for ident, cone in all_stability_cones(n):
        v = double_description(cone)
        back = cone_from_v(v)
        assert cone_equal(back, cone), ident
        assert double_description(back) == v, ident
        for r in v.rays:
            assert contains_point(cone, r)
        for line in v.lineality:
            assert contains_point(cone, line) and contains_point(cone, [-x for x in line])


rows = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@given(st.lists(rows, max_size=1), st.lists(rows, min_size=1, max_size=6))
def test_random_cones_against_brute_force(eqs, ineqs):
    c = ConeH(3, eqs, ineqs)
    v = double_description(c)
    expected = brute_force_rays(3, eqs, ineqs)
    if expected is not None:
        assert v.lineality == ()
        assert {_normalize(r) for r in v.rays} == expected
    # structural properties hold either way
    gens = v.generators()
    assert all(contains_point(c, g) for g in gens)
    assert len({primitive(r) for r in v.rays}) == len(v.rays)
    assert cone_dim(c) == rank(list(gens)) if gens else cone_dim(c) == 0
    assert cone_equal(cone_from_v(v), c)
    if v.rays or v.lineality:
        p = interior_point(v)
        assert contains_point(c, p)


@given(st.lists(rows, max_size=2), st.lists(rows, max_size=5), rows)
def test_adding_constraints_never_grows(eqs, ineqs, extra):
    c = ConeH(3, eqs, ineqs)
    tighter = c.with_constraints(inequalities=[extra])
    assert cone_dim(tighter) <= cone_dim(c)
    assert cone_subset(tighter, c)


@given(st.lists(rows, min_size=1, max_size=3))
def test_lineality_only_cone_is_nullspace(eqs):
    v = double_description(ConeH(3, eqs))
    assert v.rays == ()
    assert len(v.lineality) == 3 - rank(eqs)
    assert rank(list(v.lineality) + [list(x) for x in nullspace(eqs, 3)]) == len(v.lineality)
    # lineality is reported in reduced echelon form
    assert v.lineality == tuple(sign_normalized(r) for r in rref(v.lineality)[0])
