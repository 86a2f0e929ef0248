from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from willems.core import GREVLEX, LEX, POT, ModuleElement, Poly
from willems.errors import DimensionMismatch, UnitIdeal
from willems.groebner import (Ideal, Submodule, buchberger, eliminate, intersect, is_groebner_raw,
                              is_zero_dimensional, normal_form, quotient, saturate, syzygies)
from util import I, P, S


def test_nf_generator_is_zero():
    M = S("[D1^2, D1*D2]", n=2)
    assert normal_form(M.gens[0], M).is_zero()


def test_nf_single_division():
    assert normal_form(ModuleElement.from_poly(P("D1*D2 + 1")),
                       I("D1", n=2)) == ModuleElement.from_poly(Poly.one(2))


def test_nf_no_divisibility():
    M = S("[D1^2, D1*D2]", n=2)
    f = S("[D1, D2]", n=2).gens[0]
    assert normal_form(f, M) == f


def test_nf_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        normal_form(ModuleElement.from_poly(P("D1")), I("D1*D2"))


def test_monomial_gens_are_a_basis():
    B = buchberger(I("D1^2", "D1*D2"))
    assert sorted(map(str, B.polys())) == ["D1*D2", "D1^2"]


def test_lex_basis_of_circle_and_diagonal():
    B = buchberger(I("D1^2 + D2^2 - 1", "D1 - D2"), LEX)
    assert set(B.polys()) == {P("D1 - D2"), P("D2^2 - 1/2", 2)}


def test_unit_ideal_basis():
    assert buchberger(I("1", "D1", n=1)).polys() == [Poly.one(1)]


def test_syzygy_of_two_monomials():
    Z = syzygies([P("D1^2", 2), P("D1*D2")])
    assert Z.equals(Submodule([ModuleElement.from_polys([P("D2"), -P("D1", 2)])]))


def test_syzygy_of_unit_is_zero():
    assert syzygies([Poly.one(2)]).is_zero()


def test_syzygy_of_duplicate():
    Z = syzygies([P("D1"), P("D1")])
    assert Z.equals(Submodule([ModuleElement.from_polys([Poly.one(1), -Poly.one(1)])]))


def test_quotient_monomial():
    assert quotient(I("D1^2", "D1*D2"), P("D1", 2)).equals(I("D1", "D2"))


def test_quotient_of_member_is_unit():
    assert quotient(I("D1^2", "D1*D2"), P("D1^2*D2 + D1*D2^3")).is_unit()


def test_quotient_module_element():
    M = S("[D1^2, D1*D2]", n=2)
    m = S("[D1, D2]", n=2).gens[0]
    assert quotient(M, m).equals(I("D1", n=2))


def test_intersection_example():
    assert intersect(I("D1", n=2), I("D1^2", "D2")).equals(I("D1^2", "D1*D2"))


def test_eliminate_by_substitution():
    assert eliminate(I("D1^2 + D2^2 - 1", "D1 - D2"), [0]).equals(I("2*D2^2 - 1", n=2))


def test_saturate_two_steps():
    assert saturate(I("D1^2*D2"), I("D1", n=2)).equals(I("D2", n=2))


def test_zero_dimensional_count():
    info = is_zero_dimensional(I("D1^2 - 1", "D2 + 1"))
    assert info.zero_dimensional and info.dimension == 2


def test_line_and_curve_not_zero_dimensional():
    assert not is_zero_dimensional(I("D1", n=2)).zero_dimensional
    assert not is_zero_dimensional(I("D1^2 + D2^2 - 1")).zero_dimensional


def test_zero_dimensional_unit_ideal():
    with pytest.raises(UnitIdeal):
        is_zero_dimensional(I("1", n=2))


# --- properties -----------------------------------------------------------

coef = st.integers(-3, 3).map(Fraction)
mono = st.tuples(st.integers(0, 2), st.integers(0, 2))


def poly_st(n=2, size=4):
    return st.dictionaries(mono, coef, max_size=size).map(lambda t: Poly(n, t))


elem_st = st.tuples(poly_st(), poly_st()).map(lambda ps: ModuleElement.from_polys(list(ps), 2))
module_st = st.lists(elem_st, min_size=1, max_size=3).map(lambda gs: Submodule(gs, 2, 2))


@given(module_st, elem_st)
def test_normal_form_idempotent(M, f):
    r = normal_form(f, M)
    assert normal_form(r, M) == r
    assert M.contains(f - r)


@given(module_st)
def test_computed_bases_satisfy_buchberger(M):
    for order in (GREVLEX, POT):
        raw = [g.terms for g in M.groebner(order)]
        assert is_groebner_raw(raw, order)


@given(st.lists(poly_st(), min_size=1, max_size=3), poly_st())
def test_membership_independent_of_order(gens, f):
    J = Ideal(gens, 2)
    assert (normal_form(ModuleElement.from_poly(f), J, GREVLEX).is_zero()
            == normal_form(ModuleElement.from_poly(f), J, LEX).is_zero())


@given(st.lists(poly_st(size=3), min_size=1, max_size=3))
def test_syzygies_are_relations(G):
    G = [g for g in G if g] or [Poly.one(2)]
    Z = syzygies(G)
    for r in Z.gens:
        total = sum((c * g for c, g in zip(r.components(), G)), Poly.zero(2))
        assert total.is_zero()
    # the Koszul relations always lie in the syzygy module
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            comps = [Poly.zero(2)] * len(G)
            comps[i], comps[j] = G[j], -G[i]
            assert Z.contains(ModuleElement.from_polys(comps, 2))


monomials = st.lists(mono.filter(any), min_size=1, max_size=3)


def _mono_ideal(ms):
    return Ideal([Poly.monomial(m) for m in ms], 2)


def _in_monomial_ideal(m, gens):
    return any(all(a >= b for a, b in zip(m, g)) for g in gens)


@given(monomials, monomials)
def test_intersection_matches_monomial_lcm(a, b):
    A = intersect(_mono_ideal(a), _mono_ideal(b))
    for m in [(i, j) for i in range(5) for j in range(5)]:
        expected = _in_monomial_ideal(m, a) and _in_monomial_ideal(m, b)
        assert A.contains(ModuleElement.from_poly(Poly.monomial(m))) == expected


@given(monomials, mono)
def test_quotient_matches_monomial_formula(a, m):
    Q = quotient(_mono_ideal(a), Poly.monomial(m))
    for t in [(i, j) for i in range(5) for j in range(5)]:
        prod = tuple(x + y for x, y in zip(t, m))
        assert Q.contains(ModuleElement.from_poly(Poly.monomial(t))) == _in_monomial_ideal(prod, a)


@given(monomials)
def test_saturation_by_variable_drops_it(a):
    sat = saturate(_mono_ideal(a), I("D1", n=2))
    expected = [(0, e[1]) for e in a]
    for t in [(i, j) for i in range(5) for j in range(5)]:
        assert sat.contains(ModuleElement.from_poly(Poly.monomial(t))) == _in_monomial_ideal(t, expected)
