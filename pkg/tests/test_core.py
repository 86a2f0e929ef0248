from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from willems.core import (GREVLEX, LEX, Poly, TermOrder, coef_arith, format_poly, make_coefficient, poly_eval,
                          poly_shift, transcendental)
from willems.errors import DimensionMismatch
from util import P, pt

pi = transcendental("pi")


def test_rational_arithmetic():
    assert coef_arith(Fraction(1, 2), Fraction(1, 3), "+") == Fraction(5, 6)


def test_transcendental_product():
    assert coef_arith(pi, pi, "×") == pi ** 2


def test_transcendental_division_multiplies_back():
    q = coef_arith(pi ** 2 - 1, pi - 1, "÷")
    assert q == pi + 1
    assert q * (pi - 1) == pi ** 2 - 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        coef_arith(pi, pi - pi, "/")


def test_canonical_form_is_structural():
    a = (pi ** 2 - 1) / (2 * pi - 2)
    b = (pi + 1) / 2
    assert a == b and hash(a) == hash(b)


def test_shift_square():
    lam = pt(3, -2)
    assert poly_shift(P("D1^2", 2), lam) == P("(D1 + 3)^2", 2)


def test_shift_by_zero():
    L = P("D1^3*D2 - 7*D2 + pi", 2, ("pi",))
    assert poly_shift(L, pt(0, 0)) == L


def test_shift_product():
    assert poly_shift(P("D1*D2"), pt(1, 1)) == P("D1*D2 + D1 + D2 + 1")


def test_shift_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        poly_shift(P("D1*D2"), pt(1))


def test_eval_circle():
    assert poly_eval(P("D1^2 + D2^2 - 1"), pt("3/5", "4/5")) == 0


def test_eval_constant():
    assert poly_eval(Poly.one(3), pt(5, 7, "1/9")) == 1


def test_eval_pi_generator():
    L = P("(D1^2 - D2^2) + pi*(D1*D2 - 1)")
    assert poly_eval(L, pt(1, 1)) == 0
    assert poly_eval(L, pt(2, 1)) == 3 + pi


def test_format_parse_roundtrip_examples():
    for text in ("D1^2 + D2^2 - 1", "1/2*D1*D2 - 3", "pi*D1^2 - pi^2*D3 + 1"):
        p = P(text, 3)
        assert P(format_poly(p), 3) == p


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=9)
scalars = st.builds(lambda a, b, c: a + b * pi + c * pi ** 2, fractions, fractions, fractions)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1
    assert a - a == 0


exps = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys2 = st.dictionaries(exps, st.fractions(-5, 5, max_denominator=4), max_size=5).map(lambda t: Poly(2, t))
points2 = st.tuples(fractions, fractions)


@given(polys2, points2, points2)
def test_shift_composes(L, a, b):
    s = tuple(x + y for x, y in zip(a, b))
    assert poly_shift(poly_shift(L, a), b) == poly_shift(L, s)
    assert poly_eval(poly_shift(L, a), (0, 0)) == poly_eval(L, a)


@given(polys2, polys2, points2)
def test_eval_is_a_ring_map(f, g, a):
    assert poly_eval(f * g, a) == poly_eval(f, a) * poly_eval(g, a)
    assert poly_eval(f + g, a) == poly_eval(f, a) + poly_eval(g, a)


monos = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@pytest.mark.parametrize("order", [GREVLEX, LEX, TermOrder.block(1)], ids=["grevlex", "lex", "elim"])
@given(a=monos, b=monos, c=monos)
def test_term_order_axioms(order, a, b, c):
    k = order.mono_key
    assert (k(a) < k(b)) + (k(b) < k(a)) + (a == b) == 1
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    if k(a) < k(b):
        assert k(ac) < k(bc)
    assert not k(ac) < k(a)


def test_make_coefficient_rational_collapses():
    assert make_coefficient({(): 3}, {(): 6}) == Fraction(1, 2)


@pytest.mark.parametrize("order", [GREVLEX, GREVLEX.with_module("pot"), TermOrder.block(1)], ids=str)
@given(a=monos, b=monos, c=monos, i=st.integers(0, 2), j=st.integers(0, 2))
def test_module_order_is_multiplicative(order, a, b, c, i, j):
    s, t = (i, a), (j, b)
    if order.key(s) < order.key(t):
        shift = lambda u: (u[0], tuple(x + y for x, y in zip(u[1], c)))
        assert order.key(shift(s)) < order.key(shift(t))
