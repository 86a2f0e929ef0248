from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from willems.closure import (ALL_SPACES, SignalSpaceKind, closure_1d, closure_fin_ideal_direct,
                             closure_fin_space, closure_poly_space, is_controllable, pointwise_check,
                             prop41_membership, torsion_spectrum, willems_closure)
from willems.core import ModuleElement, Poly
from willems.errors import NotUnivariate, TranscendentalInUnsupportedContext
from willems.groebner import Ideal, Submodule, intersect
from willems.points import SearchBounds, points_ideal
from willems.signals import exponential_signals, is_in_behavior
from util import I, P, S, pt

PI_PRIME = "(D1^2 - D2^2) + pi*(D1*D2 - 1)"
PI_SPLIT = "(D1^2 - D2^2) + pi*(D1^2 + D3^3) + pi^2*(D1*D2*D3 - 1)"


def space(s):
    return SignalSpaceKind.parse(s)


def test_space_kinds():
    assert space("torus-finite-support").flavor == "fin"
    assert space("protorus-smooth").computation == "fin"
    assert space("torus-poly").ring == "Z" and space("protorus-poly").ring == "Q"
    assert len(ALL_SPACES) == 6


def test_poly_closure_of_monomial_ideal():
    r = closure_poly_space(I("D1^2", "D1*D2"), "Q")
    assert r.closure.equals(I("D1^2", "D1*D2")) and not r.conditional
    assert [e.fate for e in r.ledger] == ["kept", "kept"]


def test_poly_closure_of_pi_prime():
    p = I(PI_PRIME)
    r = closure_poly_space(p, "Q")
    assert r.closure.equals(p) and not r.conditional


def test_poly_closure_without_integral_points():
    r = willems_closure(I("2*D1 - 1", n=2), "torus-poly")
    assert r.closure.is_unit() and not r.conditional


def test_fin_closure_of_circle():
    r = closure_fin_space(I("D1^2 + D2^2 - 1"), "Q")
    assert r.closure.equals(I("D1^2 + D2^2 - 1")) and not r.conditional
    assert r.cross_check["agree"]


def test_fin_closure_splits_transcendentals():
    r = willems_closure(I(PI_SPLIT), "torus-fin")
    assert r.closure.equals(I("D1 + D2", "D3 + 1", "D1^2 - 1")) and not r.conditional


def test_fin_closure_of_module():
    M = S("[D1^2, D1*D2]", n=2)
    r = willems_closure(M, "protorus-fin")
    assert r.closure.equals(M) and not r.conditional


def test_direct_ideal_closures():
    assert closure_fin_ideal_direct(I("D1^2 + D2^2 - D3^2"), "Z").closure.equals(I("D1^2 + D2^2 - D3^2"))
    assert closure_fin_ideal_direct(I("1", n=2), "Q").closure.is_unit()
    assert closure_fin_ideal_direct(I("D1^2 - 2", n=2), "Q").closure.is_unit()


@pytest.mark.parametrize("sp,expected", [("torus-smooth", "D1 - 1"), ("torus-poly", "(D1 - 1)^2"),
                                         ("protorus-fin", "D1 - 1"), ("protorus-poly", "(D1 - 1)^2")])
def test_1d_double_root(sp, expected):
    r = closure_1d(I("(D1 - 1)^2"), space(sp))
    assert r.closure.equals(I(expected))


def test_1d_irrational_roots_close_to_unit():
    assert closure_1d(I("D1^2 - 2"), space("torus-smooth")).closure.is_full()


def test_1d_simple_rational_roots():
    M = I("(2*D1 - 1)*(D1 - 1)")
    assert closure_1d(M, space("protorus-smooth")).closure.equals(M)
    assert closure_1d(M, space("torus-fin")).closure.equals(I("D1 - 1"))


def test_1d_spectrum():
    spec = torsion_spectrum(I("(D1 - 1)^2*(D1^2 + 1)"))
    assert spec.dimension == 4 and spec.roots == {Fraction(1): 2}


def test_1d_errors():
    with pytest.raises(NotUnivariate):
        torsion_spectrum(I("D1*D2"))
    with pytest.raises(TranscendentalInUnsupportedContext):
        closure_1d(I("D1 - pi"), space("torus-fin"))


def test_controllability_examples():
    v = is_controllable(S("[D1^2, D1*D2]", n=2), space("protorus-poly"))
    assert v.verdict == "NotControllable" and v.witness_prime.equals(I("D1", n=2))
    assert v.witness_point is not None and v.witness_point[0] == 0
    v = is_controllable(Submodule([], 2, 2), space("protorus-poly"))
    assert v.verdict == "Controllable" and len(v.image_matrix) == 2
    v = is_controllable(I("D1^2 - 2", n=2), space("protorus-poly"))
    assert v.verdict == "Controllable" and v.torsion_closure.is_full()


def test_prop41_examples():
    M = I("D1^2", "D1*D2")
    assert prop41_membership(M, P("D1", 2)) is False
    assert prop41_membership(M, P("D1^2*D2", 2)) is True
    assert prop41_membership(I(PI_PRIME), Poly.one(2)) is False


def test_elliptic_curve_is_conditional():
    E = I("D2^2 - D1^3 - 1")
    b = SearchBounds(height=6, denominator=4)
    assert closure_fin_space(E, "Q", b, strict=True).conditional


def test_pointwise_check_flags_wrong_closure():
    M = I("D1^2 + D2^2 - 1")
    bad = pointwise_check(M, I("D1 - 1", "D2"), [pt(0, 1), pt(1, 0)])
    assert not bad["agree"]


# --- properties -----------------------------------------------------------

lin = st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-3, 3)).filter(lambda t: t[0] or t[1])
quad = st.sampled_from(["D1^2 + D2^2 - 1", "D1^2 - 2", "D1*D2 - 1", "D1^2 + 1", "D2 - D1^2", "2*D1 - 1"])


def _lin(t):
    return P(f"{t[0]}*D1 + {t[1]}*D2 + {t[2]}", 2)


principal = st.tuples(st.lists(lin, max_size=2), st.lists(quad, max_size=1), st.integers(1, 2)).filter(
    lambda t: t[0] or t[1]).map(
    lambda t: Ideal([_product([_lin(x) for x in t[0]] + [P(q, 2) for q in t[1]], t[2])], 2))
point_sets = st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)).map(lambda t: pt(*t)),
                      min_size=1, max_size=3, unique=True).map(points_ideal)
inputs = st.one_of(principal, point_sets)
spaces = st.sampled_from(["torus-fin", "protorus-fin", "torus-poly", "protorus-poly"])


def _product(fs, k):
    out = Poly.one(2)
    for f in fs:
        out = out * f
    return out ** k if len(fs) == 1 else out


@given(inputs, spaces)
def test_closure_is_extensive_and_idempotent(M, sp):
    r = willems_closure(M, sp)
    assert M.issubset(r.closure)
    if not r.conditional:
        assert willems_closure(r.closure, sp).closure.equals(r.closure)


@given(inputs, st.sampled_from(["fin", "poly"]))
def test_torus_closure_contains_protorus_closure(M, flavor):
    tor = willems_closure(M, f"torus-{flavor}")
    pro = willems_closure(M, f"protorus-{flavor}")
    if not (tor.conditional or pro.conditional):
        assert pro.closure.issubset(tor.closure)


@given(inputs, inputs, spaces)
def test_closure_is_monotone(A, B, sp):
    AB = intersect(A, B)
    rA, rAB = willems_closure(A, sp), willems_closure(AB, sp)
    if not (rA.conditional or rAB.conditional):
        assert rAB.closure.issubset(rA.closure)


@given(inputs, st.sampled_from(["Q", "Z"]))
def test_fin_space_agrees_with_direct_route(M, ring):
    a = closure_fin_space(M, ring)
    b = closure_fin_ideal_direct(M, ring)
    if not (a.conditional or b.conditional):
        assert a.closure.equals(b.closure)


@given(inputs, st.sampled_from(["Q", "Z"]))
def test_closure_kills_found_exponentials(M, ring):
    r = closure_fin_space(M, ring)
    pts = [p for e in r.ledger for p in e.points][:12]
    for f in exponential_signals(pts):
        if is_in_behavior(M, f):
            assert is_in_behavior(r.closure, f)
