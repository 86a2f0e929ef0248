import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from willems.core import poly_eval
from willems.errors import EmptyPointSet
from willems.points import (BACKEND, SearchBounds, density_verdict, enumerate_points, find_point,
                            grid_values, points_ideal, solve_linear, solve_rational_zero_dim,
                            vanishing_ideal)
from util import I, P, pt


def _brute(I_, values):
    """Independent oracle: plain loops over a value grid."""
    gens = I_.polys()
    return sorted(x for x in itertools.product(values, repeat=I_.n)
                  if all(poly_eval(g, x) == 0 for g in gens))


def test_zero_dim_pi_points():
    assert solve_rational_zero_dim(I("D1^2 - D2^2", "D1*D2 - 1")).points == [pt(-1, -1), pt(1, 1)]


def test_zero_dim_circle_axis():
    ps = solve_rational_zero_dim(I("D1^2 + D2^2 - 1", "D2"))
    assert ps.points == [pt(-1, 0), pt(1, 0)] and ps.complete


def test_zero_dim_no_rational_solution():
    ps = solve_rational_zero_dim(I("D1^2 + D2^2 - 1", "D1 - D2"))
    assert ps.points == [] and ps.complete


def test_linear_over_q():
    s = solve_linear(I("D1 + D2", "D3 + 1"), "Q")
    assert s.particular == pt(0, 0, -1) and s.directions == [pt(-1, 1, 0)]


def test_linear_parity_obstruction():
    assert solve_linear(I("2*D1 - 1"), "Z").is_empty


def test_linear_diagonal_over_z():
    s = solve_linear(I("D1 - D2"), "Z")
    assert s.particular == pt(0, 0) and s.directions == [pt(1, 1)]


def test_cone_integer_box():
    cone = I("D1^2 + D2^2 - D3^2")
    ps = enumerate_points(cone, SearchBounds(height=5), "Z")
    assert ps.points == _brute(cone, [Fraction(k) for k in range(-5, 6)])
    assert pt(3, 4, 5) in ps.points and pt(0, 0, 0) in ps.points
    assert len(ps.points) == 57


def test_unit_ideal_has_no_points():
    assert enumerate_points(I("1", n=2), SearchBounds(height=5)).points == []


def test_circle_rational_grid():
    circle = I("D1^2 + D2^2 - 1")
    ps = enumerate_points(circle, SearchBounds(height=5, denominator=5), "Q")
    assert ps.points == _brute(circle, grid_values("Q", 5, 5))
    expected = {pt(1, 0), pt(-1, 0), pt(0, 1), pt(0, -1)}
    expected |= {(s * a, t * b) for s in (1, -1) for t in (1, -1) for a, b in (pt("3/5", "4/5"), pt("4/5", "3/5"))}
    assert set(ps.points) == expected


def test_vanishing_ideal_examples():
    assert vanishing_ideal([pt(0, 0)], 1).equals(I("D1", "D2"))
    assert vanishing_ideal([pt(1, 1), pt(-1, -1)], 2).equals(I("D1 - D2", "D2^2 - 1"))
    assert vanishing_ideal([pt(1, -1, -1), pt(-1, 1, -1)], 2).equals(I("D1 + D2", "D3 + 1", "D1^2 - 1"))


def test_vanishing_ideal_empty():
    with pytest.raises(EmptyPointSet):
        vanishing_ideal([], 2)


def test_points_ideal_three_points():
    assert points_ideal([pt(0, 0), pt(1, 0), pt(0, 1)]).equals(I("D1^2 - D1", "D1*D2", "D2^2 - D2"))


def test_density_circle():
    v = density_verdict(I("D1^2 + D2^2 - 1"), "Q", SearchBounds(degree=2))
    assert v.kind == "Dense" and v.certificate == "interpolation" and v.certified
    assert all(p[0].denominator <= 12 for p in v.points)


def test_density_cone_integral():
    v = density_verdict(I("D1^2 + D2^2 - D3^2"), "Z", SearchBounds(height=32, degree=2))
    assert v.kind == "Dense" and v.certified


def test_density_empty_by_exhaustion():
    v = density_verdict(I("D1^2 - 2", "D2", n=2))
    assert (v.kind, v.certificate, v.certified) == ("Empty", "zero-dimensional-exhaustion", True)


def test_density_integer_linear_obstruction():
    v = density_verdict(I("2*D1 - 1", n=2), "Z")
    assert v.kind == "Empty" and v.certified


def test_density_proper_closure_for_transcendental_prime():
    p = I("(D1^2 - D2^2) + pi*(D1^2 + D3^3) + pi^2*(D1*D2*D3 - 1)")
    v = density_verdict(p, "Z")
    assert v.kind == "ProperClosure"
    assert v.ideal.equals(I("D1 + D2", "D3 + 1", "D1^2 - 1"))


def test_bounded_search_empty_is_uncertified():
    v = density_verdict(I("D1^2 + D2^2 + 1"), "Q", SearchBounds(height=6, denominator=4))
    assert v.kind == "Empty" and not v.certified
    assert v.effective(strict=True) == "Unknown"


def test_elliptic_curve_is_unknown():
    v = density_verdict(I("D2^2 - D1^3 - 1"), "Q", SearchBounds(height=10, denominator=6))
    assert v.kind == "Unknown" and not v.certified


def test_find_point_and_emptiness():
    assert find_point(I("D1^2 - D2^2", "D1*D2 - 1")).point in (pt(-1, -1), pt(1, 1))
    r = find_point(I("D1^2 - 2", n=2))
    assert r.point is None and r.certified_empty


# --- properties -----------------------------------------------------------

coef = st.integers(-2, 2)
quadrics = st.tuples(coef, coef, coef, coef, coef, coef).map(
    lambda c: I(f"{c[0]}*D1^2 + {c[1]}*D1*D2 + {c[2]}*D2^2 + {c[3]}*D1 + {c[4]}*D2 + {c[5]}", n=2))


@given(quadrics, st.sampled_from([7, 64, 1000]))
def test_enumeration_independent_of_partition_and_backend(J, chunk):
    b = SearchBounds(height=4, denominator=3)
    ref = enumerate_points(J, b, "Q", backend="numpy", chunk=1 << 16).points
    assert enumerate_points(J, b, "Q", backend="numpy", chunk=chunk).points == ref
    if BACKEND == "numba":
        assert enumerate_points(J, b, "Q", backend="numba", chunk=chunk).points == ref
    assert ref == sorted(ref)
    for x in ref:
        assert all(poly_eval(g, x) == 0 for g in J.polys())


ipoint = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).map(lambda t: pt(*t))


@given(st.lists(ipoint, min_size=1, max_size=4, unique=True))
def test_vanishing_ideal_is_sound_and_tight(P_):
    V = vanishing_ideal(P_, len(P_))
    for g in V.polys():
        assert all(poly_eval(g, x) == 0 for x in P_)
    box = enumerate_points(V, SearchBounds(height=3), "Z").points
    assert sorted(box) == sorted(P_)


@pytest.mark.parametrize("text,ring", [("D1^2 + D2^2 - 1", "Q"), ("D1^2 - 2*D2", "Q"),
                                       ("D1^2 + D2^2 - D3^2", "Z"), ("D1 - D2^2", "Z")])
def test_density_monotone_in_bounds(text, ring):
    p = I(text)
    small = density_verdict(p, ring, SearchBounds(height=8, denominator=4, degree=2))
    large = density_verdict(p, ring, SearchBounds(height=20, denominator=8, degree=2))
    if small.kind == "Dense":
        assert large.kind == "Dense"
    if small.kind == "Dense":
        assert small.detail["rank"] == small.detail["target_rank"]
