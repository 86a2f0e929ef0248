"""Small constructors shared by the tests."""
from fractions import Fraction

from willems.cli.parse import parse_element, parse_poly
from willems.groebner import Ideal, Submodule


def P(text, n=None, trans=("pi",)):
    return parse_poly(text, n, trans)


def I(*gens, n=None, trans=("pi",)):
    polys = [P(g, n, trans) for g in gens]
    n = n or max(p.n for p in polys)
    return Ideal([p.extend(n) if p.n < n else p for p in polys], n)


def S(*rows, n):
    return Submodule([parse_element(r, n) for r in rows])


def pt(*xs):
    return tuple(Fraction(x) for x in xs)


def same(A, B):
    return A.equals(B)
