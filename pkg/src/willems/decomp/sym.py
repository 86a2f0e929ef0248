"""Conversion to and from sympy, used only for factoring over Q(transcendentals)."""
from fractions import Fraction

import sympy

from ..core.coefficient import Coefficient, as_tpolys, make_coefficient
from ..core.poly import Poly


def _dsyms(n):
    return sympy.symbols([f"D{i + 1}" for i in range(n)])


def _tsym(name):
    return sympy.Symbol(f"T_{name}")


def _tpoly_expr(tp):
    out = sympy.Integer(0)
    for tm, c in tp.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for name, e in tm:
            term *= _tsym(name) ** e
        out += term
    return out


def coefficient_expr(c):
    num, den = as_tpolys(c)
    return _tpoly_expr(num) / _tpoly_expr(den)


def poly_to_expr(p):
    ds = _dsyms(p.n)
    out = sympy.Integer(0)
    for m, c in p.terms.items():
        term = coefficient_expr(c) if isinstance(c, Coefficient) else sympy.Rational(c.numerator, c.denominator)
        for x, e in zip(ds, m):
            term *= x ** e
        out += term
    return out


def _expr_coefficient(expr):
    """A sympy expression in the T_ symbols -> Fraction or Coefficient."""
    expr = sympy.together(expr)
    num, den = sympy.fraction(expr)
    tsyms = sorted(expr.free_symbols, key=lambda s: s.name)
    names = [s.name[2:] for s in tsyms]

    def tp(e):
        if not tsyms:
            r = sympy.Rational(e)
            return {(): Fraction(int(r.p), int(r.q))}
        P = sympy.Poly(e, *tsyms)
        out = {}
        for exps, c in P.terms():
            tm = tuple((x, k) for x, k in zip(names, exps) if k)
            out[tm] = Fraction(int(c.p), int(c.q))
        return out

    return make_coefficient(tp(num), tp(den))


def expr_to_poly(expr, n):
    ds = _dsyms(n)
    P = sympy.Poly(sympy.expand(expr), *ds)
    terms = {}
    for exps, c in P.terms():
        terms[tuple(int(e) for e in exps)] = _expr_coefficient(c)
    return Poly(n, terms)


def factor_over_k(p):
    """Irreducible factors of ``p`` over Q(transcendentals), monic, with multiplicities.

    Factors free of the D variables are units and are dropped.
    """
    expr = poly_to_expr(p)
    num, _ = sympy.fraction(sympy.together(expr))
    _, facs = sympy.factor_list(num)
    dset = set(_dsyms(p.n))
    out = []
    for g, e in facs:
        if not (g.free_symbols & dset):
            continue
        out.append((expr_to_poly(g, p.n).monic(), int(e)))
    out.sort(key=lambda fe: (fe[0].degree(), str(fe[0])))
    return out
