"""Module operations built on Gröbner bases.

Syzygies, intersections and quotients all use the same device: stack the
data into a bigger free module, compute a basis under position-over-term
order, and read off the elements whose leading block vanishes.
"""
import itertools
from fractions import Fraction
from typing import NamedTuple

from ..core.order import GREVLEX, POT, TermOrder
from ..core.poly import ModuleElement, Poly, as_element, mono_divides
from ..errors import DimensionMismatch, UnitIdeal
from .basis import DEFAULT_CAPS, Ideal, Submodule, as_ideal, buchberger_raw


def buchberger(M, order=GREVLEX, caps=DEFAULT_CAPS):
    """Submodule generated by the reduced Gröbner basis of ``M`` under ``order``."""
    out = Submodule(M.groebner(order, caps), M.q, M.n)
    out._gb[order] = out.gens
    return type(M)._wrap(out)


def normal_form(f, M, order=GREVLEX):
    return M.normal_form(f, order)


def _check_same(elems):
    shapes = {(g.q, g.n) for g in elems}
    if len(shapes) > 1:
        raise DimensionMismatch(f"mixed ambients {sorted(shapes)}")


def _stack(blocks, q_total, n):
    """Concatenate the component dicts of several vectors into D^{q_total}."""
    terms = {}
    offset = 0
    for v, width in blocks:
        if v is not None:
            for (i, m), c in v.terms.items():
                terms[(offset + i, m)] = c
        offset += width
    return terms


def _lower_block(raw, q_top, q_total, n):
    """Elements of a POT basis supported only in components >= q_top."""
    out = []
    for g in raw:
        if all(i >= q_top for i, _ in g):
            out.append(ModuleElement._raw(q_total - q_top, n, {(i - q_top, m): c for (i, m), c in g.items()}))
    return out


def syzygies(G, n=None):
    """Relation module {r : sum r_i G_i = 0} inside D^{len(G)}."""
    G = [as_element(g) for g in G]
    _check_same(G)
    if not G:
        raise DimensionMismatch("syzygies of an empty list")
    q, n, s = G[0].q, G[0].n, len(G)
    rows = []
    for k, g in enumerate(G):
        e = ModuleElement.basis(s, n, k)
        rows.append(_stack([(g, q), (e, s)], q + s, n))
    raw = buchberger_raw(rows, POT, q + s)
    return Submodule(_lower_block(raw, q, q + s, n), s, n)


def intersect(A, B):
    A._check(B)
    q, n = A.q, A.n
    if A.is_zero() or B.is_zero():
        return type(A)._wrap(Submodule([], q, n))
    rows = [_stack([(a, q), (a, q)], 2 * q, n) for a in A.gens]
    rows += [_stack([(b, q), (None, q)], 2 * q, n) for b in B.gens]
    raw = buchberger_raw(rows, POT, 2 * q)
    return type(A)._wrap(Submodule(_lower_block(raw, q, 2 * q, n), q, n))


def intersect_all(mods):
    mods = list(mods)
    out = mods[0]
    for m in mods[1:]:
        out = intersect(out, m)
    return out


def quotient(M, m):
    """The ideal (M : m) = {r in D : r m in M}."""
    m = as_element(m)
    if (m.q, m.n) != (M.q, M.n):
        raise DimensionMismatch(f"element of D^{m.q} vs submodule of D^{M.q}")
    q, n = M.q, M.n
    if m.is_zero():
        return Ideal.unit(n)
    one = ModuleElement.basis(1, n, 0)
    rows = [_stack([(m, q), (one, 1)], q + 1, n)]
    rows += [_stack([(g, q), (None, 1)], q + 1, n) for g in M.gens]
    raw = buchberger_raw(rows, POT, q + 1)
    return Ideal(_lower_block(raw, q, q + 1, n), n)


def module_quotient(M, N):
    """The ideal (M : N) = {r : r N ⊆ M} (the annihilator of N + M / M)."""
    M._check(N)
    out = Ideal.unit(M.n)
    for g in N.gens:
        if not M.contains(g):
            out = intersect(out, quotient(M, g))
    return out


def exact_divide(p, f, order=GREVLEX):
    """p / f for polynomials, raising ValueError if f does not divide p."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm, lc = f.lead(order)
    quot = {}
    rem = p
    while rem:
        m, c = rem.lead(order)
        if not mono_divides(lm, m):
            raise ValueError("polynomial division is not exact")
        t = tuple(a - b for a, b in zip(m, lm))
        k = c / lc
        quot[t] = quot.get(t, 0) + k
        rem = rem - f.mul_term(t, k)
    return Poly(p.n, quot)


def colon_poly(M, f):
    """{x in D^q : f x in M}."""
    if isinstance(f, ModuleElement):
        f = f.as_poly()
    if f.is_zero():
        return type(M)._wrap(Submodule([ModuleElement.basis(M.q, M.n, i) for i in range(M.q)], M.q, M.n))
    if f.is_constant():
        return M
    fD = Submodule([f * ModuleElement.basis(M.q, M.n, i) for i in range(M.q)], M.q, M.n)
    inter = intersect(M, fD)
    gens = [ModuleElement.from_polys([exact_divide(p, f) for p in g.components()], M.n) for g in inter.gens]
    return type(M)._wrap(Submodule(gens, M.q, M.n))


def colon_ideal(M, J):
    """{x in D^q : J x ⊆ M}."""
    J = as_ideal(J, M.n)
    parts = [colon_poly(M, g.as_poly()) for g in J.gens]
    if not parts:
        return type(M)._wrap(Submodule([ModuleElement.basis(M.q, M.n, i) for i in range(M.q)], M.q, M.n))
    return intersect_all(parts)


def _extend(v, n_new):
    return ModuleElement._raw(v.q, n_new, {(i, m + (0,) * (n_new - v.n)): c for (i, m), c in v.terms.items()})


def _saturate_poly_rabinowitsch(M, f):
    """M : f^∞ via M + (1 - t f) D^q, eliminating the new variable t."""
    n, q = M.n, M.q
    t = Poly.var(n + 1, n)
    g = Poly.one(n + 1) - t * f.extend(n + 1)
    gens = [_extend(v, n + 1) for v in M.gens]
    gens += [g * ModuleElement.basis(q, n + 1, i) for i in range(q)]
    order = TermOrder.eliminating([n])
    raw = buchberger_raw([v.terms for v in gens], order, q)
    keep = [v for v in raw if all(m[n] == 0 for _, m in v)]
    out = [ModuleElement._raw(q, n, {(i, m[:n]): c for (i, m), c in v.items()}) for v in keep]
    return type(M)._wrap(Submodule(out, q, n))


def _saturate_poly_iterate(M, f):
    cur = M
    while True:
        nxt = colon_poly(cur, f)
        if nxt.issubset(cur):
            return cur
        cur = nxt


def saturate(M, J, method="rabinowitsch"):
    """The stable value of (M : J^∞).

    ``method`` selects Rabinowitsch elimination (one basis per generator of
    ``J``) or plain iteration of quotients; both give the same submodule.
    """
    J = as_ideal(J, M.n)
    if J.n != M.n:
        raise DimensionMismatch("ideal and module live over different rings")
    polys = [p for p in J.polys() if not p.is_zero()]
    if not polys:
        return M
    if any(p.is_constant() for p in polys):
        return M
    step = _saturate_poly_rabinowitsch if method == "rabinowitsch" else _saturate_poly_iterate
    if method == "iterate" and len(polys) > 1:
        cur = M
        while True:
            nxt = colon_ideal(cur, J)
            if nxt.issubset(cur):
                return cur
            cur = nxt
    return intersect_all([step(M, p) for p in polys])


def eliminate(I, variables):
    """I ∩ K[remaining variables] (variables given as 0-based indices)."""
    I = as_ideal(I)
    variables = sorted(set(variables))
    if not variables:
        return I
    order = TermOrder.eliminating(variables)
    gb = I.groebner(order)
    keep = [g for g in gb if all(m[v] == 0 for _, m in g.terms for v in variables)]
    return Ideal(keep, I.n)


def keep_variables(I, keep):
    return eliminate(I, [i for i in range(I.n) if i not in set(keep)])


def module_sum(*mods):
    q, n = mods[0].q, mods[0].n
    gens = []
    for m in mods:
        mods[0]._check(m)
        gens.extend(m.gens)
    return type(mods[0])._wrap(Submodule(gens, q, n))


def ideal_times_free(I, q):
    """The submodule I·D^q."""
    I = as_ideal(I)
    gens = [p * ModuleElement.basis(q, I.n, i) for p in I.polys() for i in range(q)]
    return Submodule(gens, q, I.n)


def ideal_power(I, k):
    I = as_ideal(I)
    if k == 0:
        return Ideal.unit(I.n)
    polys = I.groebner_polys()
    out = polys
    for _ in range(k - 1):
        out = list({a * b for a in out for b in polys})
        out = Ideal(out, I.n).groebner_polys()
    return Ideal(out, I.n)


def ideal_product(*ideals):
    n = ideals[0].n
    polys = [Poly.one(n)]
    for J in ideals:
        polys = Ideal([a * b for a in polys for b in as_ideal(J).polys()], n).groebner_polys()
    return Ideal(polys, n)


class ZeroDimInfo(NamedTuple):
    zero_dimensional: bool
    dimension: int | None


def standard_monomials(I, order=GREVLEX, limit=100000):
    """Monomials outside the leading ideal (finite list; zero-dimensional ideals only)."""
    leads = [m for _, m in I.leads(order)]
    n = I.n
    bounds = []
    for v in range(n):
        pure = [m[v] for m in leads if all(e == 0 for j, e in enumerate(m) if j != v)]
        if not pure:
            raise ValueError("ideal is not zero-dimensional")
        bounds.append(min(pure))
    out = []
    for m in itertools.product(*[range(b) for b in bounds]):
        if not any(mono_divides(l, m) for l in leads):
            out.append(m)
            if len(out) > limit:
                raise ValueError("too many standard monomials")
    out.sort(key=GREVLEX.mono_key)
    return out


def is_zero_dimensional(I):
    """ZeroDimInfo(True, dim_K D/I) when D/I is finite-dimensional, else (False, None)."""
    I = as_ideal(I)
    if I.is_unit():
        raise UnitIdeal("the unit ideal has an empty variety")
    leads = [m for _, m in I.leads()]
    for v in range(I.n):
        if not any(m[v] > 0 and all(e == 0 for j, e in enumerate(m) if j != v) for m in leads):
            return ZeroDimInfo(False, None)
    return ZeroDimInfo(True, len(standard_monomials(I)))


def krull_dimension(M):
    """Dimension of D^q/M (of the support); -1 for M = D^q.

    Uses maximal sets of variables independent modulo the leading terms of
    a grevlex basis, component by component.
    """
    if M.is_full():
        return -1
    leads = M.leads()
    best = -1
    for comp in range(M.q):
        monos = [m for i, m in leads if i == comp]
        if any(sum(m) == 0 for m in monos):
            continue
        for size in range(M.n, best, -1):
            found = False
            for S in itertools.combinations(range(M.n), size):
                Sset = set(S)
                if not any(all(j in Sset for j, e in enumerate(m) if e) for m in monos):
                    found = True
                    break
            if found:
                best = max(best, size)
                break
    return best


def truncation_basis(M, d, order=GREVLEX):
    """Echelon basis of M ∩ {vectors of degree <= d}, as dicts.

    Spans the products m·g (g in a degree-compatible basis, deg(m g) <= d).
    """
    from ..core.linalg import Echelon

    monos = [m for k in range(d + 1) for m in _monos_of_degree(M.n, k)]
    cols = [(i, m) for i in range(M.q) for m in monos]
    index = {t: k for k, t in enumerate(cols)}
    ech = Echelon(len(cols))
    for g in M.groebner(order):
        gd = g.degree()
        for k in range(d - gd + 1):
            for m in _monos_of_degree(M.n, k):
                v = [Fraction(0)] * len(cols)
                for (i, mm), c in g.terms.items():
                    v[index[(i, tuple(a + b for a, b in zip(mm, m)))]] = c
                ech.add(v)
    return cols, ech.basis()


def _monos_of_degree(n, k):
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _monos_of_degree(n - 1, k - first):
            yield (first,) + rest


def monomials_up_to(n, d):
    return [m for k in range(d + 1) for m in _monos_of_degree(n, k)]
