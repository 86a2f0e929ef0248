"""Torsion closure by double syzygies, and transcendental splitting."""
from dataclasses import dataclass
from fractions import Fraction

from ..core.coefficient import Coefficient, as_tpolys, make_coefficient
from ..core.poly import ModuleElement, Poly
from ..groebner import Ideal, Submodule, as_ideal, syzygies


@dataclass
class TorsionClosure:
    """M1 ⊇ M with M1/M the torsion of D^q/M.

    ``L`` holds the columns of the image matrix (generators of the relations
    among the columns of M); M1 is the module of relations among the rows
    of L.
    """

    M: Submodule
    M1: Submodule
    L: list


def _columns(M):
    """Columns of the matrix whose rows are the generators of M, as elements of D^s."""
    rows = [g.components() for g in M.gens]
    return [ModuleElement.from_polys([r[j] for r in rows], M.n) for j in range(M.q)]


def torsion_closure(M):
    q, n = M.q, M.n
    if M.is_zero():
        L = [ModuleElement.basis(q, n, j) for j in range(q)]
        return TorsionClosure(M, Submodule([], q, n), L)
    L = list(syzygies(_columns(M)).gens)
    if not L:
        full = Submodule([ModuleElement.basis(q, n, j) for j in range(q)], q, n)
        return TorsionClosure(M, full, [])
    # row j of the q x t matrix whose columns are the elements of L
    rows = [ModuleElement.from_polys([v.component(j) for v in L], n) for j in range(q)]
    M1 = syzygies(rows)
    return TorsionClosure(M, Submodule(M1.gens, q, n), L)


def _clear_denominators(p):
    """Multiply by the transcendental denominators so all coefficients are polynomial."""
    dens = []
    for c in p.terms.values():
        if isinstance(c, Coefficient) and not c.is_polynomial():
            _, den = as_tpolys(c)
            d = make_coefficient(den)
            if d not in dens:
                dens.append(d)
    for d in dens:
        p = p.scale(d)
    return p


def split_transcendental(p):
    """{transcendental monomial: rational Poly} with p = Σ τ · p_τ."""
    p = _clear_denominators(p)
    parts = {}
    for m, c in p.terms.items():
        if isinstance(c, Coefficient):
            num, _ = as_tpolys(c)
            items = num.items()
        else:
            items = [((), Fraction(c))]
        for tm, v in items:
            parts.setdefault(tm, {})[m] = v
    return {tm: Poly(p.n, t) for tm, t in sorted(parts.items())}


def rationalize_ideal(I):
    """Ideal over Q generated by the transcendental-monomial parts of each generator."""
    I = as_ideal(I)
    gens = []
    for g in I.polys():
        if g.is_rational():
            gens.append(g)
        else:
            gens.extend(q for q in split_transcendental(g).values() if q)
    return Ideal(gens, I.n)
