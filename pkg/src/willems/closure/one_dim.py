"""Closed-form closures in one variable from the spectrum of D on the torsion."""
from dataclasses import dataclass, field
from fractions import Fraction

from ..core.linalg import (Echelon, charpoly, column_space, identity, matmul, rank, solve,
                           span_intersection, transpose)
from ..core.poly import ModuleElement, Poly
from ..decomp.factor import dense_factor, from_dense, pmul, ppow, rational_roots, root_multiplicity
from ..decomp.torsion import torsion_closure
from ..errors import NotUnivariate, TranscendentalInUnsupportedContext
from ..groebner import Ideal, Submodule, normal_form
from .report import ClosureReport, LedgerEntry, SignalSpaceKind


@dataclass
class TorsionSpectrum1D:
    """D acting on T = M1/M.

    ``basis`` holds normal forms modulo M, ``coords`` the standard terms
    indexing their coordinate vectors, and ``delta`` the matrix with
    D·basis[i] = Σ_j delta[j][i] basis[j] modulo M.
    """

    module: Submodule
    M1: Submodule
    basis: list
    coords: list
    delta: list
    charpoly: list  # dense, low degree first
    roots: dict = field(default_factory=dict)  # Fraction -> multiplicity
    factors: list = field(default_factory=list)  # [(dense monic, multiplicity)]
    certified: bool = True

    @property
    def dimension(self):
        return len(self.basis)

    def integer_roots(self):
        return {a: k for a, k in self.roots.items() if a.denominator == 1}

    def roots_in(self, ring):
        return self.integer_roots() if ring == "Z" else dict(self.roots)

    def irrational_part(self):
        """Product of the factors without rational roots, dense monic."""
        out = [Fraction(1)]
        for f, k in self.factors:
            if len(f) != 2:
                out = pmul(out, ppow(f, k))
        return out


def _vector(v, coords):
    return [v.terms.get(t, Fraction(0)) for t in coords]


def _element(vec, coords, q, n):
    return ModuleElement(q, n, {t: c for t, c in zip(coords, vec) if c != 0})


def torsion_spectrum(M):
    if M.n != 1:
        raise NotUnivariate(f"one-variable closure requested for n = {M.n}")
    if not M.is_rational():
        raise TranscendentalInUnsupportedContext("one-variable closure needs rational coefficients")
    M1 = torsion_closure(M).M1
    x = Poly.var(1, 0)
    # Krylov closure of the images of M1's generators in D^q/M
    pending = [normal_form(g, M) for g in M1.gens]
    vecs, seen_terms = [], []
    while pending:
        v = pending.pop(0)
        if v.is_zero():
            continue
        seen_terms += [t for t in v.terms if t not in seen_terms]
        ech = Echelon(len(seen_terms))
        for w in vecs + [v]:
            ech.add(_vector(w, seen_terms))
        if ech.rank == len(vecs) + 1:
            vecs.append(v)
            pending.append(normal_form(x * v, M))
    coords = sorted(seen_terms)
    t = len(vecs)
    rows = [_vector(v, coords) for v in vecs]
    # coordinates of D·b_i in the basis b_j
    delta = [[Fraction(0)] * t for _ in range(t)]
    for i, v in enumerate(vecs):
        image = _vector(normal_form(x * v, M), coords)
        sol = _solve_in_span(rows, image)
        for j, c in enumerate(sol):
            delta[j][i] = c
    cp = charpoly(delta)
    roots = {r: root_multiplicity(cp, r) for r in rational_roots(cp)} if t else {}
    _, factors, certified = dense_factor(cp) if t else (1, [], True)
    return TorsionSpectrum1D(M, M1, vecs, coords, delta, cp, roots, factors, certified)


def _solve_in_span(rows, target):
    """Coefficients c with Σ c_j rows[j] = target (rows independent)."""
    A = transpose(rows)
    sol = solve(A, target, len(rows))
    if sol is None:
        raise ArithmeticError("torsion basis is not D-stable")
    return sol


def _shifted(delta, a):
    return [[x - (a if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(delta)]


def closure_1d(M, space, strict=False):
    """Willems closure for n = 1 (all six spaces)."""
    if isinstance(space, str):
        space = SignalSpaceKind.parse(space)
    spec = torsion_spectrum(M)
    ring = space.ring
    t = spec.dimension
    roots = spec.roots_in(ring)
    if t == 0:
        image = []
    elif space.computation == "poly":
        P = identity(t)
        for a, k in sorted(roots.items()):
            for _ in range(k):
                P = matmul(_shifted(spec.delta, a), P)
        image = column_space(P, t)
    else:
        image = identity(t)
        for a in sorted(roots):
            image = span_intersection(image, column_space(_shifted(spec.delta, a), t), t)
    lifts = []
    for vec in image:
        combo = [Fraction(0)] * len(spec.coords)
        for c, b in zip(vec, spec.basis):
            if c != 0:
                combo = [x + c * y for x, y in zip(combo, _vector(b, spec.coords))]
        lifts.append(_element(combo, spec.coords, M.q, M.n))
    closure = Submodule(list(M.gens) + lifts, M.q, M.n).reduced()
    report = ClosureReport(M, space, closure, method="torsion-spectrum", strict=strict)
    report.extra["spectrum"] = spec
    if space.flavor == "smooth":
        report.notes.append("smooth closure computed through the finite-support flavor")
    for a, k in sorted(spec.roots.items()):
        prime = _linear_prime(a)
        in_ring = a in roots
        if space.computation == "poly":
            fate = "kept" if in_ring else "dropped"
        else:
            semisimple = t - rank(_shifted(spec.delta, a), t) == k
            fate = ("closed" if semisimple else "enlarged") if in_ring else "dropped"
        report.ledger.append(LedgerEntry(prime, fate, "Dense" if in_ring else "Empty",
                                         "rational-root" if in_ring else "no-ring-point",
                                         points=[(a,)] if in_ring else [], note=f"multiplicity {k}"))
    rest = spec.irrational_part()
    if len(rest) > 1:
        report.ledger.append(LedgerEntry(Ideal([from_dense(rest, 1, 0)], 1), "dropped", "Empty",
                                         "no-rational-root", note="aggregate of factors without rational roots"))
    if not spec.certified:
        report.notes.append("irrational factors were split by an uncertified fallback; roots are exact")
    return report


def _linear_prime(a):
    return Ideal([Poly(1, {(1,): 1, (0,): -a})], 1)
