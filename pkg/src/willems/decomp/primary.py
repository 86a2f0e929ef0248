"""Associated primes and primary decomposition of D^q/M.

Candidate primes come from the cyclic filtration of D^q/M: the quotients
D/I_k with I_k = (M + <e_1..e_{k-1}>) : e_k.  Each I_k is analysed by the
supported ideal classes (unit, zero, monomial, linear, principal,
zero-dimensional) after two reductions: substituting away a variable that
occurs linearly with constant coefficient, and splitting
I = (I : f^∞) ∩ (I + f^k) along a factor f of a generator or of a
univariate eliminant.  The candidates are then filtered by an exact test,
so the returned primes are exactly Ass(D^q/M).
"""
import itertools
from dataclasses import dataclass, field

from ..core.order import TermOrder
from ..core.poly import ModuleElement, Poly
from ..errors import DecompositionUnsupported
from ..groebner import (Ideal, Submodule, as_ideal, colon_ideal, colon_poly, eliminate,
                        ideal_power, ideal_times_free, intersect_all, is_zero_dimensional,
                        module_sum, quotient, saturate)

MAX_SPLIT_DEPTH = 24
MAX_EMBEDDED_POWER = 8


@dataclass
class PrimaryComponent:
    """A p-primary submodule together with its prime.

    ``exponent`` is an N with p^N D^q contained in the component, when known.
    ``status`` is "verified" or "assumed" (hint-supplied and not checkable).
    """

    component: Submodule
    prime: Ideal
    exponent: int | None = None
    status: str = "verified"


@dataclass
class AssociatedPrimes:
    primes: list
    supported: bool = True
    filtration: list = field(default_factory=list)
    candidates: list = field(default_factory=list)


def canonical_key(S):
    """Order-independent, hashable key for a submodule (its reduced grevlex basis)."""
    return tuple(sorted(str(g) for g in S.groebner()))


def _dedupe(ideals):
    seen = {}
    for P in ideals:
        seen.setdefault(canonical_key(P), P.reduced())
    return [seen[k] for k in sorted(seen)]


# -- ideal analysis -----------------------------------------------------------
class _Ctx:
    def __init__(self, seed):
        self.seed = seed
        self.memo = {}
        self.trail = []


def _is_monomial(I):
    return all(len(g.terms) == 1 for g in I.groebner())


def _linear_sub(I):
    """(j, h) with D_j - h in I, h free of D_j, found among the basis elements."""
    for g in sorted(I.groebner_polys(), key=lambda p: (len(p.terms), p.degree(), str(p))):
        for j in g.variables():
            if g.degree_in(j) != 1:
                continue
            lin = {m: c for m, c in g.terms.items() if m[j] == 1}
            if len(lin) != 1 or sum(next(iter(lin))) != 1:
                continue
            c = next(iter(lin.values()))
            rest = Poly(g.n, {m: v for m, v in g.terms.items() if m[j] == 0})
            return j, rest.scale(-1 / c)
    return None


def _factors(g):
    from .factor import univariate_factor
    from .sym import factor_over_k

    if g.is_rational() and len(g.variables()) == 1:
        return univariate_factor(g).factors
    return factor_over_k(g)


def _split(I, f, ctx, depth):
    """Candidates of I through I = (I : f^∞) ∩ (I + f^k); None if no progress."""
    S = saturate(I, Ideal([f], I.n))
    if S.is_unit() or S.equals(I):
        return None
    k, fk = 1, f
    while not colon_poly(I, fk).equals(S):
        k, fk = k + 1, fk * f
    T = Ideal(list(I.gens) + [fk], I.n)
    ctx.trail.append(("split", str(f), k))
    return _candidates(S, ctx, depth + 1) + _candidates(T, ctx, depth + 1)


def _candidates(I, ctx, depth=0):
    """Primes containing every associated prime of D/I (a finite superset of Ass)."""
    I = as_ideal(I).reduced()
    key = canonical_key(I)
    if key in ctx.memo:
        return ctx.memo[key]
    if depth > MAX_SPLIT_DEPTH:
        raise DecompositionUnsupported(f"splitting depth exceeded on {I}")
    out = _analyse(I, ctx, depth)
    out = _dedupe(out)
    ctx.memo[key] = out
    return out


def _analyse(I, ctx, depth):
    n = I.n
    if I.is_unit():
        return []
    if I.is_zero():
        return [Ideal.zero(n)]
    if _is_monomial(I):
        from .monomial import monomial_associated_primes

        return monomial_associated_primes(I)
    gb = I.groebner_polys()
    if all(g.degree() <= 1 for g in gb):
        return [I]
    if len(gb) == 1:
        return [Ideal([g], n) for g, _ in _factors(gb[0])]
    if is_zero_dimensional(I).zero_dimensional:
        from .zerodim import zero_dim_decomposition

        return [c.prime for c in zero_dim_decomposition(I, seed=ctx.seed).components]
    sub = _linear_sub(I)
    if sub is not None:
        j, h = sub
        rest = [g.substitute(j, h) for g in gb]
        J = Ideal([g for g in rest if g], n)
        lift = Poly.var(n, j) - h
        ctx.trail.append(("substitute", j + 1, str(h)))
        return [Ideal(P.polys() + [lift], n) for P in _candidates(J, ctx, depth + 1)]
    for g in sorted(gb, key=lambda p: (p.degree(), str(p))):
        facs = _factors(g)
        if len(facs) == 1 and facs[0][1] == 1:
            continue
        for f, _ in facs:
            got = _split(I, f, ctx, depth)
            if got is not None:
                return got
    for j in range(n):
        u = eliminate(I, [k for k in range(n) if k != j]).groebner_polys()
        if not u:
            continue
        facs = _factors(u[0])
        if len(facs) > 1:
            out = []
            for f, e in facs:
                out += _candidates(Ideal(list(I.gens) + [f ** e], n), ctx, depth + 1)
            return out
        f, e = facs[0]
        got = _split(I, f, ctx, depth)
        if got is not None:
            return got
    raise DecompositionUnsupported(f"no supported decomposition route for {I}")


def ideal_candidate_primes(I, seed=0):
    return _candidates(as_ideal(I), _Ctx(seed))


def is_supported_prime(P, seed=0):
    """True when the supported analysis certifies that P is prime."""
    try:
        cands = ideal_candidate_primes(P, seed)
    except DecompositionUnsupported:
        return False
    return len(cands) == 1 and cands[0].equals(P)


# -- modules ------------------------------------------------------------------
def cyclic_filtration(M):
    """The ideals I_k = (M + <e_1..e_{k-1}>) : e_k for k = 1..q."""
    out = []
    gens = list(M.gens)
    for k in range(M.q):
        e = ModuleElement.basis(M.q, M.n, k)
        out.append(quotient(Submodule(gens, M.q, M.n), e))
        gens.append(e)
    return out


def _localize_away(M, primes):
    """M : (∏ primes)^∞, by successive saturation."""
    for P in primes:
        M = saturate(M, P)
    return M


def _strictly_contains(P, p):
    return p.issubset(P) and not P.issubset(p)


def associated_primes(M, seed=0, raise_unsupported=True):
    """Exact Ass(D^q/M), sorted canonically."""
    if M.is_full():
        return AssociatedPrimes([], True)
    filtration = cyclic_filtration(M)
    ctx = _Ctx(seed)
    cands = []
    try:
        for I in filtration:
            cands += _candidates(I, ctx)
    except DecompositionUnsupported as err:
        if raise_unsupported:
            raise DecompositionUnsupported(str(err), partial={"filtration": [str(I) for I in filtration],
                                                               "candidates": [str(P) for P in cands]})
        return AssociatedPrimes(_dedupe(cands), False, filtration, _dedupe(cands))
    cands = _dedupe(cands)
    primes = [p for p in cands if _is_associated(M, p, cands)]
    return AssociatedPrimes(primes, True, filtration, cands)


def _is_associated(M, p, cands):
    others = [P for P in cands if not P.issubset(p)]
    Mp = _localize_away(M, others)
    return not colon_ideal(Mp, p).issubset(Mp)


def independent_set(P):
    """A maximal set of variable indices independent modulo the leading ideal of P."""
    leads = [m for _, m in P.leads()]
    n = P.n
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            Sset = set(S)
            if not any(all(j in Sset for j, e in enumerate(m) if e) for m in leads):
                return S
    return ()


def localize_at(N, U):
    """N K(U)[X]^q ∩ D^q, using a basis under the X-block elimination order."""
    if not U:
        return N
    X = [j for j in range(N.n) if j not in set(U)]
    if not X:
        return N
    order = TermOrder.eliminating(X)
    denominators = []
    for g in N.groebner(order):
        (i, m), _ = g.lead(order)
        xm = tuple(m[j] for j in X)
        h = Poly(N.n, {mm: c for (ii, mm), c in g.terms.items()
                       if ii == i and tuple(mm[j] for j in X) == xm})
        h = Poly(N.n, {tuple(0 if j in X else e for j, e in enumerate(mm)): c for mm, c in h.terms.items()})
        if not h.is_constant():
            denominators.append(h.monic())
    out = N
    for h in sorted(set(denominators), key=str):
        out = saturate(out, Ideal([h], N.n))
    return out


def _embedded_component(M, p, ass, k):
    others = [P for P in ass if not P.issubset(p)]
    Mp = _localize_away(M, others)
    N = module_sum(Mp, ideal_times_free(ideal_power(p, k), M.q))
    return localize_at(N, independent_set(p))


@dataclass
class PrimaryDecomposition:
    module: Submodule
    components: list
    primes: list
    supported: bool = True
    embedded_power: int = 0


def primary_decomposition(M, seed=0, max_power=MAX_EMBEDDED_POWER):
    """Irredundant primary decomposition, one component per associated prime."""
    if M.q == 1 and not M.is_zero() and _is_monomial(as_ideal(M)):
        from .monomial import monomial_primary_decomposition

        comps = monomial_primary_decomposition(as_ideal(M))
        return PrimaryDecomposition(M, comps, [c.prime for c in comps])
    ass = associated_primes(M, seed).primes
    if not ass:
        return PrimaryDecomposition(M, [], [])
    minimal = [p for p in ass if not any(_strictly_contains(p, P) for P in ass)]
    comps = {}
    for p in minimal:
        others = [P for P in ass if not P.issubset(p)]
        comps[canonical_key(p)] = PrimaryComponent(_localize_away(M, others), p)
    embedded = [p for p in ass if canonical_key(p) not in comps]
    power = 0
    for k in range(1, max_power + 1):
        trial = dict(comps)
        for p in embedded:
            trial[canonical_key(p)] = PrimaryComponent(_embedded_component(M, p, ass, k), p, None)
        if intersect_all([c.component for c in trial.values()]).equals(M):
            comps, power = trial, (k if embedded else 0)
            break
    else:
        raise DecompositionUnsupported(f"embedded components did not stabilise up to power {max_power}")
    ordered = [comps[canonical_key(p)] for p in ass]
    for c in ordered:
        c.component = c.component.reduced()
        c.exponent = _radical_exponent(c.component, c.prime)
    return PrimaryDecomposition(M, ordered, ass, True, power)


def _radical_exponent(Q, p, cap=12):
    """Least N <= cap with p^N D^q inside Q (None beyond the cap)."""
    pk = Ideal.unit(p.n)
    for N in range(1, cap + 1):
        pk = Ideal([a * b for a in pk.groebner_polys() for b in p.groebner_polys()], p.n).reduced()
        if ideal_times_free(pk, Q.q).issubset(Q):
            return N
    return None


def closure_by_saturation(M, bad_primes):
    """Intersection of the components whose prime is not in ``bad_primes``.

    Equal to M : (∏ bad)^∞ whenever the bad set is closed upward under
    inclusion among associated primes.
    """
    if not bad_primes:
        return M
    return _localize_away(M, bad_primes)


def verify_decomposition(M, claimed, seed=0):
    """Check a user-supplied decomposition [(component, prime)].

    Raises ValueError when containment or the intersection fails; primality
    and primariness outside the supported classes are marked "assumed".
    """
    out = []
    for Q, p in claimed:
        if not M.issubset(Q):
            raise ValueError(f"claimed component {Q} does not contain the module")
        status = "verified"
        if not is_supported_prime(p, seed):
            status = "assumed"
        exponent = _radical_exponent(Q, p)
        if exponent is None:
            status = "assumed"
        if status == "verified":
            try:
                if [canonical_key(P) for P in associated_primes(Q, seed).primes] != [canonical_key(p)]:
                    raise ValueError(f"claimed component {Q} is not {p}-primary")
            except DecompositionUnsupported:
                status = "assumed"
        out.append(PrimaryComponent(Q, p.reduced(), exponent, status))
    if not claimed or not intersect_all([c.component for c in out]).equals(M):
        raise ValueError("claimed components do not intersect to the module")
    return out
