"""Zero-dimensional ideals: multiplication matrices, eliminants, radicals,
decomposition along a separating linear form, and exact rational points."""
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from ..core.linalg import Echelon, solve
from ..core.poly import Poly
from ..errors import ShearRetryExhausted
from ..groebner import Ideal, as_ideal, is_zero_dimensional, standard_monomials
from .factor import dense_factor, rational_roots, squarefree_part, trim

MAX_SHEARS = 24


def multiplication_matrices(I):
    """Standard monomials B of D/I and the matrices of multiplication by each D_j."""
    I = as_ideal(I)
    B = standard_monomials(I)
    index = {m: k for k, m in enumerate(B)}
    mats = []
    for j in range(I.n):
        cols = []
        for b in B:
            nf = I.normal_form(Poly(I.n, {b: 1}).mul_term(tuple(int(k == j) for k in range(I.n))))
            col = [Fraction(0)] * len(B)
            for (_, m), c in nf.terms.items():
                col[index[m]] = c
            cols.append(col)
        mats.append([[cols[c][r] for c in range(len(B))] for r in range(len(B))])
    return B, mats


def _apply(mat, v):
    return [sum((a * b for a, b in zip(row, v) if b != 0), Fraction(0)) for row in mat]


def _combine(mats, coeffs):
    dim = len(mats[0])
    out = [[Fraction(0)] * dim for _ in range(dim)]
    for c, M in zip(coeffs, mats):
        if c:
            for r in range(dim):
                for s in range(dim):
                    if M[r][s] != 0:
                        out[r][s] += c * M[r][s]
    return out


def krylov_minpoly(mat, start):
    """Monic minimal polynomial of ``mat`` on the cyclic subspace of ``start`` (low to high)."""
    vecs = [start]
    ech = Echelon(len(start))
    ech.add(start)
    while True:
        v = _apply(mat, vecs[-1])
        if not ech.add(v):
            k = len(vecs)
            rows = [[vecs[c][r] for c in range(k)] for r in range(len(start))]
            coeffs = solve(rows, v, k)
            return [-c for c in coeffs] + [Fraction(1)]
        vecs.append(v)


def minimal_polynomial(I, form, data=None):
    """Monic generator of I ∩ K[ℓ] for the linear form ℓ = Σ form_j D_j."""
    B, mats = data or multiplication_matrices(I)
    L = _combine(mats, form)
    one = [Fraction(int(sum(m) == 0)) for m in B]
    return krylov_minpoly(L, one)


def eliminant(I, var):
    form = [int(k == var) for k in range(I.n)]
    return minimal_polynomial(I, form)


def _linear_form(n, coeffs):
    return sum((Poly.var(n, j).scale(c) for j, c in enumerate(coeffs) if c), Poly.zero(n))


def _compose(a, ell):
    out = Poly.zero(ell.n)
    for c in reversed(a):
        out = out * ell + c
    return out


def radical_zero_dim(I, data=None):
    """√I for zero-dimensional I (add squarefree parts of coordinate eliminants)."""
    I = as_ideal(I)
    data = data or multiplication_matrices(I)
    extra = []
    for j in range(I.n):
        f = minimal_polynomial(I, [int(k == j) for k in range(I.n)], data)
        s = squarefree_part(f) if _rational(f) else _sqfree_k(f)
        if len(s) < len(f):
            extra.append(_compose(s, Poly.var(I.n, j)))
    if not extra:
        return I
    return Ideal(list(I.gens) + extra, I.n).reduced()


def _rational(a):
    return all(isinstance(c, (int, Fraction)) for c in a)


def _sqfree_k(a):
    """Squarefree part over Q(transcendentals) via factorization."""
    from .sym import factor_over_k

    p = Poly(1, {(k,): c for k, c in enumerate(a) if c != 0})
    out = Poly.one(1)
    for g, _ in factor_over_k(p):
        out = out * g
    return [out.terms.get((k,), Fraction(0)) for k in range(out.degree() + 1)]


def _factor_any(a):
    """[(monic factor as dense list, multiplicity)] over Q or Q(transcendentals)."""
    if _rational(a):
        _, facs, _ = dense_factor(trim(a))
        return facs
    from .sym import factor_over_k

    p = Poly(1, {(k,): c for k, c in enumerate(a) if c != 0})
    out = []
    for g, e in factor_over_k(p):
        out.append(([g.terms.get((k,), Fraction(0)) for k in range(g.degree() + 1)], e))
    return out


@dataclass
class ZeroDimDecomposition:
    components: list
    points: list
    form: tuple
    eliminant: list
    seed: int
    shears_tried: int
    dimension: int
    point_count: int = 0


def _separating_form(R, dataR, npts, rng, max_shears):
    n = R.n
    tried = 0
    candidates = [[int(k == j) for k in range(n)] for j in range(n)]
    while True:
        if candidates:
            form = candidates.pop(0)
        else:
            if tried >= max_shears + n:
                raise ShearRetryExhausted(f"no separating linear form after {tried} attempts")
            form = [rng.randint(-3 - tried, 3 + tried) for _ in range(n)]
            if not any(form):
                continue
        tried += 1
        f = minimal_polynomial(R, form, dataR)
        if len(f) - 1 == npts:
            return form, tried


def zero_dim_decomposition(I, seed=0, max_shears=MAX_SHEARS):
    """Primary decomposition and rational points of a zero-dimensional ideal."""
    from .primary import PrimaryComponent

    I = as_ideal(I)
    info = is_zero_dimensional(I)
    if not info.zero_dimensional:
        raise ValueError("ideal is not zero-dimensional")
    n = I.n
    data = multiplication_matrices(I)
    R = radical_zero_dim(I, data)
    dataR = multiplication_matrices(R) if R is not I else data
    npts = len(dataR[0])
    rng = random.Random(seed)
    form, tried = _separating_form(R, dataR, npts, rng, max_shears)
    f = minimal_polynomial(I, form, data)
    ell = _linear_form(n, form)
    comps = []
    for g, e in _factor_any(f):
        gl = _compose(g, ell)
        Q = Ideal(list(I.gens) + [_compose(_pow(g, e), ell)], n).reduced()
        P = Ideal(list(R.gens) + [gl], n).reduced()
        comps.append(PrimaryComponent(Q, P, 1 if R is I else None))
    comps.sort(key=lambda c: str(c.prime.groebner()))
    pts = rational_points_zero_dim(I, data)
    return ZeroDimDecomposition(comps, pts, tuple(form), f, seed, tried, info.dimension, npts)


def _pow(a, e):
    out = [Fraction(1)]
    for _ in range(e):
        nxt = [Fraction(0)] * (len(out) + len(a) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(a):
                nxt[i + j] += x * y
        out = nxt
    return out


def rational_points_zero_dim(I, data=None):
    """All points of V(I) ∩ Q^n, sorted; complete because every coordinate of
    such a point is a rational root of the matching coordinate eliminant."""
    I = as_ideal(I).reduced()
    if not I.is_rational():
        from .torsion import rationalize_ideal

        J = rationalize_ideal(I)
        if J.is_unit():
            return []
        return rational_points_zero_dim(J)
    data = data or multiplication_matrices(I)
    roots = []
    for j in range(I.n):
        f = minimal_polynomial(I, [int(k == j) for k in range(I.n)], data)
        roots.append(rational_roots(f))
    gens = I.polys()
    out = []
    for pt in itertools.product(*roots):
        if all(g(*pt) == 0 for g in gens):
            out.append(tuple(pt))
    return sorted(out)
