"""Factorization of univariate polynomials over Q (self-contained) and of
polynomials with transcendental coefficients (through sympy).

Dense univariate polynomials are lists of Fractions, lowest degree first.
"""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from ..core.poly import Poly
from ..errors import NotUnivariate, TranscendentalInUnsupportedContext

KRONECKER_DEGREE_CAP = 12
KRONECKER_BUDGET = 200000


# -- dense helpers -----------------------------------------------------------
def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a):
    return len(a) - 1


def monic(a):
    a = trim(a)
    lc = a[-1]
    return [c / lc for c in a]


def padd(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def psub(a, b):
    return padd(a, [-c for c in b])


def pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def pdivmod(a, b):
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    lc = b[-1]
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = r[-1] / lc
        q[k] = c
        for i, y in enumerate(b):
            r[i + k] -= c * y
        r = trim(r)
    return trim(q), r


def pgcd(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, pdivmod(a, b)[1]
    return monic(a) if a else []


def pderiv(a):
    return trim([i * c for i, c in enumerate(a)][1:])


def ppow(a, k):
    out = [Fraction(1)]
    for _ in range(k):
        out = pmul(out, a)
    return out


def peval(a, x):
    v = Fraction(0)
    for c in reversed(a):
        v = v * x + c
    return v


def squarefree_decomposition(a):
    """Yun's algorithm: list of (squarefree monic factor, multiplicity)."""
    a = monic(a)
    if deg(a) < 1:
        return []
    out = []
    b = pgcd(a, pderiv(a))
    c = pdivmod(a, b)[0]
    d = psub(pdivmod(pderiv(a), b)[0], pderiv(c))
    i = 1
    while deg(c) >= 1:
        g = pgcd(c, d)
        if deg(g) >= 1:
            out.append((g, i))
        c = pdivmod(c, g)[0]
        d = psub(pdivmod(d, g)[0], pderiv(c))
        i += 1
    return out


def squarefree_part(a):
    a = monic(a)
    if deg(a) < 1:
        return a
    return monic(pdivmod(a, pgcd(a, pderiv(a)))[0])


def integer_content(a):
    """Scale to a primitive integer polynomial; returns (int coefficients, scale)."""
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    if ints and ints[-1] < 0:
        g = -g
    return [x // g for x in ints], Fraction(den, g)


def _divisors(k):
    k = abs(k)
    if k == 0:
        return []
    small, large = [], []
    i = 1
    while i * i <= k:
        if k % i == 0:
            small.append(i)
            if i * i != k:
                large.append(k // i)
        i += 1
    return small + large[::-1]


def rational_roots(a):
    """Distinct rational roots of ``a`` (rational root theorem), ascending."""
    a = trim(a)
    roots = set()
    while a and a[0] == 0:
        roots.add(Fraction(0))
        a = a[1:]
    if deg(a) < 1:
        return sorted(roots)
    ints, _ = integer_content(a)
    if deg(a) == 1:
        roots.add(Fraction(-ints[0], ints[1]))
        return sorted(roots)
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for s in (1, -1):
                x = Fraction(s * p, q)
                if x not in roots and peval(a, x) == 0:
                    roots.add(x)
    return sorted(roots)


def root_multiplicity(a, r):
    m = 0
    lin = [-r, Fraction(1)]
    while True:
        q, rem = pdivmod(a, lin)
        if rem:
            return m
        a, m = q, m + 1


def _interpolate(xs, ys):
    out = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = [Fraction(yi)]
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                term = pmul(term, [Fraction(-xj), Fraction(1)])
                den *= xi - xj
        out = padd(out, [c / den for c in term])
    return out


class KroneckerBudgetExceeded(Exception):
    pass


def _kronecker_split(ints, d, budget):
    """A factor of degree ``d`` of the primitive integer polynomial, or None."""
    f = [Fraction(x) for x in ints]
    cand = []
    x = 0
    while len(cand) < 3 * (d + 1) + 2:
        for v in ((x,) if x == 0 else (x, -x)):
            fv = int(peval(f, v))
            cand.append((len(_divisors(fv)), v, fv))
        x += 1
    cand.sort()
    pts = cand[:d + 1]
    xs = [v for _, v, _ in pts]
    choices = [[Fraction(t) for t in _divisors(pts[0][2])]]
    for _, _, fv in pts[1:]:
        ds = _divisors(fv)
        choices.append([Fraction(s * t) for t in ds for s in (1, -1)])
    total = 1
    for c in choices:
        total *= len(c)
    if total > budget:
        raise KroneckerBudgetExceeded
    lc = ints[-1]
    for ys in itertools.product(*choices):
        g = _interpolate(xs, ys)
        if deg(g) != d or any(c.denominator != 1 for c in g):
            continue
        if lc % int(g[-1]) != 0:
            continue
        q, r = pdivmod(f, g)
        if not r:
            return g
    return None


def _factor_squarefree_no_roots(a, cap, budget):
    """Irreducible monic factors of a squarefree polynomial without rational roots.

    Returns (factors, certified); ``certified`` is False when a factor could
    not be shown irreducible within the degree cap or search budget.
    """
    todo = [monic(a)]
    out = []
    certified = True
    while todo:
        f = todo.pop()
        if deg(f) <= 3:
            out.append(f)  # no rational roots, degree <= 3: irreducible
            continue
        ints, _ = integer_content(f)
        found = None
        complete = True
        for d in range(2, deg(f) // 2 + 1):
            if d > cap:
                complete = False
                break
            try:
                found = _kronecker_split(ints, d, budget)
            except KroneckerBudgetExceeded:
                complete = False
                break
            if found is not None:
                break
        if found is None:
            if not complete:
                fallback = _sympy_univariate_factors(f)
                if fallback is not None:
                    out.extend(fallback)
                    continue
                certified = False
            out.append(f)
        else:
            g = monic(found)
            todo.append(g)
            todo.append(monic(pdivmod(f, g)[0]))
    return out, certified


def _sympy_univariate_factors(f):
    """Fallback beyond the Kronecker budget; irreducible monic factors over Q."""
    try:
        import sympy
    except ImportError:  # pragma: no cover
        return None
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(f))
    _, facs = sympy.factor_list(expr, x)
    out = []
    for g, e in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(sympy.Poly(g, x).all_coeffs())]
        for _ in range(e):
            out.append(monic(coeffs))
    return out


@dataclass
class UnivariateFactorization:
    """f = content * prod(factor ** multiplicity), factors monic irreducible."""

    variable: int
    content: Fraction
    factors: list = field(default_factory=list)
    integer_roots: list = field(default_factory=list)
    rational_roots: list = field(default_factory=list)
    certified: bool = True

    def product(self, n):
        out = Poly.const(n, self.content)
        for g, e in self.factors:
            out = out * g ** e
        return out


def to_dense(p, var):
    a = [Fraction(0)] * (p.degree_in(var) + 1)
    for m, c in p.terms.items():
        a[m[var]] = c
    return trim(a)


def from_dense(a, n, var):
    terms = {}
    for k, c in enumerate(a):
        if c:
            m = [0] * n
            m[var] = k
            terms[tuple(m)] = c
    return Poly(n, terms)


def univariate_variable(p):
    vs = p.variables()
    if len(vs) > 1:
        raise NotUnivariate(f"polynomial involves variables {[v + 1 for v in vs]}")
    return vs[0] if vs else 0


def dense_factor(a, cap=KRONECKER_DEGREE_CAP, budget=KRONECKER_BUDGET):
    """Irreducible factorization of a dense rational polynomial.

    Returns (content, [(monic factor, multiplicity)], certified), factors
    sorted by (degree, coefficients).
    """
    a = trim(a)
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    content = a[-1]
    factors = []
    certified = True
    for part, mult in squarefree_decomposition(a):
        rest = part
        for r in rational_roots(part):
            factors.append(([-r, Fraction(1)], mult))
            rest = pdivmod(rest, [-r, Fraction(1)])[0]
        if deg(rest) >= 1:
            irr, ok = _factor_squarefree_no_roots(rest, cap, budget)
            certified = certified and ok
            factors.extend((g, mult) for g in irr)
    factors.sort(key=lambda fe: (len(fe[0]), fe[0], fe[1]))
    return content, factors, certified


def univariate_factor(f, cap=KRONECKER_DEGREE_CAP):
    """Factor a univariate polynomial over Q; also report its rational roots."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if not f.is_rational():
        raise TranscendentalInUnsupportedContext("univariate factorization needs rational coefficients")
    var = univariate_variable(f)
    a = to_dense(f, var)
    content, factors, certified = dense_factor(a, cap)
    out = UnivariateFactorization(var, content, certified=certified)
    for g, e in factors:
        out.factors.append((from_dense(g, f.n, var), e))
        if deg(g) == 1:
            root = -g[0]
            out.rational_roots.append((root, e))
            if root.denominator == 1:
                out.integer_roots.append((root, e))
    out.rational_roots.sort()
    out.integer_roots.sort()
    return out
