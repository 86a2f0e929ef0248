"""Exact trigonometric-polynomial signals and the action of D_j = -i d/dx_j.

A signal is a finite sum  Σ_a p_a(x) e^{i<a,x>}  with rational frequencies a
and vectors p_a of polynomials in x_1..x_n whose coefficients are Gaussian
numbers over Q(transcendentals).  Everything is exact; these routines are
the brute-force reference for closure computations.
"""
from __future__ import annotations

from fractions import Fraction

from .core.coefficient import Coefficient, format_coefficient
from .core.linalg import nullspace
from .core.poly import ModuleElement, Poly, as_element, poly_eval, poly_shift
from .errors import DimensionMismatch
from .groebner import Submodule, monomials_up_to


def _scalar(x):
    if isinstance(x, (Coefficient, Fraction)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a scalar: {x!r}")


class GaussianCoefficient:
    """re + i*im with re, im in Q(transcendentals)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _scalar(re)
        self.im = _scalar(im)

    @staticmethod
    def lift(x):
        if isinstance(x, GaussianCoefficient):
            return x
        if isinstance(x, (int, Fraction, Coefficient)):
            return GaussianCoefficient(x, 0)
        return None

    def __add__(self, other):
        o = GaussianCoefficient.lift(other)
        if o is None:
            return NotImplemented
        return GaussianCoefficient(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianCoefficient(-self.re, -self.im)

    def __sub__(self, other):
        o = GaussianCoefficient.lift(other)
        if o is None:
            return NotImplemented
        return GaussianCoefficient(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = GaussianCoefficient.lift(other)
        if o is None:
            return NotImplemented
        return GaussianCoefficient(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianCoefficient(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = GaussianCoefficient.lift(other)
        if o is None:
            return NotImplemented
        d = o.norm()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian coefficient")
        num = self * o.conjugate()
        return GaussianCoefficient(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        o = GaussianCoefficient.lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        out = GaussianCoefficient(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = GaussianCoefficient.lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im != 0 else hash(self.re)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"GaussianCoefficient({self})"

    def __str__(self):
        if self.im == 0:
            return format_coefficient(self.re)
        im = format_coefficient(self.im)
        if self.re == 0:
            if isinstance(self.im, Coefficient):
                return f"({im})*i"
            return {"1": "i", "-1": "-i"}.get(im, f"{im}*i")
        return f"({format_coefficient(self.re)} + ({im})*i)"


I_UNIT = GaussianCoefficient(0, 1)
MINUS_I = GaussianCoefficient(0, -1)


def _g(x):
    g = GaussianCoefficient.lift(x)
    if g is None:
        raise TypeError(f"not a Gaussian scalar: {x!r}")
    return g


def _xpoly(d, n):
    """Normalize {x-monomial: scalar} to Gaussian coefficients without zeros."""
    out = {}
    for m, c in d.items():
        m = tuple(m)
        if len(m) != n:
            raise DimensionMismatch(f"x-monomial {m} in {n} variables")
        c = _g(c)
        if c:
            out[m] = out.get(m, GaussianCoefficient()) + c
    return {m: c for m, c in out.items() if c}


def _xpoly_add(a, b, scale=None):
    out = dict(a)
    for m, c in b.items():
        if scale is not None:
            c = c * scale
        v = out.get(m, GaussianCoefficient()) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _derive(p, m):
    """∂^m p for an x-polynomial p."""
    out = {}
    for e, c in p.items():
        if any(a < b for a, b in zip(e, m)):
            continue
        f = 1
        for a, b in zip(e, m):
            for k in range(b):
                f *= a - k
        k = tuple(a - b for a, b in zip(e, m))
        out[k] = out.get(k, GaussianCoefficient()) + c * f
    return {k: v for k, v in out.items() if v}


class Signal:
    """Finite sum of vector-polynomial exponentials, stored as {frequency: (p_1, ..., p_q)}."""

    __slots__ = ("n", "q", "terms")

    def __init__(self, n, q, terms=None):
        self.n, self.q = n, q
        clean = {}
        for a, vec in (terms or {}).items():
            a = tuple(Fraction(x) for x in a)
            if len(a) != n or len(vec) != q:
                raise DimensionMismatch(f"frequency {a} or coefficient vector has wrong shape")
            vec = tuple(_xpoly(p, n) for p in vec)
            if any(vec):
                if a in clean:
                    vec = tuple(_xpoly_add(u, v) for u, v in zip(clean[a], vec))
                clean[a] = vec
        self.terms = {a: v for a, v in clean.items() if any(v)}

    @classmethod
    def exponential(cls, a, c=None):
        """c e^{i<a,x>} with a constant vector c (default (1,))."""
        c = (1,) if c is None else tuple(c)
        n = len(a)
        return cls(n, len(c), {tuple(a): tuple({(0,) * n: x} for x in c)})

    @classmethod
    def constant(cls, n, c=(1,)):
        return cls.exponential((0,) * n, c)

    @classmethod
    def zero(cls, n, q):
        return cls(n, q)

    def support(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Signal) and (self.n, self.q) == (other.n, other.q)
                and self.terms == other.terms)

    def __add__(self, other):
        if (self.n, self.q) != (other.n, other.q):
            raise DimensionMismatch("signals of different shape")
        terms = dict(self.terms)
        for a, vec in other.terms.items():
            terms[a] = tuple(_xpoly_add(u, v) for u, v in zip(terms.get(a, ({},) * self.q), vec))
        return Signal(self.n, self.q, terms)

    def scale(self, c):
        c = _g(c)
        return Signal(self.n, self.q, {a: tuple({m: v * c for m, v in p.items()} for p in vec)
                                       for a, vec in self.terms.items()})

    def in_lattice(self, denominator=None):
        """Support ⊆ Z^n (denominator None) or ⊆ (1/N) Z^n."""
        N = 1 if denominator is None else denominator
        return all(N % x.denominator == 0 for a in self.terms for x in a)

    def x_degree(self):
        return max((sum(m) for vec in self.terms.values() for p in vec for m in p), default=-1)

    def __repr__(self):
        return f"Signal({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a in sorted(self.terms):
            vec = ", ".join(_format_xpoly(p, self.n) for p in self.terms[a])
            parts.append(f"e({', '.join(str(x) for x in a)})*[{vec}]")
        return " + ".join(parts)


def _format_xpoly(p, n):
    if not p:
        return "0"
    out = []
    for m in sorted(p, key=lambda e: (-sum(e), tuple(-x for x in e))):
        mono = "*".join(f"x{j + 1}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(m) if e)
        c = str(p[m])
        out.append(c if not mono else mono if c == "1" else f"{c}*{mono}")
    return " + ".join(out)


def _apply_poly(L, a, vec_j):
    """L(D + a) applied to one x-polynomial, D_k acting as -i ∂/∂x_k."""
    shifted = poly_shift(L, a)
    out = {}
    for m, c in shifted.terms.items():
        d = _derive(vec_j, m)
        if d:
            out = _xpoly_add(out, d, MINUS_I ** sum(m) * c)
    return out


def _rows(R):
    if isinstance(R, (Poly, ModuleElement)):
        return [as_element(R)]
    if isinstance(R, Submodule):
        return list(R.gens)
    return [as_element(r) if not isinstance(r, (list, tuple)) else ModuleElement.from_polys(r) for r in R]


def apply_operator(R, f):
    """Apply the r×q operator matrix R (rows as ModuleElements, or a single row) to f."""
    rows = _rows(R)
    for r in rows:
        if (r.q, r.n) != (f.q, f.n):
            raise DimensionMismatch(f"operator row in D^{r.q} (n={r.n}) applied to a signal in D^{f.q} (n={f.n})")
    terms = {}
    for a, vec in f.terms.items():
        outs = []
        for r in rows:
            acc = {}
            for j, L in enumerate(r.components()):
                if L and vec[j]:
                    acc = _xpoly_add(acc, _apply_poly(L, a, vec[j]))
            outs.append(acc)
        terms[a] = tuple(outs)
    return Signal(f.n, len(rows), terms)


def is_in_behavior(M, f):
    """Whether every generator of M annihilates f."""
    M = M if isinstance(M, Submodule) else Submodule(_rows(M))
    if (M.q, M.n) != (f.q, f.n):
        raise DimensionMismatch("module and signal shapes differ")
    return all(apply_operator(g, f).is_zero() for g in M.gens)


class FrequencyFiber:
    """V(a) = span{m(a) : m ∈ M} ⊆ K^q, with a basis of its annihilator {c : v·c = 0}."""

    def __init__(self, point, values, kernel):
        self.point = point
        self.values = values
        self.kernel = kernel

    @property
    def rank(self):
        return len(self.values[0]) - len(self.kernel) if self.values else None

    def signals(self):
        return [Signal.exponential(self.point, c) for c in self.kernel]

    def __repr__(self):
        return f"FrequencyFiber(point={self.point}, kernel_dim={len(self.kernel)})"


def kernel_on_support(M, S):
    """Fibers over the frequencies in S: solutions c of v·c = 0 for all v ∈ V(a)."""
    M = M if isinstance(M, Submodule) else Submodule(_rows(M))
    out = []
    for a in S:
        a = tuple(Fraction(x) for x in a)
        vals = [[poly_eval(p, a) for p in g.components()] for g in M.gens]
        rows = [v for v in vals if any(x != 0 for x in v)]
        ker = [tuple(v) for v in nullspace(rows, M.q)]
        out.append(FrequencyFiber(a, vals, ker))
    return out


def behavior_on_support(M, S, degree):
    """Basis of the behavior signals supported on S with x-degree <= degree.

    Solves the exact linear system for the unknown Gaussian coefficients of
    each p_a, frequency by frequency (the action preserves frequencies).
    """
    M = M if isinstance(M, Submodule) else Submodule(_rows(M))
    n, q = M.n, M.q
    monos = monomials_up_to(n, degree)
    out = []
    for a in S:
        a = tuple(Fraction(x) for x in a)
        unknowns = [(j, m) for j in range(q) for m in monos]
        columns = []
        for j, m in unknowns:
            vec = tuple({m: 1} if k == j else {} for k in range(q))
            img = apply_operator(M.gens, Signal(n, q, {a: vec})) if M.gens else Signal(n, 0)
            columns.append(img.terms.get(a, ()))
        keys = sorted({(r, e) for col in columns for r, p in enumerate(col) for e in p})
        rows = [[col[r].get(e, GaussianCoefficient()) if col else GaussianCoefficient() for col in columns]
                for r, e in keys]
        for v in nullspace(rows, len(unknowns)):
            vec = [dict() for _ in range(q)]
            for (j, m), c in zip(unknowns, v):
                if c != 0:
                    vec[j][m] = c
            out.append(Signal(n, q, {a: tuple(vec)}))
    return out


def _split(c):
    g = _g(c)
    return g.re, g.im


def annihilator_from_signals(F, d, q=None, n=None):
    """All elements of D^q of total degree <= d annihilating every signal in F.

    Returns the submodule generated by a basis of that vector space.
    """
    F = list(F)
    if F:
        n, q = F[0].n, F[0].q
    if n is None or q is None:
        raise DimensionMismatch("n and q are required when no signals are given")
    monos = monomials_up_to(n, d)
    unknowns = [(j, m) for j in range(q) for m in monos]
    columns = []
    for j, m in unknowns:
        op = ModuleElement(q, n, {(j, m): 1})
        col = {}
        for s, f in enumerate(F):
            for a, vec in apply_operator(op, f).terms.items():
                for e, c in vec[0].items():
                    re, im = _split(c)
                    col[(s, a, e, 0)] = re
                    col[(s, a, e, 1)] = im
        columns.append(col)
    keys = sorted({k for col in columns for k in col})
    rows = [[col.get(k, Fraction(0)) for col in columns] for k in keys]
    gens = []
    for v in nullspace(rows, len(unknowns)):
        gens.append(ModuleElement(q, n, {u: c for u, c in zip(unknowns, v) if c != 0}))
    return Submodule(gens, q, n)


def exponential_signals(points, q=1):
    """Constant-vector exponentials e_j e^{i<a,x>} for each point and each j."""
    out = []
    for a in points:
        for j in range(q):
            out.append(Signal.exponential(a, tuple(int(k == j) for k in range(q))))
    return out


def polynomial_exponentials(points, degree, q=1):
    """x^m e_j e^{i<a,x>} for all |m| <= degree."""
    out = []
    for a in points:
        n = len(a)
        for m in monomials_up_to(n, degree):
            for j in range(q):
                out.append(Signal(n, q, {tuple(a): tuple({m: 1} if k == j else {} for k in range(q))}))
    return out

