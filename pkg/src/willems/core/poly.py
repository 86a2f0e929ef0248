"""Sparse polynomials in D_1..D_n and elements of the free module D^q."""
import itertools
from fractions import Fraction
from math import comb

from ..errors import DimensionMismatch
from .coefficient import Coefficient, coefficient_symbols, format_coefficient, is_rational
from .order import GREVLEX


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def _add_into(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v == 0:
        out.pop(key, None)
    else:
        out[key] = v


class Poly:
    """Polynomial with exact coefficients in ``n`` variables.

    ``terms`` maps exponent tuples to nonzero coefficients (``Fraction`` or
    :class:`Coefficient`).  Instances are treated as immutable.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n, terms=None):
        if n < 1:
            raise DimensionMismatch("ambient variable count must be >= 1")
        self.n = n
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise DimensionMismatch(f"monomial {m} has wrong length for n={n}")
            c = _coerce(c)
            if c != 0:
                clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        self = object.__new__(cls)
        self.n = n
        self.terms = terms
        self._hash = None
        return self

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def const(cls, n, c):
        c = _coerce(c)
        return cls._raw(n, {(0,) * n: c} if c != 0 else {})

    @classmethod
    def one(cls, n):
        return cls.const(n, 1)

    @classmethod
    def var(cls, n, i):
        """The variable D_{i+1} (0-based index ``i``)."""
        m = [0] * n
        m[i] = 1
        return cls._raw(n, {tuple(m): Fraction(1)})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls(len(exps), {tuple(exps): c})

    # -- structure --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i):
        return max((m[i] for m in self.terms), default=-1)

    def variables(self):
        """Indices of variables that occur."""
        return tuple(i for i in range(self.n) if any(m[i] for m in self.terms))

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.n, Fraction(0))

    def is_monomial(self):
        return len(self.terms) == 1

    def is_rational(self):
        return all(is_rational(c) for c in self.terms.values())

    def symbols(self):
        return tuple(sorted({s for c in self.terms.values() for s in coefficient_symbols(c)}))

    def lead(self, order=GREVLEX):
        """Leading (monomial, coefficient) under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.mono_key)
        return m, self.terms[m]

    def monic(self, order=GREVLEX):
        if not self.terms:
            return self
        _, c = self.lead(order)
        return self.scale(1 / c) if c != 1 else self

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"ambient mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(out, m, c)
        return Poly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _coerce(c)
        if c == 0:
            return Poly.zero(self.n)
        return Poly._raw(self.n, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono, c=1):
        return Poly._raw(self.n, {mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ModuleElement):
            return NotImplemented
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                _add_into(out, mono_mul(ma, mb), ca * cb)
        return Poly._raw(self.n, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        if isinstance(c, Poly):
            if not c.is_constant() or c.is_zero():
                raise TypeError("polynomials divide only by nonzero constants")
            c = c.constant_term()
        return self.scale(Fraction(1) / c)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a natural number")
        out = Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, Coefficient)):
            return self == Poly.const(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    # -- evaluation and substitution --------------------------------------
    def __call__(self, *point):
        return poly_eval(self, point)

    def substitute(self, i, value):
        """Replace variable ``i`` by the polynomial ``value``."""
        out = Poly.zero(self.n)
        powers = {}
        for m, c in self.terms.items():
            e = m[i]
            if e not in powers:
                powers[e] = value ** e
            rest = list(m)
            rest[i] = 0
            out = out + powers[e].mul_term(tuple(rest), c)
        return out

    def derivative(self, i):
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                d = list(m)
                d[i] -= 1
                _add_into(out, tuple(d), c * m[i])
        return Poly._raw(self.n, out)

    def extend(self, n_new, positions=None):
        """Embed into ``n_new`` variables; old variable k goes to ``positions[k]``."""
        positions = positions if positions is not None else range(self.n)
        terms = {}
        for m, c in self.terms.items():
            nm = [0] * n_new
            for k, p in enumerate(positions):
                nm[p] = m[k]
            terms[tuple(nm)] = c
        return Poly._raw(n_new, terms)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


class ModuleElement:
    """Element of D^q stored as ``{(component, monomial): coefficient}``."""

    __slots__ = ("q", "n", "terms", "_hash")

    def __init__(self, q, n, terms=None):
        if q < 0:
            raise DimensionMismatch("q must be >= 0")
        self.q = q
        self.n = n
        clean = {}
        for (i, m), c in (terms or {}).items():
            if not 0 <= i < q or len(m) != n:
                raise DimensionMismatch(f"term {(i, m)} outside D^{q} in {n} variables")
            c = _coerce(c)
            if c != 0:
                clean[(i, tuple(m))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, q, n, terms):
        self = object.__new__(cls)
        self.q = q
        self.n = n
        self.terms = terms
        self._hash = None
        return self

    @classmethod
    def from_polys(cls, polys, n=None):
        polys = list(polys)
        if n is None:
            if not polys:
                raise DimensionMismatch("cannot infer n from an empty vector")
            n = polys[0].n
        terms = {}
        for i, p in enumerate(polys):
            if p.n != n:
                raise DimensionMismatch("components must share the ambient n")
            for m, c in p.terms.items():
                terms[(i, m)] = c
        return cls._raw(len(polys), n, terms)

    @classmethod
    def zero(cls, q, n):
        return cls._raw(q, n, {})

    @classmethod
    def basis(cls, q, n, i):
        return cls._raw(q, n, {(i, (0,) * n): Fraction(1)})

    @classmethod
    def from_poly(cls, p):
        return cls._raw(1, p.n, {(0, m): c for m, c in p.terms.items()})

    def component(self, i):
        return Poly._raw(self.n, {m: c for (j, m), c in self.terms.items() if j == i})

    def components(self):
        parts = [{} for _ in range(self.q)]
        for (j, m), c in self.terms.items():
            parts[j][m] = c
        return [Poly._raw(self.n, t) for t in parts]

    def as_poly(self):
        if self.q != 1:
            raise DimensionMismatch("not an element of D^1")
        return self.component(0)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(m) for _, m in self.terms), default=-1)

    def is_rational(self):
        return all(is_rational(c) for c in self.terms.values())

    def symbols(self):
        return tuple(sorted({s for c in self.terms.values() for s in coefficient_symbols(c)}))

    def lead(self, order=GREVLEX):
        if not self.terms:
            raise ValueError("zero vector has no leading term")
        t = max(self.terms, key=order.key)
        return t, self.terms[t]

    def _check(self, other):
        if (self.q, self.n) != (other.q, other.n):
            raise DimensionMismatch(f"shape mismatch: D^{self.q} (n={self.n}) vs D^{other.q} (n={other.n})")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            _add_into(out, t, c)
        return ModuleElement._raw(self.q, self.n, out)

    def __neg__(self):
        return ModuleElement._raw(self.q, self.n, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, other):
        """Scalar or ring multiplication from the left."""
        if isinstance(other, Poly):
            if other.n != self.n:
                raise DimensionMismatch("ring mismatch")
            out = {}
            for m, c in other.terms.items():
                for (i, mm), v in self.terms.items():
                    _add_into(out, (i, mono_mul(m, mm)), c * v)
            return ModuleElement._raw(self.q, self.n, out)
        other = _coerce(other)
        if other == 0:
            return ModuleElement.zero(self.q, self.n)
        return ModuleElement._raw(self.q, self.n, {t: c * other for t, c in self.terms.items()})

    def scale(self, c):
        return c * self

    def mul_term(self, mono, c=1):
        return ModuleElement._raw(self.q, self.n,
                                  {(i, mono_mul(m, mono)): v * c for (i, m), v in self.terms.items()})

    def dot(self, other):
        """Sum of componentwise products with a length-q sequence of Polys."""
        out = Poly.zero(self.n)
        for i, p in enumerate(self.components()):
            if p:
                out = out + p * other[i]
        return out

    def eval(self, point):
        return tuple(poly_eval(p, point) for p in self.components())

    def __eq__(self, other):
        if isinstance(other, ModuleElement):
            return (self.q, self.n) == (other.q, other.n) and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.q, self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"ModuleElement({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def as_element(x, q=None):
    """Coerce a Poly (viewed in D^1) or ModuleElement to ModuleElement."""
    if isinstance(x, ModuleElement):
        return x
    if isinstance(x, Poly):
        return ModuleElement.from_poly(x)
    raise TypeError(f"expected Poly or ModuleElement, got {type(x).__name__}")


def _check_point(L, a):
    if len(a) != L.n:
        raise DimensionMismatch(f"point of length {len(a)} for a polynomial in {L.n} variables")


def poly_eval(L, a):
    """Exact value L(a_1, ..., a_n)."""
    _check_point(L, a)
    a = [_coerce(x) for x in a]
    total = Fraction(0)
    powers = [dict() for _ in a]
    for m, c in L.terms.items():
        v = c
        for j, e in enumerate(m):
            if e:
                p = powers[j].get(e)
                if p is None:
                    p = a[j] ** e
                    powers[j][e] = p
                v = v * p
        total = total + v
    return total


def poly_shift(L, a):
    """The polynomial L(D_1 + a_1, ..., D_n + a_n), fully expanded."""
    _check_point(L, a)
    a = [_coerce(x) for x in a]
    if all(x == 0 for x in a):
        return L
    out = {}
    for m, c in L.terms.items():
        ranges = [range(e + 1) for e in m]
        for k in itertools.product(*ranges):
            v = c
            for j, (e, kj) in enumerate(zip(m, k)):
                if kj < e:
                    if a[j] == 0:
                        v = 0
                        break
                    v = v * comb(e, kj) * a[j] ** (e - kj)
            if v != 0:
                _add_into(out, k, v)
    return Poly._raw(L.n, out)


def default_names(n):
    return [f"D{i + 1}" for i in range(n)]


def _format_mono(m, names):
    parts = []
    for x, e in zip(names, m):
        if e == 1:
            parts.append(x)
        elif e > 1:
            parts.append(f"{x}^{e}")
    return "*".join(parts)


def format_poly(p, names=None, order=GREVLEX):
    """Canonical text; terms descending under ``order``."""
    names = names or default_names(p.n)
    if not p.terms:
        return "0"
    pieces = []
    for m in sorted(p.terms, key=order.mono_key, reverse=True):
        c = p.terms[m]
        mono = _format_mono(m, names)
        if isinstance(c, Coefficient):
            ctext = format_coefficient(c)
            body = f"({ctext})" if not mono else f"({ctext})*{mono}"
            pieces.append(("+", body))
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        atext = format_coefficient(a)
        if not mono:
            body = atext
        elif a == 1:
            body = mono
        elif a.denominator == 1:
            body = f"{atext}*{mono}"
        else:
            body = f"({atext})*{mono}"
        pieces.append((sign, body))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def format_element(v, names=None):
    return "[" + ", ".join(format_poly(p, names) for p in v.components()) + "]"
