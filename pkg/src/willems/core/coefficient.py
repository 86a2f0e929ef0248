"""Scalars of the operator ring: Q extended by named transcendentals.

Pure rationals are plain :class:`fractions.Fraction` values.  Anything that
involves a transcendental symbol is a :class:`Coefficient`, a reduced
fraction of two polynomials with rational coefficients in those symbols.
Results that collapse to a constant are demoted back to ``Fraction`` so that
structural equality is mathematical equality.
"""
from fractions import Fraction
from functools import lru_cache

from ..errors import DivisionByZero

# A transcendental monomial is a tuple of (name, exponent) pairs sorted by name;
# a transcendental polynomial ("tpoly") is a dict tmono -> Fraction.
ONE_TMONO = ()


def _tmono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, e in b:
        d[name] = d.get(name, 0) + e
    return tuple(sorted(d.items()))


def _tpoly_add(a, b, sign=1):
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _tpoly_mul(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = _tmono_mul(ma, mb)
            v = out.get(m, 0) + ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _tpoly_scale(a, c):
    return {m: v * c for m, v in a.items()} if c else {}


def _names(*polys):
    return tuple(sorted({name for p in polys for m in p for name, _ in m}))


def _tmono_grevlex_key(m, names):
    exps = dict(m)
    vec = [exps.get(x, 0) for x in names]
    return (sum(vec), tuple(-e for e in reversed(vec)))


@lru_cache(maxsize=None)
def _sympy_ring(names):
    from sympy.polys.domains import QQ
    from sympy.polys.orderings import grevlex
    from sympy.polys.rings import ring

    R, *_ = ring(",".join(names), QQ, grevlex)
    return R


def _to_sympy(p, names):
    R = _sympy_ring(names)
    terms = {}
    for m, c in p.items():
        exps = dict(m)
        terms[tuple(exps.get(x, 0) for x in names)] = R.domain.convert(c)
    return R.from_dict(terms) if terms else R.zero


def _from_sympy(p, names):
    out = {}
    for exps, c in p.terms():
        m = tuple((x, e) for x, e in zip(names, exps) if e)
        out[m] = Fraction(int(c.numerator), int(c.denominator))
    return out


def _canonical(num, den):
    """Reduce num/den and make den monic under grevlex on the symbols."""
    if not den:
        raise DivisionByZero("transcendental denominator is zero")
    if not num:
        return Fraction(0)
    if len(den) == 1 and ONE_TMONO in den:
        c = den[ONE_TMONO]
        if c != 1:
            num = _tpoly_scale(num, 1 / c)
        den = {ONE_TMONO: Fraction(1)}
    else:
        names = _names(num, den)
        sn, sd = _to_sympy(num, names), _to_sympy(den, names)
        g = sn.gcd(sd)
        if g != 1:
            sn, sd = sn.exquo(g), sd.exquo(g)
        num, den = _from_sympy(sn, names), _from_sympy(sd, names)
        names = _names(den)
        lead = max(den, key=lambda m: _tmono_grevlex_key(m, names))
        lc = den[lead]
        if lc != 1:
            num = _tpoly_scale(num, 1 / lc)
            den = _tpoly_scale(den, 1 / lc)
    if len(den) == 1 and ONE_TMONO in den and set(num) <= {ONE_TMONO}:
        return Fraction(num.get(ONE_TMONO, 0))
    return Coefficient._raw(num, den)


def _as_tpoly(x):
    if isinstance(x, Coefficient):
        return x.num, x.den
    if isinstance(x, (int, Fraction)):
        return ({ONE_TMONO: Fraction(x)} if x else {}), {ONE_TMONO: Fraction(1)}
    return None


class Coefficient:
    """Element of Q(t_1, ..., t_k) for declared transcendental symbols t_i."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        raise TypeError("use transcendental() or make_coefficient()")

    @classmethod
    def _raw(cls, num, den):
        self = object.__new__(cls)
        self.num = num
        self.den = den
        self._hash = None
        return self

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = _as_tpoly(other)
        if o is None:
            return NotImplemented
        on, od = o
        if self.den == od:
            return _canonical(_tpoly_add(self.num, on), od)
        num = _tpoly_add(_tpoly_mul(self.num, od), _tpoly_mul(on, self.den))
        return _canonical(num, _tpoly_mul(self.den, od))

    __radd__ = __add__

    def __neg__(self):
        return Coefficient._raw(_tpoly_scale(self.num, -1), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _as_tpoly(other)
        if o is None:
            return NotImplemented
        return self + Coefficient._raw(_tpoly_scale(o[0], -1), o[1]) if o[0] else self

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _as_tpoly(other)
        if o is None:
            return NotImplemented
        on, od = o
        if not on:
            return Fraction(0)
        if _is_one(self.den) and _is_one(od):
            return _canonical(_tpoly_mul(self.num, on), od)
        return _canonical(_tpoly_mul(self.num, on), _tpoly_mul(self.den, od))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_tpoly(other)
        if o is None:
            return NotImplemented
        on, od = o
        if not on:
            raise DivisionByZero("division by zero coefficient")
        return _canonical(_tpoly_mul(self.num, od), _tpoly_mul(self.den, on))

    def __rtruediv__(self, other):
        o = _as_tpoly(other)
        if o is None:
            return NotImplemented
        return _canonical(_tpoly_mul(o[0], self.den), _tpoly_mul(o[1], self.num))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return Fraction(1) / (self ** (-k))
        out = Fraction(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Coefficient):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def __bool__(self):
        return True

    # -- inspection -------------------------------------------------------
    @property
    def symbols(self):
        return _names(self.num, self.den)

    def is_polynomial(self):
        return _is_one(self.den)

    def __repr__(self):
        return f"Coefficient({format_coefficient(self)!r})"

    def __str__(self):
        return format_coefficient(self)


def _is_one(p):
    return len(p) == 1 and p.get(ONE_TMONO) == 1


def transcendental(name):
    """The coefficient consisting of the bare symbol ``name``."""
    return Coefficient._raw({((name, 1),): Fraction(1)}, {ONE_TMONO: Fraction(1)})


def make_coefficient(num, den=None):
    """Build a canonical scalar from tpoly dicts (``den`` defaults to 1)."""
    num = {m: Fraction(c) for m, c in num.items() if c}
    den = {ONE_TMONO: Fraction(1)} if den is None else {m: Fraction(c) for m, c in den.items() if c}
    return _canonical(num, den)


def is_rational(c):
    return isinstance(c, (int, Fraction))


def coefficient_symbols(c):
    return c.symbols if isinstance(c, Coefficient) else ()


def as_tpolys(c):
    """(numerator, denominator) of ``c`` as tpoly dicts."""
    return _as_tpoly(c)


def coef_arith(a, b, op):
    """Exact field arithmetic; ``op`` is one of ``+ - * /`` (``÷`` and ``×`` accepted)."""
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        if b == 0:
            raise DivisionByZero("division by zero")
        return Fraction(a) / b if isinstance(a, int) else a / b
    raise ValueError(f"unknown operator {op!r}")


def format_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_tpoly(p):
    if not p:
        return "0"
    names = _names(p)
    ordered = sorted(p, key=lambda m: _tmono_grevlex_key(m, names), reverse=True)
    out = []
    for m in ordered:
        c = p[m]
        mono = "*".join(x if e == 1 else f"{x}^{e}" for x, e in m)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def format_coefficient(c):
    if not isinstance(c, Coefficient):
        return format_rational(c)
    num = format_tpoly(c.num)
    if _is_one(c.den):
        return num
    return f"({num})/({format_tpoly(c.den)})"
