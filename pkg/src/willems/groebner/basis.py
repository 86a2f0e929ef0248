"""Buchberger's algorithm for submodules of D^q.

Vectors are handled internally as ``{(component, monomial): coefficient}``
dicts.  Pairs are processed by the normal strategy (smallest lcm degree
first) with the coprimality criterion (ideals only) and the chain
criterion.
"""
import heapq
import threading
from dataclasses import dataclass
from fractions import Fraction

from ..core.order import GREVLEX
from ..core.poly import (ModuleElement, Poly, as_element, format_element, format_poly,
                         mono_div, mono_divides, mono_lcm, mono_mul)
from ..errors import DegreeBoundExceeded, DimensionMismatch


@dataclass(frozen=True)
class Caps:
    """Hard resource limits for one Buchberger run."""

    max_basis: int = 4000
    max_degree: int = 96


DEFAULT_CAPS = Caps()

_audit_lock = threading.Lock()
_audit = None


def audit_start():
    """Begin recording every basis computed (used by the criterion audit)."""
    global _audit
    with _audit_lock:
        _audit = {}


def audit_stop():
    global _audit
    with _audit_lock:
        _audit = None


def audited_bases():
    with _audit_lock:
        return list(_audit.values()) if _audit is not None else []


def _record(basis, order, q):
    if _audit is None:
        return
    key = (order, q, frozenset(frozenset(g.items()) for g in basis))
    with _audit_lock:
        if _audit is not None and key not in _audit:
            _audit[key] = (order, q, [dict(g) for g in basis])


def _lead(f, key):
    return max(f, key=key)


def _axpy(f, g, mono, c):
    """f -= c * mono * g, in place."""
    for (i, m), v in g.items():
        t = (i, mono_mul(m, mono))
        w = f.get(t)
        w = -c * v if w is None else w - c * v
        if w == 0:
            f.pop(t, None)
        else:
            f[t] = w


def reduce_vector(f, basis, leads, order, full=True):
    """Normal form of ``f`` (dict) modulo ``basis`` (monic dicts with given leads)."""
    key = order.key
    f = dict(f)
    r = {}
    while f:
        t = _lead(f, key)
        c = f[t]
        ti, tm = t
        for g, (gi, gm) in zip(basis, leads):
            if gi == ti and mono_divides(gm, tm):
                _axpy(f, g, mono_div(tm, gm), c / g[(gi, gm)])
                break
        else:
            if not full:
                r.update(f)
                return r
            r[t] = c
            del f[t]
    return r


def _monic(f, t):
    c = f[t]
    if c == 1:
        return f
    inv = 1 / c
    return {k: v * inv for k, v in f.items()}


def _svector(f, tf, g, tg):
    lcm = mono_lcm(tf[1], tg[1])
    s = {(i, mono_mul(m, mono_div(lcm, tf[1]))): v for (i, m), v in f.items()}
    _axpy(s, g, mono_div(lcm, tg[1]), Fraction(1))
    return s


def buchberger_raw(vectors, order, q, caps=DEFAULT_CAPS):
    """Reduced Gröbner basis (list of monic dicts, ascending leads)."""
    key = order.key
    G, leads = [], []
    pending = set()
    heap = []
    ideal_case = q == 1

    def add(h):
        t = _lead(h, key)
        h = _monic(h, t)
        k = len(G)
        G.append(h)
        leads.append(t)
        if len(G) > caps.max_basis:
            raise DegreeBoundExceeded(f"basis size exceeded cap {caps.max_basis}")
        for j in range(k):
            tj = leads[j]
            if tj[0] != t[0]:
                continue
            lcm = mono_lcm(tj[1], t[1])
            if ideal_case and all(a == 0 or b == 0 for a, b in zip(tj[1], t[1])):
                continue
            pending.add((j, k))
            heapq.heappush(heap, (sum(lcm), key((t[0], lcm)), j, k))

    for v in vectors:
        v = reduce_vector(v, G, leads, order) if G else dict(v)
        if v:
            add(v)

    while heap:
        deg, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        if deg > caps.max_degree:
            raise DegreeBoundExceeded(f"S-pair degree {deg} exceeds cap {caps.max_degree}")
        ti, tj = leads[i], leads[j]
        lcm = mono_lcm(ti[1], tj[1])
        chain = False
        for l, tl in enumerate(leads):
            if l in (i, j) or tl[0] != ti[0] or not mono_divides(tl[1], lcm):
                continue
            if (min(i, l), max(i, l)) not in pending and (min(j, l), max(j, l)) not in pending:
                chain = True
                break
        if chain:
            continue
        s = _svector(G[i], ti, G[j], tj)
        s = reduce_vector(s, G, leads, order)
        if s:
            add(s)

    out = _interreduce(G, leads, order)
    _record(out, order, q)
    return out


def _interreduce(G, leads, order):
    key = order.key
    idx = sorted(range(len(G)), key=lambda k: key(leads[k]))
    keep = []
    for k in idx:
        tk = leads[k]
        if any(leads[j][0] == tk[0] and mono_divides(leads[j][1], tk[1]) for j in keep):
            continue
        keep.append(k)
    basis = [G[k] for k in keep]
    bleads = [leads[k] for k in keep]
    out = []
    for pos, (g, t) in enumerate(zip(basis, bleads)):
        others = basis[:pos] + basis[pos + 1:]
        oleads = bleads[:pos] + bleads[pos + 1:]
        tail = {k: v for k, v in g.items() if k != t}
        red = reduce_vector(tail, others, oleads, order)
        red[t] = g[t]
        out.append(_monic(red, t))
    return out


def is_groebner_raw(basis, order):
    """Buchberger criterion: every S-vector of same-component pairs reduces to 0."""
    leads = [_lead(g, order.key) for g in basis]
    monic = [_monic(g, t) for g, t in zip(basis, leads)]
    for i in range(len(monic)):
        for j in range(i + 1, len(monic)):
            if leads[i][0] != leads[j][0]:
                continue
            s = _svector(monic[i], leads[i], monic[j], leads[j])
            if reduce_vector(s, monic, leads, order):
                return False
    return True


class Submodule:
    """Finitely generated submodule of D^q with cached Gröbner bases.

    Bases are computed at most once per term order; concurrent readers see
    either nothing or the finished basis.
    """

    def __init__(self, gens, q=None, n=None):
        gens = [as_element(g) for g in gens]
        if gens:
            q = gens[0].q if q is None else q
            n = gens[0].n if n is None else n
        if q is None or n is None:
            raise DimensionMismatch("q and n are required for an empty generator list")
        for g in gens:
            if (g.q, g.n) != (q, n):
                raise DimensionMismatch(f"generator {g} is not in D^{q} with n={n}")
        self.q = q
        self.n = n
        self.gens = tuple(g for g in gens if g)
        self._gb = {}
        self._lock = threading.Lock()

    # -- Gröbner data ------------------------------------------------------
    def groebner(self, order=GREVLEX, caps=DEFAULT_CAPS):
        gb = self._gb.get(order)
        if gb is not None:
            return gb
        raw = buchberger_raw([g.terms for g in self.gens], order, self.q, caps)
        gb = tuple(ModuleElement._raw(self.q, self.n, g) for g in raw)
        with self._lock:
            return self._gb.setdefault(order, gb)

    def leads(self, order=GREVLEX):
        return [g.lead(order)[0] for g in self.groebner(order)]

    def normal_form(self, f, order=GREVLEX):
        f = as_element(f)
        if (f.q, f.n) != (self.q, self.n):
            raise DimensionMismatch(f"element of D^{f.q} (n={f.n}) vs submodule of D^{self.q} (n={self.n})")
        gb = self.groebner(order)
        leads = [g.lead(order)[0] for g in gb]
        r = reduce_vector(f.terms, [g.terms for g in gb], leads, order)
        return ModuleElement._raw(self.q, self.n, r)

    def contains(self, f, order=GREVLEX):
        return self.normal_form(f, order).is_zero()

    __contains__ = contains

    # -- comparisons -------------------------------------------------------
    def is_zero(self):
        return not self.gens

    def is_full(self):
        """True iff the submodule is all of D^q."""
        if self.q == 0:
            return True
        zero = (0,) * self.n
        leads = set(self.leads())
        return all((i, zero) in leads for i in range(self.q))

    def issubset(self, other):
        self._check(other)
        return all(other.contains(g) for g in self.gens)

    def equals(self, other):
        self._check(other)
        return self.groebner() == other.groebner()

    def _check(self, other):
        if (self.q, self.n) != (other.q, other.n):
            raise DimensionMismatch(f"D^{self.q} (n={self.n}) vs D^{other.q} (n={other.n})")

    def __add__(self, other):
        self._check(other)
        return type(self)._wrap(Submodule(self.gens + other.gens, self.q, self.n))

    @classmethod
    def _wrap(cls, s):
        return s

    def reduced(self):
        """Same submodule, generated by its reduced grevlex basis."""
        return type(self)._wrap(Submodule(self.groebner(), self.q, self.n))

    def symbols(self):
        return tuple(sorted({s for g in self.gens for s in g.symbols()}))

    def is_rational(self):
        return all(g.is_rational() for g in self.gens)

    def max_degree(self):
        return max((g.degree() for g in self.gens), default=-1)

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(format_element(g) for g in self.gens)})"

    def __str__(self):
        return "<" + ", ".join(format_element(g) for g in self.gens) + ">"


class Ideal(Submodule):
    """Submodule of D^1, with polynomial-level accessors."""

    def __init__(self, gens, n=None):
        gens = [ModuleElement.from_poly(g) if isinstance(g, Poly) else g for g in gens]
        if n is None and not gens:
            raise DimensionMismatch("n is required for the zero ideal")
        super().__init__(gens, 1, n)

    @classmethod
    def _wrap(cls, s):
        if isinstance(s, Ideal):
            return s
        if s.q != 1:
            raise DimensionMismatch("not an ideal")
        out = Ideal.__new__(Ideal)
        out.q, out.n, out.gens = 1, s.n, s.gens
        out._gb = dict(s._gb)
        out._lock = threading.Lock()
        return out

    @classmethod
    def unit(cls, n):
        return cls([Poly.one(n)], n)

    @classmethod
    def zero(cls, n):
        return cls([], n)

    def polys(self):
        return [g.component(0) for g in self.gens]

    def groebner_polys(self, order=GREVLEX):
        return [g.component(0) for g in self.groebner(order)]

    def is_unit(self):
        return self.is_full()

    def is_monomial(self):
        return all(len(g.terms) == 1 for g in self.gens)

    def is_linear(self):
        return all(g.degree() <= 1 for g in self.gens)

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_poly(p) for p in self.polys()) + ")"

    def __repr__(self):
        return f"Ideal({', '.join(format_poly(p) for p in self.polys())})"


def as_ideal(x, n=None):
    if isinstance(x, Ideal):
        return x
    if isinstance(x, Submodule):
        return Ideal._wrap(x)
    return Ideal(list(x), n)
