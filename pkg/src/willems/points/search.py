"""Rational and integral points: enumeration, vanishing ideals, density verdicts."""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from ..core.linalg import Echelon, nullspace
from ..core.poly import Poly
from ..errors import EmptyPointSet
from ..groebner import (Ideal, as_ideal, eliminate, is_zero_dimensional, monomials_up_to,
                        truncation_basis)
from . import kernels
from .linear import solve_linear

DEFAULT_BUDGET = 20_000_000


@dataclass(frozen=True)
class SearchBounds:
    """Search box: numerators |p| <= height, denominators <= denominator.

    ``degree`` is the interpolation degree (None: max(2, generator degree + 1)).
    ``budget`` caps the number of grid points scanned.
    """

    height: int = 32
    denominator: int = 12
    degree: int | None = None
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.height < 1 or self.denominator < 1 or (self.degree is not None and self.degree < 1):
            raise ValueError("search bounds must be positive")

    def degree_for(self, I):
        if self.degree is not None:
            return self.degree
        return max(2, max((p.degree() for p in as_ideal(I).polys()), default=1) + 1)

    def as_dict(self):
        return {"height": self.height, "denominator": self.denominator,
                "degree": self.degree, "budget": self.budget}


class RationalPoint(tuple):
    """Exact point with Fraction coordinates."""

    def __new__(cls, coords):
        return super().__new__(cls, tuple(Fraction(c) for c in coords))

    @property
    def integral(self):
        return all(c.denominator == 1 for c in self)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self) + ")"


@dataclass
class PointSet:
    points: list
    complete: bool = False
    bounds: SearchBounds | None = None
    truncated: bool = False
    effective_height: int | None = None


def grid_values(ring, height, denominator):
    """Sorted distinct coordinates: integers in [-H, H], or p/q with q <= N, |p| <= H."""
    if ring == "Z":
        return [Fraction(k) for k in range(-height, height + 1)]
    vals = {Fraction(p, q) for q in range(1, denominator + 1) for p in range(-height, height + 1)}
    return sorted(vals)


def _height(x):
    return max(abs(x.numerator), x.denominator)


def rational_part(I):
    """Rational ideal with the same rational points (transcendental splitting if needed)."""
    I = as_ideal(I).reduced()
    if I.is_rational():
        return I
    from ..decomp.torsion import rationalize_ideal

    return rationalize_ideal(I).reduced()


def enumerate_points(I, bounds=SearchBounds(), ring="Q", backend=None, chunk=kernels.CHUNK):
    """All points of V(I) on the search grid, lexicographically sorted."""
    I = rational_part(I)
    n = I.n
    if I.is_unit():
        return PointSet([], False, bounds)
    vals = grid_values(ring, bounds.height, bounds.denominator)
    truncated = False
    eff = bounds.height
    if len(vals) ** n > bounds.budget:
        truncated = True
        limit = int(bounds.budget ** (1.0 / n))
        while (limit + 1) ** n <= bounds.budget:
            limit += 1
        while limit ** n > bounds.budget:
            limit -= 1
        hs = sorted({_height(v) for v in vals})
        keep = hs[0]
        for h in hs:
            if sum(1 for v in vals if _height(v) <= h) <= limit:
                keep = h
        vals = [v for v in vals if _height(v) <= keep]
        eff = keep
    polys = I.polys()
    if not polys:
        pts = [RationalPoint(p) for p in itertools.product(vals, repeat=n)]
        return PointSet(pts, False, bounds, truncated, eff)
    exps, coefs, offsets = kernels.compile_system(polys, n)
    maxdeg = max(p.degree() for p in polys)
    tab = kernels.power_table(vals, max(maxdeg, 1))
    hits = kernels.scan(exps, coefs, offsets, tab, n, len(vals), chunk=chunk, backend=backend)
    out = []
    for idx in hits:
        pt = tuple(vals[d] for d in kernels.decode(int(idx), n, len(vals)))
        if all(p(*pt) == 0 for p in polys):
            out.append(RationalPoint(pt))
    return PointSet(out, False, bounds, truncated, eff)


def solve_rational_zero_dim(I):
    """Complete set of rational points of a zero-dimensional ideal."""
    from ..decomp.zerodim import rational_points_zero_dim

    I = as_ideal(I)
    if I.is_unit():
        return PointSet([], True)
    pts = sorted(RationalPoint(x) for x in rational_points_zero_dim(I))
    return PointSet(pts, True)


def expand_parametrization(coords, ranges):
    """Points of a rational parametrization over integer parameter ranges.

    ``coords`` are n coordinate functions (callables or Polys in the
    parameters); ``ranges`` gives an inclusive (lo, hi) per parameter.
    Parameter values where a coordinate is undefined are skipped.
    """
    out = []
    for t in itertools.product(*(range(lo, hi + 1) for lo, hi in ranges)):
        try:
            out.append(RationalPoint(f(*t) for f in coords))
        except ZeroDivisionError:
            continue
    return out


def vanishing_ideal(points, d):
    """Ideal generated by all polynomials of degree <= d vanishing on the points."""
    points = [tuple(Fraction(c) for c in p) for p in points]
    if not points:
        raise EmptyPointSet("vanishing ideal of an empty point set")
    n = len(points[0])
    monos = monomials_up_to(n, d)
    rows = [[_mono_value(m, p) for m in monos] for p in points]
    kern = nullspace(rows, len(monos))
    polys = [Poly(n, {m: c for m, c in zip(monos, v) if c}) for v in kern]
    return Ideal(polys, n).reduced()


def _mono_value(m, p):
    v = Fraction(1)
    for x, e in zip(p, m):
        if e:
            v *= x ** e
    return v


def points_ideal(points):
    """Exact radical ideal of a finite point set (Buchberger–Möller, grevlex)."""
    from ..core.order import GREVLEX

    points = sorted({tuple(Fraction(c) for c in p) for p in points})
    if not points:
        raise EmptyPointSet("ideal of an empty point set")
    n = len(points[0])
    gens, leads = [], []
    ech = {}  # pivot -> (evaluation row, combination of standard monomials)
    d = 0
    while True:
        layer = [m for m in monomials_up_to(n, d) if sum(m) == d]
        layer.sort(key=GREVLEX.mono_key)
        if all(any(all(a <= b for a, b in zip(l, m)) for l in leads) for m in layer):
            break
        for m in layer:
            if any(all(a <= b for a, b in zip(l, m)) for l in leads):
                continue
            v = [_mono_value(m, p) for p in points]
            combo = {m: Fraction(1)}
            for piv in sorted(ech):
                if v[piv] != 0:
                    row, rc = ech[piv]
                    f = v[piv]
                    v = [a - f * b for a, b in zip(v, row)]
                    for k, c in rc.items():
                        combo[k] = combo.get(k, 0) - f * c
            piv = next((i for i, x in enumerate(v) if x != 0), None)
            if piv is None:
                gens.append(Poly(n, {k: c for k, c in combo.items() if c}))
                leads.append(m)
            else:
                inv = 1 / v[piv]
                row = [x * inv for x in v]
                rc = {k: c * inv for k, c in combo.items()}
                for p2, (r2, c2) in list(ech.items()):
                    if r2[piv] != 0:
                        f = r2[piv]
                        r2 = [a - f * b for a, b in zip(r2, row)]
                        c2 = dict(c2)
                        for k, c in rc.items():
                            c2[k] = c2.get(k, 0) - f * c
                        ech[p2] = (r2, c2)
                ech[piv] = (row, rc)
        d += 1
    return Ideal(gens, n).reduced()


# -- certificates ---------------------------------------------------------------
def _roots_in_ring(f, var, ring):
    from ..decomp.factor import rational_roots, to_dense

    roots = rational_roots(to_dense(f, var))
    return [r for r in roots if ring == "Q" or r.denominator == 1]


def _univariate_obstruction(I, ring, eliminants=True):
    """A univariate member of I without roots in the ring, if one is found."""
    I = as_ideal(I)
    cands = [g for g in I.groebner_polys() if len(g.variables()) == 1]
    if eliminants and I.n > 1:
        for j in range(I.n):
            cands += [g for g in eliminate(I, [k for k in range(I.n) if k != j]).groebner_polys()
                      if len(g.variables()) == 1]
    for g in cands:
        if not _roots_in_ring(g, g.variables()[0], ring):
            return g
    return None


def _linear_obstruction(I, ring):
    """Degree-one members of I with no common solution in the ring."""
    lin = [g for g in as_ideal(I).groebner_polys() if g.degree() == 1]
    if not lin:
        return None
    sol = solve_linear(Ideal(lin, I.n), ring)
    return lin if sol.is_empty else None


def _is_linear(I):
    return all(p.degree() <= 1 for p in as_ideal(I).groebner_polys())


def _family_points(sol, count):
    """Deterministic sample of a linear family: parameters in a small box."""
    k = len(sol.directions)
    if k == 0:
        return [RationalPoint(sol.particular)]
    r = 0
    pts = []
    while len(pts) < count:
        r += 1
        pts = [RationalPoint(sol.point(t)) for t in itertools.product(range(-r, r + 1), repeat=k)]
    return sorted(set(pts))


@dataclass
class DensityVerdict:
    """Outcome of the density question for V(p) ∩ ring^n.

    ``kind`` is Dense, ProperClosure, Empty or Unknown.  ``certificate``
    names the argument used; ``ideal`` is the closure ideal for
    ProperClosure.  An Empty verdict with certificate "bounded-search-only"
    is not a proof.
    """

    kind: str
    certificate: str
    ring: str
    points: list = field(default_factory=list)
    ideal: Ideal | None = None
    bounds: SearchBounds | None = None
    detail: dict = field(default_factory=dict)

    @property
    def certified(self):
        return self.kind != "Unknown" and self.certificate != "bounded-search-only"

    def effective(self, strict):
        """Kind after applying strict mode (bounded-search emptiness becomes Unknown)."""
        if strict and self.kind == "Empty" and not self.certified:
            return "Unknown"
        return self.kind


def interpolation_certificate(p, points, d):
    """Check whether the degree-<=d vanishing space of the points equals p_{<=d}.

    Points are added one at a time; stops as soon as the evaluation rank
    reaches #monomials - dim p_{<=d}.  Returns a dict with rank data and
    the verdict flag ``equal``.
    """
    n = p.n
    monos = monomials_up_to(n, d)
    _, basis = truncation_basis(p, d)
    target = len(monos) - len(basis)
    ech = Echelon(len(monos))
    used = 0
    for pt in points:
        used += 1
        ech.add([_mono_value(m, pt) for m in monos])
        if ech.rank >= target:
            break
    equal = ech.rank == target
    if equal and d < max((g.degree() for g in p.polys()), default=0):
        equal = False
    if equal:
        equal = vanishing_ideal(points[:used], d).equals(p)
    return {"degree": d, "rank": ech.rank, "target_rank": target, "monomials": len(monos),
            "points_used": used, "equal": equal}


def density_verdict(p, ring="Q", bounds=SearchBounds(), hints=(), backend=None):
    """Decide whether the ring points of V(p) are Zariski dense (see DensityVerdict)."""
    p = as_ideal(p).reduced()
    n = p.n
    if p.is_unit():
        return DensityVerdict("Empty", "unit-ideal", ring, bounds=bounds)
    if not p.is_rational():
        return _transcendental_verdict(p, ring, bounds, hints, backend)
    d = bounds.degree_for(p)
    if p.is_zero():
        pts = [RationalPoint(t) for t in itertools.product(range(0, d + 1), repeat=n)]
        cert = interpolation_certificate(p, pts, d)
        return DensityVerdict("Dense", "interpolation", ring, pts[:cert["points_used"]], None, bounds, cert)
    if _is_linear(p):
        sol = solve_linear(p, ring)
        if sol.is_empty:
            return DensityVerdict("Empty", "integer-linear" if ring == "Z" else "linear-inconsistent", ring,
                                  bounds=bounds)
        pts = _family_points(sol, len(monomials_up_to(n, d)))
        cert = interpolation_certificate(p, pts, d)
        cert["family"] = {"particular": [str(x) for x in sol.particular],
                          "directions": [[str(x) for x in v] for v in sol.directions]}
        kind = "Dense" if cert["equal"] else "Unknown"
        return DensityVerdict(kind, "linear-parametrization", ring, pts[:cert["points_used"]], None, bounds, cert)
    if is_zero_dimensional(p).zero_dimensional:
        from ..decomp.zerodim import rational_points_zero_dim

        pts = [RationalPoint(x) for x in rational_points_zero_dim(p)]
        if ring == "Z":
            pts = [x for x in pts if x.integral]
        if not pts:
            return DensityVerdict("Empty", "zero-dimensional-exhaustion", ring, bounds=bounds)
        closure = points_ideal(pts)
        if closure.equals(p):
            return DensityVerdict("Dense", "complete-point-set", ring, pts, None, bounds)
        return DensityVerdict("ProperClosure", "complete-point-set", ring, pts, closure, bounds)
    obstruction = _univariate_obstruction(p, ring)
    if obstruction is not None:
        return DensityVerdict("Empty", "univariate-isolation", ring, bounds=bounds,
                              detail={"polynomial": str(obstruction)})
    if ring == "Z":
        lin = _linear_obstruction(p, ring)
        if lin is not None:
            return DensityVerdict("Empty", "integer-linear", ring, bounds=bounds,
                                  detail={"equations": [str(g) for g in lin]})
    found = enumerate_points(p, bounds, ring, backend=backend)
    pts = list(found.points)
    gens = p.polys()
    for h in hints:
        h = RationalPoint(h)
        if len(h) == n and (ring == "Q" or h.integral) and all(g(*h) == 0 for g in gens) and h not in pts:
            pts.append(h)
    pts.sort()
    detail = {"searched": len(found.points), "truncated": found.truncated,
              "effective_height": found.effective_height}
    if not pts:
        return DensityVerdict("Empty", "bounded-search-only", ring, [], None, bounds, detail)
    cert = interpolation_certificate(p, pts, d)
    detail.update(cert)
    if cert["equal"]:
        return DensityVerdict("Dense", "interpolation", ring, pts[:cert["points_used"]], None, bounds, detail)
    return DensityVerdict("Unknown", "insufficient-points", ring, pts, None, bounds, detail)


def _transcendental_verdict(p, ring, bounds, hints, backend):
    """V(p)(Q) = V(r)(Q) for the rational splitting r ⊋ p: never dense in V(p)."""
    r = rational_part(p)
    if r.is_unit():
        return DensityVerdict("Empty", "transcendental-splitting", ring, bounds=bounds)
    if is_zero_dimensional(r).zero_dimensional:
        from ..decomp.zerodim import rational_points_zero_dim

        pts = [RationalPoint(x) for x in rational_points_zero_dim(r)]
        if ring == "Z":
            pts = [x for x in pts if x.integral]
        if not pts:
            return DensityVerdict("Empty", "zero-dimensional-exhaustion", ring, bounds=bounds,
                                  detail={"rationalized": str(r)})
        return DensityVerdict("ProperClosure", "complete-point-set", ring, pts, points_ideal(pts), bounds,
                              {"rationalized": str(r)})
    sub = density_verdict(r, ring, bounds, hints, backend)
    if sub.kind == "Empty" and sub.certified:
        return DensityVerdict("Empty", sub.certificate, ring, bounds=bounds, detail={"rationalized": str(r)})
    pts = sub.points
    return DensityVerdict("ProperClosure", "transcendental-splitting", ring, pts, r, bounds,
                          {"rationalized": str(r), "inner": sub.kind})


@dataclass
class PointSearch:
    """Whether V(I) has a point in the ring: a witness, a certified absence, or neither."""

    point: RationalPoint | None
    certified_empty: bool
    certificate: str

    @property
    def decided(self):
        return self.point is not None or self.certified_empty


def _small_point(I, radius=2, limit=4096):
    """Exact check of the integer points nearest the origin, smallest height first."""
    n = I.n
    radius = next((k for k in range(radius, -1, -1) if (2 * k + 1) ** n <= limit), -1)
    if radius < 0:
        return None
    gens = I.polys()
    box = sorted(itertools.product(range(-radius, radius + 1), repeat=n),
                 key=lambda x: (max(map(abs, x)), x))
    for x in box:
        if all(g(*x) == 0 for g in gens):
            return RationalPoint(x)
    return None


def find_point(I, ring="Q", bounds=SearchBounds(), hints=(), backend=None, decompose=True):
    I = as_ideal(I).reduced()
    if I.is_unit():
        return PointSearch(None, True, "unit-ideal")
    r = rational_part(I)
    if r.is_unit():
        return PointSearch(None, True, "transcendental-splitting")
    n = r.n
    for h in hints:
        h = RationalPoint(h)
        if len(h) == n and (ring == "Q" or h.integral) and all(g(*h) == 0 for g in r.polys()):
            return PointSearch(h, False, "hint")
    if r.is_zero():
        return PointSearch(RationalPoint([0] * n), False, "zero-ideal")
    if _is_linear(r):
        sol = solve_linear(r, ring)
        if sol.is_empty:
            return PointSearch(None, True, "integer-linear" if ring == "Z" else "linear-inconsistent")
        return PointSearch(RationalPoint(sol.particular), False, "linear")
    if is_zero_dimensional(r).zero_dimensional:
        from ..decomp.zerodim import rational_points_zero_dim

        pts = [RationalPoint(x) for x in rational_points_zero_dim(r)]
        if ring == "Z":
            pts = [x for x in pts if x.integral]
        if pts:
            return PointSearch(pts[0], False, "zero-dimensional")
        return PointSearch(None, True, "zero-dimensional-exhaustion")
    if _univariate_obstruction(r, ring) is not None:
        return PointSearch(None, True, "univariate-isolation")
    if ring == "Z" and _linear_obstruction(r, ring) is not None:
        return PointSearch(None, True, "integer-linear")
    probe = _small_point(r)
    if probe is not None:
        return PointSearch(probe, False, "small-box")
    found = enumerate_points(r, bounds, ring, backend=backend)
    if found.points:
        return PointSearch(found.points[0], False, "search")
    if decompose:
        from ..decomp.primary import ideal_candidate_primes
        from ..errors import DecompositionUnsupported

        try:
            primes = ideal_candidate_primes(r)
        except DecompositionUnsupported:
            primes = None
        if primes is not None and not (len(primes) == 1 and primes[0].equals(r)):
            subs = [find_point(P, ring, bounds, (), backend, decompose=False) for P in primes]
            if all(s.certified_empty for s in subs):
                return PointSearch(None, True, "all-components-empty")
            hit = next((s for s in subs if s.point is not None), None)
            if hit is not None:
                return hit
    return PointSearch(None, False, "bounded-search-only")

