"""Closures for the smooth and finite-support spaces (exponential signals only).

Each primary component Q with prime p is replaced by Q + p D^q; the rational
(or integral) points of V(p) then decide whether it is closed, whether it
disappears, or whether it must be enlarged by the ideal of a smaller
subvariety containing all ring points, in which case we decompose again.
"""
from ..core.linalg import nullspace
from ..core.poly import ModuleElement, poly_eval
from ..decomp.primary import (PrimaryComponent, associated_primes, canonical_key, primary_decomposition,
                              verify_decomposition)
from ..errors import DecompositionUnsupported, NonTermination
from ..groebner import Ideal, Submodule, ideal_times_free, intersect_all, module_sum
from ..points import SearchBounds, density_verdict
from .report import NO_HINTS, ClosureReport, LedgerEntry, SignalSpaceKind

DEFAULT_DEPTH_CAP = 8


def _full(q, n):
    return Submodule([ModuleElement.basis(q, n, i) for i in range(q)], q, n)


def _decompose(M, seed, hints):
    """Primary components of M (hint decompositions are verified before use)."""
    try:
        return primary_decomposition(M, seed).components, False
    except DecompositionUnsupported:
        if not hints.decomposition:
            raise
    comps = verify_decomposition(M, hints.decomposition, seed)
    return comps, any(c.status == "assumed" for c in comps)


class _Run:
    def __init__(self, ring, bounds, strict, seed, hints, depth_cap):
        self.ring, self.bounds, self.strict = ring, bounds, strict
        self.seed, self.hints, self.depth_cap = seed, hints, depth_cap
        self.ledger = []
        self.conditional = False
        self.points = []
        self._verdicts = {}

    def verdict(self, p):
        key = canonical_key(p)
        if key not in self._verdicts:
            self._verdicts[key] = density_verdict(p, self.ring, self.bounds, self.hints.points_for(p.n))
        return self._verdicts[key]

    def module(self, M, depth):
        if M.is_full():
            return M
        comps, assumed = _decompose(M, self.seed, self.hints)
        self.conditional |= assumed
        results = [self.component(c, depth) for c in comps]
        return intersect_all(results) if results else _full(M.q, M.n)

    def component(self, c: PrimaryComponent, depth):
        if depth > self.depth_cap:
            raise NonTermination(f"closure loop exceeded depth {self.depth_cap}")
        Q, p = c.component, c.prime
        q, n = Q.q, Q.n
        Q1 = module_sum(Q, ideal_times_free(p, q)).reduced()
        entry = LedgerEntry(p, "", component=Q, depth=depth)
        self.ledger.append(entry)
        ass = associated_primes(Q1, self.seed).primes if not Q1.is_full() else []
        if [canonical_key(P) for P in ass] != [canonical_key(p)]:
            # Q + pD^q acquired embedded primes: process its own components
            entry.fate, entry.note = "redecomposed", "Q + pD^q is not p-primary"
            entry.result = self.module(Q1, depth + 1)
            return entry.result
        v = self.verdict(p)
        kind = v.effective(self.strict)
        entry.verdict, entry.certificate, entry.points = kind, v.certificate, list(v.points)
        self.points += v.points
        if kind == "Dense":
            entry.fate, entry.result = "closed", Q1
        elif kind == "Empty":
            entry.fate, entry.result = "dropped", _full(q, n)
            if not v.certified:
                self.conditional = True
                entry.note = "emptiness from bounded search only"
        elif kind == "ProperClosure":
            entry.fate = "enlarged"
            entry.note = f"points lie on V{v.ideal}"
            entry.result = self.module(module_sum(Q1, ideal_times_free(v.ideal, q)).reduced(), depth + 1)
        else:
            entry.fate, entry.result = "conditional", Q1
            self.conditional = True
        return entry.result


def closure_fin_space(M, ring="Q", bounds=SearchBounds(), strict=False, seed=0, hints=NO_HINTS,
                      depth_cap=DEFAULT_DEPTH_CAP, space=None, cross_check=True):
    space = space or SignalSpaceKind("torus" if ring == "Z" else "protorus", "fin")
    run = _Run(ring, bounds, strict, seed, hints, depth_cap)
    closure = run.module(M, 0).reduced() if not M.is_full() else M.reduced()
    report = ClosureReport(M, space, closure, run.ledger, run.conditional, "component-iteration",
                           bounds=bounds, strict=strict, seed=seed)
    if space.flavor == "smooth":
        report.notes.append("smooth closure computed through the finite-support flavor")
    if cross_check:
        report.cross_check = pointwise_check(M, closure, run.points)
        if not report.cross_check["agree"]:
            report.notes.append("pointwise oracle disagrees with the computed closure")
    return report.sort_ledger()


def pointwise_check(M, closure, points):
    """Every closure generator must kill the fiber {c : V(a) c = 0} at each found point a."""
    seen = sorted(set(tuple(a) for a in points))
    failures = []
    for a in seen:
        vals = [[poly_eval(p, a) for p in g.components()] for g in M.gens]
        kernel = nullspace([v for v in vals if any(x != 0 for x in v)], M.q)
        for g in closure.gens:
            ga = [poly_eval(p, a) for p in g.components()]
            for c in kernel:
                if sum((x * y for x, y in zip(ga, c)), 0) != 0:
                    failures.append((a, str(g)))
                    break
    return {"points": len(seen), "agree": not failures, "failures": [(str(a), g) for a, g in failures[:5]]}


def closure_fin_ideal_direct(I, ring="Q", bounds=SearchBounds(), strict=False, seed=0, hints=NO_HINTS,
                             depth_cap=DEFAULT_DEPTH_CAP):
    """Ideal of the Zariski closure of the ring points of V(I), through minimal primes only."""
    I = Ideal._wrap(I) if not isinstance(I, Ideal) else I
    if I.q != 1:
        raise ValueError("direct closure is defined for ideals")
    space = SignalSpaceKind("torus" if ring == "Z" else "protorus", "fin")
    ledger = []
    state = {"conditional": False}
    cache = {}

    def verdict(p):
        k = canonical_key(p)
        if k not in cache:
            cache[k] = density_verdict(p, ring, bounds, hints.points_for(p.n))
        return cache[k]

    def minimal_primes(J):
        if J.is_unit():
            return []
        try:
            ass = associated_primes(J, seed).primes
        except DecompositionUnsupported:
            if not hints.decomposition:
                raise
            ass = [c.prime for c in verify_decomposition(J, hints.decomposition, seed)]
            state["conditional"] = True
        return [p for p in ass if not any(P.issubset(p) and not p.issubset(P) for P in ass)]

    def walk(J, depth):
        if depth > depth_cap:
            raise NonTermination(f"closure loop exceeded depth {depth_cap}")
        kept = []
        for p in minimal_primes(J):
            v = verdict(p)
            kind = v.effective(strict)
            entry = LedgerEntry(p, "", kind, v.certificate, points=list(v.points), depth=depth)
            ledger.append(entry)
            if kind == "Dense":
                entry.fate = "kept"
                kept.append(p)
            elif kind == "Empty":
                entry.fate = "dropped"
                if not v.certified:
                    state["conditional"] = True
            elif kind == "ProperClosure":
                entry.fate = "enlarged"
                kept += walk(Ideal(list(p.gens) + list(v.ideal.gens), p.n), depth + 1)
            else:
                entry.fate = "conditional"
                state["conditional"] = True
                kept.append(p)
        return kept

    kept = walk(I.reduced(), 0)
    closure = Ideal._wrap(intersect_all(kept)).reduced() if kept else Ideal.unit(I.n)
    report = ClosureReport(I, space, closure, ledger, state["conditional"], "minimal-primes",
                           bounds=bounds, strict=strict, seed=seed)
    return report.sort_ledger()
