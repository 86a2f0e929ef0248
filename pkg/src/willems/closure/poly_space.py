"""Closures for spaces with polynomial coefficients, the membership oracle, controllability."""
from dataclasses import dataclass, field

from ..decomp.primary import associated_primes, canonical_key, closure_by_saturation, verify_decomposition
from ..decomp.torsion import torsion_closure
from ..errors import DecompositionUnsupported
from ..groebner import Ideal, Submodule, quotient
from ..points import SearchBounds, find_point
from .report import NO_HINTS, ClosureReport, LedgerEntry, SignalSpaceKind


def primes_of(M, seed=0, hints=NO_HINTS):
    """Associated primes of D^q/M, falling back to a verified hint decomposition.

    Returns (primes, assumed) where ``assumed`` is True when some hinted
    component could not be fully verified.
    """
    try:
        return associated_primes(M, seed).primes, False
    except DecompositionUnsupported:
        if not hints.decomposition:
            raise
    comps = verify_decomposition(M, hints.decomposition, seed)
    primes = {canonical_key(c.prime): c.prime for c in comps}
    return [primes[k] for k in sorted(primes)], any(c.status == "assumed" for c in comps)


@dataclass
class PrimeStatus:
    prime: Ideal
    status: str  # good | bad | unknown
    certificate: str
    point: tuple | None = None
    inherited_from: Ideal | None = None


def classify_primes(primes, ring, bounds, hints=NO_HINTS, strict=False):
    """Good (has a ring point), bad (certified none) or unknown, with inclusion propagation.

    A prime below a good prime is good; a prime above a bad prime is bad.
    In non-strict mode a fruitless bounded search counts as bad.
    """
    out = []
    for p in primes:
        s = find_point(p, ring, bounds, hints.points_for(p.n))
        if s.point is not None:
            out.append(PrimeStatus(p, "good", s.certificate, s.point))
        elif s.certified_empty:
            out.append(PrimeStatus(p, "bad", s.certificate))
        else:
            out.append(PrimeStatus(p, "unknown", s.certificate))
    changed = True
    while changed:
        changed = False
        for a in out:
            if a.status != "unknown":
                continue
            for b in out:
                if b.status == "good" and a.prime.issubset(b.prime):
                    a.status, a.certificate, a.inherited_from = "good", "contains-good-prime", b.prime
                    a.point = b.point
                    changed = True
                    break
                if b.status == "bad" and b.prime.issubset(a.prime):
                    a.status, a.certificate, a.inherited_from = "bad", "above-bad-prime", b.prime
                    changed = True
                    break
    if not strict:
        for a in out:
            if a.status == "unknown" and a.certificate == "bounded-search-only":
                a.status = "bad-uncertified"
    return out


def closure_poly_space(M, ring="Q", bounds=SearchBounds(), strict=False, seed=0, hints=NO_HINTS,
                       space=None):
    """M : (∏ bad primes)^∞, i.e. the intersection of the components whose variety meets ring^n.

    Works from the associated primes alone, so no primary components are built.
    """
    space = space or SignalSpaceKind("torus" if ring == "Z" else "protorus", "poly")
    primes, assumed = primes_of(M, seed, hints)
    status = classify_primes(primes, ring, bounds, hints, strict)
    bad = [s.prime for s in status if s.status in ("bad", "bad-uncertified")]
    # upward closure among the associated primes keeps the saturation formula exact
    bad += [s.prime for s in status if s.status not in ("bad", "bad-uncertified")
            and any(b.issubset(s.prime) for b in bad)]
    closure = closure_by_saturation(M, bad).reduced() if bad else M.reduced()
    report = ClosureReport(M, space, closure, method="associated-primes", bounds=bounds,
                           strict=strict, seed=seed)
    fates = {"good": "kept", "bad": "dropped", "unknown": "conditional", "bad-uncertified": "dropped"}
    for s in status:
        fate = "dropped" if s.prime in bad else fates[s.status]
        report.ledger.append(LedgerEntry(
            s.prime, fate, {"good": "HasPoint", "bad": "Empty", "unknown": "Unknown",
                            "bad-uncertified": "Empty"}[s.status],
            s.certificate, points=[s.point] if s.point is not None else [],
            note=f"inherited from {s.inherited_from}" if s.inherited_from is not None else ""))
    report.conditional = assumed or any(s.status in ("unknown", "bad-uncertified") for s in status)
    if assumed:
        report.notes.append("decomposition taken from hints without full verification")
    return report.sort_ledger()


def prop41_membership(M, x, ring="Q", bounds=SearchBounds(), strict=False, hints=NO_HINTS):
    """Whether x lies in the polynomial-space closure: (M : x) has no zero in ring^n.

    Returns True, False, or None when undecided in strict mode.  Non-strict
    mode accepts a fruitless bounded search as absence of zeros.
    """
    J = quotient(M, x)
    if J.is_unit():
        return True
    s = find_point(J, ring, bounds, hints.points_for(M.n))
    if s.point is not None:
        return False
    if s.certified_empty:
        return True
    return None if strict else True


@dataclass
class ControllabilityVerdict:
    verdict: str  # Controllable | NotControllable | Conditional
    torsion_closure: Submodule
    image_matrix: list = field(default_factory=list)
    witness_prime: Ideal | None = None
    witness_point: tuple | None = None
    ledger: list = field(default_factory=list)
    closure: Submodule | None = None
    notes: list = field(default_factory=list)


def is_controllable(M, space=SignalSpaceKind("protorus", "poly"), bounds=SearchBounds(), strict=False,
                    seed=0, hints=NO_HINTS):
    """Decide whether the behavior of M has an image representation.

    Equivalent to: no nonzero associated prime of D^q/M has a point in the ring.
    """
    if isinstance(space, str):
        space = SignalSpaceKind.parse(space)
    if space.flavor != "poly":
        raise ValueError("controllability is decided for the polynomial-coefficient flavors")
    tc = torsion_closure(M)
    primes, assumed = primes_of(M, seed, hints)
    nonzero = [p for p in primes if not p.is_zero()]
    status = classify_primes(nonzero, space.ring, bounds, hints, strict)
    ledger = [LedgerEntry(s.prime, {"good": "witness", "bad": "empty"}.get(s.status, "conditional"),
                          s.status, s.certificate, points=[s.point] if s.point is not None else [])
              for s in status]
    good = [s for s in status if s.status == "good"]
    if good:
        w = min(good, key=lambda s: canonical_key(s.prime))
        return ControllabilityVerdict("NotControllable", tc.M1, [], w.prime, w.point, ledger)
    if assumed or any(s.status != "bad" for s in status):
        return ControllabilityVerdict("Conditional", tc.M1, [], ledger=ledger,
                                      notes=["unresolved point questions or assumed decomposition"])
    closure = closure_by_saturation(M, nonzero).reduced()
    out = ControllabilityVerdict("Controllable", tc.M1, list(tc.L), ledger=ledger, closure=closure)
    if not closure.equals(tc.M1):
        out.notes.append("closure differs from the torsion closure")
    return out
