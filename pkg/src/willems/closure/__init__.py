"""Willems closures for the six signal spaces, membership and controllability."""
from ..groebner import Submodule
from ..points import SearchBounds
from .finite import DEFAULT_DEPTH_CAP, closure_fin_ideal_direct, closure_fin_space, pointwise_check
from .one_dim import TorsionSpectrum1D, closure_1d, torsion_spectrum
from .poly_space import (ControllabilityVerdict, PrimeStatus, classify_primes, closure_poly_space,
                         is_controllable, primes_of, prop41_membership)
from .report import (ALL_SPACES, NO_HINTS, ClosureReport, Hints, LedgerEntry, SignalSpaceKind)


def willems_closure(M: Submodule, space, bounds=SearchBounds(), strict=False, seed=0, hints=NO_HINTS,
                    depth_cap=DEFAULT_DEPTH_CAP, prefer_1d=True) -> ClosureReport:
    """Closure of M for the given signal space, choosing the matching algorithm."""
    if isinstance(space, str):
        space = SignalSpaceKind.parse(space)
    if prefer_1d and M.n == 1 and M.is_rational():
        return closure_1d(M, space, strict)
    if space.computation == "poly":
        return closure_poly_space(M, space.ring, bounds, strict, seed, hints, space)
    return closure_fin_space(M, space.ring, bounds, strict, seed, hints, depth_cap, space)


__all__ = [
    "ALL_SPACES", "ClosureReport", "ControllabilityVerdict", "DEFAULT_DEPTH_CAP", "Hints",
    "LedgerEntry", "NO_HINTS", "PrimeStatus", "SignalSpaceKind", "TorsionSpectrum1D",
    "classify_primes", "closure_1d", "closure_fin_ideal_direct", "closure_fin_space",
    "closure_poly_space", "is_controllable", "pointwise_check", "primes_of", "prop41_membership",
    "torsion_spectrum", "willems_closure",
]
