"""Willems closures of systems of constant-coefficient PDEs on tori and protori.

Subpackages: ``core`` (scalars, polynomials, module elements), ``groebner``,
``decomp`` (factoring, primary decomposition, torsion), ``points``
(rational and integral points), ``closure``, ``signals`` and ``cli``.
"""
__version__ = "0.1.0"

from .closure import (ClosureReport, Hints, SignalSpaceKind, closure_1d, closure_fin_ideal_direct,
                      closure_fin_space, closure_poly_space, is_controllable, prop41_membership,
                      willems_closure)
from .core import Fraction, ModuleElement, Poly, Rational
from .groebner import Ideal, Submodule
from .points import SearchBounds

__all__ = [
    "ClosureReport", "Fraction", "Hints", "Ideal", "ModuleElement", "Poly", "Rational", "SearchBounds",
    "SignalSpaceKind", "Submodule", "closure_1d", "closure_fin_ideal_direct", "closure_fin_space",
    "closure_poly_space", "is_controllable", "prop41_membership", "willems_closure", "__version__",
]
