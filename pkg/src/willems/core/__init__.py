"""Exact scalars, polynomials in D_1..D_n, elements of D^q and term orders."""
from fractions import Fraction

from .coefficient import (Coefficient, coef_arith, format_coefficient, is_rational,
                          make_coefficient, transcendental)
from .order import GREVLEX, LEX, POT, TermOrder
from .poly import (ModuleElement, Poly, as_element, format_element, format_poly,
                   poly_eval, poly_shift)

Rational = Fraction

__all__ = [
    "Coefficient", "Fraction", "GREVLEX", "LEX", "ModuleElement", "POT", "Poly",
    "Rational", "TermOrder", "as_element", "coef_arith", "format_coefficient",
    "format_element", "format_poly", "is_rational", "make_coefficient", "poly_eval",
    "poly_shift", "transcendental",
]
