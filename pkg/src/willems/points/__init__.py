"""Rational and integral points on affine varieties."""
from .kernels import BACKEND
from .linear import LinearSolution, linear_system, smith_form, solve_linear
from .search import (DensityVerdict, PointSearch, PointSet, RationalPoint, SearchBounds,
                     density_verdict, enumerate_points, expand_parametrization, find_point,
                     grid_values, interpolation_certificate, points_ideal, rational_part,
                     solve_rational_zero_dim, vanishing_ideal)

__all__ = [
    "BACKEND", "DensityVerdict", "LinearSolution", "PointSearch", "PointSet", "RationalPoint",
    "SearchBounds", "density_verdict", "enumerate_points", "expand_parametrization", "find_point",
    "grid_values", "interpolation_certificate", "linear_system", "points_ideal", "rational_part",
    "smith_form", "solve_linear", "solve_rational_zero_dim", "vanishing_ideal",
]
