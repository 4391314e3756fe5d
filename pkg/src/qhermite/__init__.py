"""Exact and numeric toolkit for the discrete q-Hermite polynomials."""

from ._backend import BACKEND
from .exactalg import (
    InexactDivision,
    LaurentQ,
    SPoly,
    XSPoly,
    q_binomial,
    q_factorial,
    q_int,
    q_odd_double_factorial,
    q_pochhammer_finite,
    substitute_q,
)
from .families import Family, PolyTable, build_by_formula, build_by_recurrence, poly
from .functionals import MomentFunctional, apply_functional, orthogonality_matrix
from .series import QNumberTable, TruncSeries, q_exp, q_tangent_euler

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Family",
    "InexactDivision",
    "LaurentQ",
    "MomentFunctional",
    "PolyTable",
    "QNumberTable",
    "SPoly",
    "TruncSeries",
    "XSPoly",
    "apply_functional",
    "build_by_formula",
    "build_by_recurrence",
    "orthogonality_matrix",
    "poly",
    "q_binomial",
    "q_exp",
    "q_factorial",
    "q_int",
    "q_odd_double_factorial",
    "q_pochhammer_finite",
    "q_tangent_euler",
    "substitute_q",
]
