"""Singularities of horospherical varieties of complexity one.

Input is a colored polyhedral divisor over a smooth curve; the package
computes the weight function omega_X, discrepancies, the MMP singularity
classes and a truncated stringy series, all in exact rational arithmetic.
"""

from .classify import SingularityReport, classify
from .divisor import (
    ColoredPolyhedralDivisor,
    ColorRecord,
    CurveData,
    cayley_cone,
    degree,
    from_kstar,
    support,
    validate,
)
from .errors import HorosingError, NotQGorenstein
from .geometry import Cone, Polyhedron
from .rootsys import RootSystemSpec, cartan_matrix, color_coefficients
from .stringy import stringy_series
from .weight import discrepancy, omega_eval, solve_weight

__all__ = [
    "Cone",
    "Polyhedron",
    "ColoredPolyhedralDivisor",
    "ColorRecord",
    "CurveData",
    "SingularityReport",
    "HorosingError",
    "NotQGorenstein",
    "RootSystemSpec",
    "cartan_matrix",
    "color_coefficients",
    "cayley_cone",
    "classify",
    "degree",
    "discrepancy",
    "from_kstar",
    "omega_eval",
    "solve_weight",
    "stringy_series",
    "support",
    "validate",
]

__version__ = "0.1.0"
