"""Exact matrix-valued orthogonal polynomials for Hermite and Laguerre type weights.

All arithmetic is over the rationals: matrices are numpy object arrays of
:class:`fractions.Fraction` and every check compares exactly.
"""

from .darboux import DarbouxCase, darboux_quadratic_check, factorization_check, intertwine_check
from .diffop import DiffOp, apply, compose, eigen_check, lambda_eigenvalue, op_from_delta_poly, symmetry_check
from .exact import DimensionError, DomainError, ParityError, SingularMatrixError
from .matpoly import MatPoly
from .orthopoly import MonicSequence, Recurrence, gs_oracle, monic_op, parity_check, recurrence_coeffs
from .quadmap import conjugate_by_x, correspondence_check, spectral_match_check, transform_even, transform_odd
from .report import VerifyReport
from .weights import WeightSpec, hermite, laguerre, pushforward

__all__ = [
    "DarbouxCase", "DiffOp", "DimensionError", "DomainError", "MatPoly", "MonicSequence",
    "ParityError", "Recurrence", "SingularMatrixError", "VerifyReport", "WeightSpec",
    "apply", "compose", "conjugate_by_x", "correspondence_check", "darboux_quadratic_check",
    "eigen_check", "factorization_check", "gs_oracle", "hermite", "intertwine_check",
    "lambda_eigenvalue", "laguerre", "monic_op", "op_from_delta_poly", "parity_check",
    "pushforward", "recurrence_coeffs", "spectral_match_check", "symmetry_check",
    "transform_even", "transform_odd",
]
