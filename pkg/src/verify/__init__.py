from .derivatives import DerivativeCheck, cross_check_derivatives, richardson_derivative
from .harness import (
    ResidualRecord,
    VerificationReport,
    VerificationTask,
    admissible_contours,
    contour_independence,
    default_tolerance,
    residual,
    verify_bispectral,
)
from .symmetry import SymmetryReport, cubic_word, numerical_rank, symmetry_report

__all__ = [
    "VerificationTask",
    "VerificationReport",
    "ResidualRecord",
    "residual",
    "default_tolerance",
    "verify_bispectral",
    "admissible_contours",
    "contour_independence",
    "SymmetryReport",
    "cubic_word",
    "numerical_rank",
    "symmetry_report",
    "DerivativeCheck",
    "cross_check_derivatives",
    "richardson_derivative",
]
