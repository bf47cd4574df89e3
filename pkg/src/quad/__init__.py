from .chain import ChainQuadraturePsi, auto_truncation
from .closed_form import ClosedFormPsi
from .evaluate import (
    PointEvaluator,
    apply_operator_x,
    apply_operator_z,
    eval_psi,
    integration_by_parts_residuals,
    normalized_residual,
)
from .evaluator_factory import get_psi_evaluator
from .representation import (
    DivergentConfigurationError,
    IntegralRep,
    Moment,
    build_integral_rep,
    with_x_derivative,
    with_z_derivative,
)
from .results import EvalResult, TruncationError
from .rules import graded_panel_rule, ray_rule
from .tensor import TensorProductPsi

__all__ = [
    "Moment",
    "IntegralRep",
    "build_integral_rep",
    "with_x_derivative",
    "with_z_derivative",
    "DivergentConfigurationError",
    "EvalResult",
    "TruncationError",
    "graded_panel_rule",
    "ray_rule",
    "auto_truncation",
    "ChainQuadraturePsi",
    "ClosedFormPsi",
    "TensorProductPsi",
    "get_psi_evaluator",
    "eval_psi",
    "PointEvaluator",
    "apply_operator_x",
    "apply_operator_z",
    "normalized_residual",
    "integration_by_parts_residuals",
]
