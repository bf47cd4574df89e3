from .convergence import ConvergenceReport, convergence_check
from .rays import (
    ContourError,
    ContourPair,
    ContourPlan,
    Orientation,
    Ray,
    contour_for,
    decay_bound,
    plan_for_word,
    principal_root,
)

__all__ = [
    "ContourError",
    "Orientation",
    "Ray",
    "ContourPair",
    "ContourPlan",
    "contour_for",
    "decay_bound",
    "plan_for_word",
    "principal_root",
    "ConvergenceReport",
    "convergence_check",
]
