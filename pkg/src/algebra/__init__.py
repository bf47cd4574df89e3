from .gaussian import I, ONE, ZERO, GaussianRational
from .polynomial import UniPoly
from .weyl import (
    X_VARIABLES,
    Z_VARIABLES,
    UndefinedOrderError,
    WeylElement,
    apply_to_monomial,
    apply_to_poly,
    commutator,
    compose_poly,
    multiply,
    order_and_degree,
)

__all__ = [
    "GaussianRational",
    "I",
    "ONE",
    "ZERO",
    "UniPoly",
    "WeylElement",
    "UndefinedOrderError",
    "X_VARIABLES",
    "Z_VARIABLES",
    "multiply",
    "commutator",
    "compose_poly",
    "apply_to_monomial",
    "apply_to_poly",
    "order_and_degree",
]
