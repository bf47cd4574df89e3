import logging
from typing import Dict, Optional, Sequence

from src.algebra import WeylElement
from src.constants import MAGNITUDE_FLOOR
from src.contour import convergence_check
from src.params import QuadratureSpec

from .evaluator_factory import get_psi_evaluator
from .representation import DivergentConfigurationError, IntegralRep, Moment
from .results import EvalResult

logger = logging.getLogger(__name__)


def _check_point(x: complex, z: complex, spec: QuadratureSpec):
    if abs(x) > spec.max_radius or abs(z) > spec.max_radius:
        raise ValueError(
            f"(x, z) = ({x}, {z}) lies outside |x|, |z| <= {spec.max_radius}; raise max_radius to evaluate there"
        )


def _check_rep(rep: IntegralRep):
    if rep.m >= 1:
        report = convergence_check(rep.word)
        if not report:
            raise DivergentConfigurationError(report)


def eval_psi(
    rep: IntegralRep,
    x: complex,
    z: complex,
    spec: QuadratureSpec,
    method: str = "auto",
    truncations: Optional[Sequence[float]] = None,
) -> EvalResult:
    _check_rep(rep)
    _check_point(x, z, spec)
    evaluator = get_psi_evaluator(rep, method)
    return evaluator.evaluate(complex(x), complex(z), spec, truncations=truncations)


class PointEvaluator:
    """Moments of psi at one point, each computed at most once."""

    def __init__(self, rep: IntegralRep, x: complex, z: complex, spec: QuadratureSpec, method: str = "auto"):
        _check_rep(rep)
        _check_point(x, z, spec)
        self.rep = rep
        self.x, self.z = complex(x), complex(z)
        self.spec = spec
        self.evaluator = get_psi_evaluator(rep, method)
        self._cache: Dict[Moment, EvalResult] = {}

    def moment(self, j: int = 0, k: int = 0) -> EvalResult:
        key = self.rep.moment.shifted(j, k)
        if key not in self._cache:
            self._cache[key] = self.evaluator.evaluate(self.x, self.z, self.spec, moment=key)
        return self._cache[key]

    @property
    def psi(self) -> EvalResult:
        return self.moment(0, 0)

    def _combine(self, P: WeylElement, variable: complex, on_x: bool) -> EvalResult:
        value, mass, abs_error = 0j, 0.0, 0.0
        for (a, b), c in P.items():
            r = self.moment(0, b) if on_x else self.moment(b, 0)
            term = complex(c) * variable ** a * r.value
            value += term
            mass += abs(term)
            abs_error += abs(complex(c) * variable ** a) * r.est_error * max(abs(r.value), MAGNITUDE_FLOOR * r.magnitude)
        scale = max(abs(value), mass)
        return EvalResult(value=value, est_error=abs_error / scale if scale > 0 else 0.0, magnitude=mass)

    def apply_x(self, P: WeylElement) -> EvalResult:
        """P(x, Dx) psi: x^a Dx^b becomes x^a times the v_m^b moment."""
        return self._combine(P, self.x, on_x=True)

    def apply_z(self, P: WeylElement) -> EvalResult:
        """P(z, Dz) psi: z^a Dz^b becomes z^a times the u_1^b moment."""
        return self._combine(P, self.z, on_x=False)


def apply_operator_x(P: WeylElement, rep: IntegralRep, x: complex, z: complex, spec: QuadratureSpec) -> EvalResult:
    return PointEvaluator(rep, x, z, spec).apply_x(P)


def apply_operator_z(P: WeylElement, rep: IntegralRep, x: complex, z: complex, spec: QuadratureSpec) -> EvalResult:
    return PointEvaluator(rep, x, z, spec).apply_z(P)


def normalized_residual(lhs: complex, rhs: complex, psi: complex) -> float:
    denominator = abs(psi) + max(abs(lhs), abs(rhs))
    return abs(lhs - rhs) / denominator if denominator > 0 else 0.0


def integration_by_parts_residuals(rep: IntegralRep, x: complex, z: complex, spec: QuadratureSpec) -> Dict[str, float]:
    """
    Quadrature estimates of iint d/du_m(integrand) and iint d/dv_m(integrand)
    for the moment-free integrand, normalized against the size of psi and of
    the individual terms. Both vanish exactly only when the boundary terms at
    the joint point 0 of every contour cancel.
    """
    if rep.m < 1:
        raise ValueError("integration by parts needs at least one integration layer")
    base = rep.with_moment(Moment())
    point = PointEvaluator(base, x, z, spec, method="chain")
    psi = point.psi
    chain = point.evaluator
    levels = psi.truncations
    x, z = point.x, point.z
    u_index, v_index = 2 * rep.m - 2, 2 * rep.m - 1
    dp, dq = rep.p[-1].derivative(), rep.q[-1].derivative()

    def term(index, fn):
        value, _ = chain.integrate(x, z, levels, spec, {index: fn})
        return value

    minus_dp = term(u_index, lambda y: -dp.evaluate_numeric(y))
    minus_v = term(v_index, lambda y: -y)
    previous_v = z * psi.value if rep.m == 1 else term(v_index - 2, lambda y: y)
    u_terms = (minus_dp, minus_v, previous_v)

    x_term = x * psi.value
    minus_u = term(u_index, lambda y: -y)
    minus_dq = term(v_index, lambda y: -dq.evaluate_numeric(y))
    v_terms = (x_term, minus_u, minus_dq)

    def normalize(terms):
        total = sum(terms)
        denominator = abs(psi.value) + max(abs(t) for t in terms)
        return abs(total) / denominator if denominator > 0 else 0.0

    residuals = {"u": normalize(u_terms), "v": normalize(v_terms)}
    logger.debug(f"integration-by-parts residuals at x={x}, z={z}: {residuals}")
    return residuals
