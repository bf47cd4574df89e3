import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.constants import FD_STEP
from src.params import QuadratureSpec, default_quadrature_spec
from src.quad import ClosedFormPsi, IntegralRep, eval_psi, get_psi_evaluator, normalized_residual
from src.utils import complex_to_json

logger = logging.getLogger(__name__)


def richardson_derivative(f: Callable[[complex], complex], at: complex, h: float = FD_STEP) -> complex:
    """(4 D(h/2) - D(h)) / 3 with central differences D."""
    def central(step):
        return (f(at + step) - f(at - step)) / (2.0 * step)
    return (4.0 * central(h / 2.0) - central(h)) / 3.0


@dataclass
class DerivativeCheck:
    deviations: List[Tuple[complex, complex, str, float]] = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        return max((d for *_, d in self.deviations), default=0.0)

    def by_variable(self) -> Dict[str, float]:
        out: Dict[str, float] = {}
        for _, _, variable, d in self.deviations:
            out[variable] = max(out.get(variable, 0.0), d)
        return out

    def to_dict(self) -> dict:
        return {
            "max_deviation": self.max_deviation,
            "points": [
                {"x": complex_to_json(x), "z": complex_to_json(z), "variable": v, "deviation": d}
                for x, z, v, d in self.deviations
            ],
        }


def _frozen_evaluator(rep: IntegralRep, spec: QuadratureSpec, truncations: Sequence[float]):
    """psi as a function of (x, z) at fixed truncations, so differences are smooth."""
    evaluator = get_psi_evaluator(rep)
    if isinstance(evaluator, ClosedFormPsi):
        return lambda x, z: evaluator.evaluate(x, z, spec).value
    insertions = evaluator.moment_insertions(rep.moment)
    return lambda x, z: evaluator.integrate(x, z, truncations, spec, insertions)[0]


def cross_check_derivatives(
    rep: IntegralRep,
    grid: Sequence[Tuple[complex, complex]],
    spec: Optional[QuadratureSpec] = None,
    step: float = FD_STEP,
    variables: Sequence[str] = ("x", "z"),
) -> DerivativeCheck:
    """
    Compares the moment-inserted first derivatives of psi with Richardson
    finite differences of psi itself. Deviations are normalized the same way
    as the eigenfunction residuals.
    """
    spec = spec or default_quadrature_spec(rep.m)
    check = DerivativeCheck()
    for x, z in grid:
        x, z = complex(x), complex(z)
        base = eval_psi(rep, x, z, spec)
        psi = _frozen_evaluator(rep, spec, base.truncations)
        for variable in variables:
            if variable == "x":
                moment = eval_psi(rep.with_moment(rep.moment.shifted(dk=1)), x, z, spec).value
                finite = richardson_derivative(lambda t: psi(t, z), x, step)
            elif variable == "z":
                moment = eval_psi(rep.with_moment(rep.moment.shifted(dj=1)), x, z, spec).value
                finite = richardson_derivative(lambda t: psi(x, t), z, step)
            else:
                raise ValueError(f"Unknown variable: {variable}")
            deviation = normalized_residual(moment, finite, base.value)
            check.deviations.append((x, z, variable, deviation))
    logger.info(f"derivative cross-check over {len(grid)} points: max deviation {check.max_deviation:.3e}")
    return check
