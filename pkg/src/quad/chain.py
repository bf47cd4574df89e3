import logging
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.constants import MAGNITUDE_FLOOR, TRUNCATION_BASE
from src.params import QuadratureSpec

from .representation import IntegralRep, Moment
from .results import EvalResult, TruncationError
from .rules import ray_rule

logger = logging.getLogger(__name__)

Insertion = Callable[[np.ndarray], np.ndarray]


def _logsumexp(E: np.ndarray, axis: int) -> np.ndarray:
    """log(sum(exp(E))) for complex E, shifted by the largest real part."""
    shift = np.max(E.real, axis=axis, keepdims=True)
    shift = np.where(np.isfinite(shift), shift, 0.0)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        total = np.sum(np.exp(E - shift), axis=axis)
        return np.log(total) + np.squeeze(shift, axis=axis)


def _safe_log(values: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.log(np.asarray(values, dtype=np.complex128))


def auto_truncation(poly, x: complex, z: complex) -> float:
    """4 * max(1, |x|, |z|, |c_k / c_n|)^(1/(n-1)), stretched when |c_n| < 1."""
    n = poly.degree
    lead = abs(complex(poly.leading))
    ratios = [abs(complex(poly.coefficient(k))) / lead for k in range(n)]
    base = max([1.0, abs(x), abs(z)] + ratios)
    return TRUNCATION_BASE * base ** (1.0 / (n - 1)) / min(1.0, lead) ** (1.0 / n)


class ChainQuadraturePsi:
    """
    psi_m(x, z) by tensor-product quadrature over u1, v1, ..., um, vm.

    The exponent only couples neighbouring variables
    (u1 z, -u_s v_s, +u_{s+1} v_s, x v_m), so the tensor-product sum is
    contracted layer by layer as a chain of matrix-vector products in log
    space, one layer per step of the recursion psi_m = iint e_m psi_{m-1}.
    Every variable runs over both rays of its contour: the incoming ray with
    weight -d, the outgoing one with +d.
    """

    def __init__(self, rep: IntegralRep):
        if rep.m < 1:
            raise ValueError("ChainQuadraturePsi needs at least one layer")
        self.rep = rep
        self._layers = rep.layers()

    @property
    def n_layers(self) -> int:
        return len(self._layers)

    def truncations_for(self, x: complex, z: complex, spec: QuadratureSpec) -> Tuple[float, ...]:
        if spec.truncation is not None:
            return (float(spec.truncation),) * self.n_layers
        return tuple(auto_truncation(poly, x, z) for poly, _ in self._layers)

    def layer_nodes(self, index: int, truncation: float, spec: QuadratureSpec) -> Tuple[np.ndarray, np.ndarray]:
        """Nodes y and log(weight) - poly(y) of one layer."""
        poly, contour = self._layers[index]
        t, w = ray_rule(spec.nodes_per_panel, spec.panels, spec.grading_ratio, truncation)
        nodes, weights = [], []
        for ray in contour.rays:
            nodes.append(ray.direction * t)
            weights.append(ray.orientation.sign * ray.direction * w)
        y = np.concatenate(nodes)
        logw = _safe_log(np.concatenate(weights)) - poly.evaluate_numeric(y)
        return y, logw

    def integrate(
        self,
        x: complex,
        z: complex,
        truncations: Sequence[float],
        spec: QuadratureSpec,
        insertions: Optional[Mapping[int, Insertion]] = None,
    ) -> Tuple[complex, float]:
        """Quadrature sum at fixed truncations; returns (value, absolute mass of the last layer)."""
        insertions = insertions or {}
        y_prev, logs = None, None
        for index in range(self.n_layers):
            y, logw = self.layer_nodes(index, truncations[index], spec)
            if index in insertions:
                logw = logw + _safe_log(insertions[index](y))
            if index == 0:
                logs = logw + y * z
            else:
                # odd layers are v_s (coupling -u_s v_s), even ones u_{s+1} (coupling +u_{s+1} v_s)
                sign = -1.0 if index % 2 == 1 else 1.0
                E = logs[:, None] + sign * np.outer(y_prev, y)
                logs = _logsumexp(E, axis=0) + logw
            y_prev = y
        final = logs + x * y_prev
        log_value = _logsumexp(final[None, :], axis=1)[0]
        log_mass = _logsumexp(final.real[None, :].astype(np.complex128), axis=1)[0]
        value = complex(np.exp(log_value)) if np.isfinite(log_value.real) else 0j
        mass = float(np.exp(log_mass.real)) if np.isfinite(log_mass.real) else 0.0
        return value, mass

    def moment_insertions(self, moment: Moment) -> Dict[int, Insertion]:
        insertions: Dict[int, List[Insertion]] = {}
        if moment.j:
            insertions.setdefault(0, []).append(lambda y, j=moment.j: y ** j)
        if moment.k:
            insertions.setdefault(self.n_layers - 1, []).append(lambda y, k=moment.k: y ** k)
        return {index: _product(fs) for index, fs in insertions.items()}

    def evaluate(
        self,
        x: complex,
        z: complex,
        spec: QuadratureSpec,
        moment: Optional[Moment] = None,
        truncations: Optional[Sequence[float]] = None,
    ) -> EvalResult:
        moment = moment or self.rep.moment
        insertions = self.moment_insertions(moment)
        levels = tuple(truncations) if truncations is not None else self.truncations_for(x, z, spec)
        previous, _ = self.integrate(x, z, levels, spec, insertions)
        estimate = float("inf")
        for doubling in range(1, spec.max_doublings + 1):
            levels = tuple(2.0 * T for T in levels)
            value, mass = self.integrate(x, z, levels, spec, insertions)
            scale = max(abs(value), MAGNITUDE_FLOOR * mass)
            estimate = abs(value - previous) / scale if scale > 0 else 0.0
            logger.debug(f"moment ({moment.j}, {moment.k}) at x={x}, z={z}: doubling {doubling}, estimate {estimate:.3e}")
            if estimate <= spec.rel_tol:
                return EvalResult(value=value, est_error=estimate, truncations=levels, magnitude=mass)
            previous = value
        raise TruncationError(
            f"truncation failure at x={x}, z={z}, moment ({moment.j}, {moment.k}): relative change "
            f"{estimate:.3e} > {spec.rel_tol:.1e} after {spec.max_doublings} doublings",
            last_estimate=estimate,
        )


def _product(functions: Sequence[Insertion]) -> Insertion:
    def combined(y):
        out = np.ones_like(y)
        for f in functions:
            out = out * f(y)
        return out
    return combined
