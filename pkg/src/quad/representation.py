import logging
import warnings
from dataclasses import dataclass, replace
from typing import Optional, Sequence, Tuple

from src.algebra import UniPoly
from src.automorphism import AutomorphismWord
from src.constants import DEFAULT_CONTOUR, DEFAULT_M_CAP
from src.contour import ContourPlan, ConvergenceReport, convergence_check, plan_for_word

logger = logging.getLogger(__name__)


class DivergentConfigurationError(ValueError):
    def __init__(self, report: ConvergenceReport):
        super().__init__(f"divergent configuration: {report}")
        self.report = report


@dataclass(frozen=True)
class Moment:
    """u1^j v_m^k inserted in the integrand; realizes Dz^j Dx^k of psi."""
    j: int = 0
    k: int = 0

    def __post_init__(self):
        if self.j < 0 or self.k < 0:
            raise ValueError(f"Moment powers must be non-negative, got ({self.j}, {self.k})")

    def shifted(self, dj: int = 0, dk: int = 0) -> "Moment":
        return Moment(self.j + dj, self.k + dk)


@dataclass(frozen=True)
class IntegralRep:
    m: int
    p: Tuple[UniPoly, ...]
    q: Tuple[UniPoly, ...]
    plan: ContourPlan
    moment: Moment = Moment()

    def __post_init__(self):
        if len(self.p) != self.m or len(self.q) != self.m:
            raise ValueError(f"Expected {self.m} polynomials p and q, got {len(self.p)} and {len(self.q)}")
        if len(self.plan) != 2 * self.m:
            raise ValueError(f"Contour plan has {len(self.plan)} layers, expected {2 * self.m}")

    @property
    def word(self) -> AutomorphismWord:
        return AutomorphismWord.from_pairs(zip(self.p, self.q))

    def layers(self) -> Sequence[Tuple[UniPoly, object]]:
        """(polynomial, ContourPair) for u1, v1, ..., um, vm."""
        polys = [poly for pair in zip(self.p, self.q) for poly in pair]
        return list(zip(polys, self.plan.pairs))

    def with_moment(self, moment: Moment) -> "IntegralRep":
        return replace(self, moment=moment)


def build_integral_rep(
    word: AutomorphismWord,
    contours: Optional[Sequence[Optional[Tuple[int, int]]]] = None,
    moment: Moment = Moment(),
    allow_m_gt_2: bool = False,
    default_contour: Tuple[int, int] = DEFAULT_CONTOUR,
) -> IntegralRep:
    report = convergence_check(word)
    if not report:
        raise DivergentConfigurationError(report)
    m = word.m
    if m > DEFAULT_M_CAP:
        if not allow_m_gt_2:
            raise ValueError(
                f"m = {m} exceeds the default cap of {DEFAULT_M_CAP}; enable allow_m_gt_2 to integrate deeper words"
            )
        warnings.warn(f"Integrating a word with m = {m}: every extra layer adds a dense contraction per evaluation.")
    pairs = word.pairs()
    plan = plan_for_word(word, contours, default=default_contour)
    logger.info(f"Integral representation with m = {m}, degrees {word.degree_sequence()}")
    return IntegralRep(
        m=m,
        p=tuple(p for p, _ in pairs),
        q=tuple(q for _, q in pairs),
        plan=plan,
        moment=moment,
    )


def with_x_derivative(rep: IntegralRep) -> IntegralRep:
    return rep.with_moment(rep.moment.shifted(dk=1))


def with_z_derivative(rep: IntegralRep) -> IntegralRep:
    return rep.with_moment(rep.moment.shifted(dj=1))
