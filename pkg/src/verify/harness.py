import itertools
import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd
from tqdm import tqdm

from src.algebra import X_VARIABLES, WeylElement
from src.automorphism import (
    AutomorphismWord,
    BispectralQuadruple,
    Classification,
    Verdict,
    bispectral_quadruple,
    classify,
    intertwine,
)
from src.constants import DEFAULT_CONTOUR, FALLBACK_TOLERANCE, TOLERANCE_BY_DEPTH
from src.params import QuadratureSpec, default_quadrature_spec
from src.quad import PointEvaluator, TruncationError, build_integral_rep, normalized_residual
from src.utils import complex_to_json

logger = logging.getLogger(__name__)

Point = Tuple[complex, complex]

CSV_COLUMNS = ["x_re", "x_im", "z_re", "z_im", "identity", "residual", "scale"]


def default_tolerance(m: int) -> float:
    return TOLERANCE_BY_DEPTH.get(m, FALLBACK_TOLERANCE)


@dataclass(frozen=True)
class VerificationTask:
    word: AutomorphismWord
    grid: Tuple[Point, ...]
    spec: Optional[QuadratureSpec] = None
    probes: Tuple[WeylElement, ...] = ()
    contours: Optional[Tuple[Optional[Tuple[int, int]], ...]] = None
    tol: Optional[float] = None
    allow_m_gt_2: bool = False
    method: str = "auto"
    default_contour: Tuple[int, int] = DEFAULT_CONTOUR

    def __post_init__(self):
        if len(self.grid) == 0:
            raise ValueError("VerificationTask needs at least one grid point")
        object.__setattr__(self, "grid", tuple((complex(x), complex(z)) for x, z in self.grid))
        object.__setattr__(self, "probes", tuple(self.probes))

    @property
    def tolerance(self) -> float:
        return self.tol if self.tol is not None else default_tolerance(self.word.m)

    @property
    def quadrature(self) -> QuadratureSpec:
        return self.spec if self.spec is not None else default_quadrature_spec(self.word.m)


@dataclass(frozen=True)
class ResidualRecord:
    x: complex
    z: complex
    identity: str
    residual: Optional[float]
    scale: float
    note: str = ""

    @property
    def conclusive(self) -> bool:
        return self.residual is not None

    def to_dict(self) -> dict:
        return {
            "x": complex_to_json(self.x),
            "z": complex_to_json(self.z),
            "identity": self.identity,
            "residual": self.residual,
            "scale": self.scale,
            "status": "ok" if self.conclusive else "inconclusive",
            "note": self.note,
        }


@dataclass
class VerificationReport:
    classification: Classification
    operators: BispectralQuadruple
    records: List[ResidualRecord] = field(default_factory=list)
    tolerance: float = 0.0
    passed: bool = False

    @property
    def residuals(self) -> Dict[Tuple[str, Point], Optional[float]]:
        return {(r.identity, (r.x, r.z)): r.residual for r in self.records}

    @property
    def scale(self) -> Dict[Point, float]:
        return {(r.x, r.z): r.scale for r in self.records}

    @property
    def inconclusive(self) -> List[ResidualRecord]:
        return [r for r in self.records if not r.conclusive]

    @property
    def max_residual(self) -> float:
        values = [r.residual for r in self.records if r.conclusive]
        return max(values) if values else float("nan")

    def failures(self) -> List[ResidualRecord]:
        return [r for r in self.records if r.conclusive and r.residual > self.tolerance]

    def to_dict(self) -> dict:
        return {
            "classification": self.classification.to_dict(),
            "operators": self.operators.as_text(),
            "residuals": [r.to_dict() for r in self.records],
            "tolerance": self.tolerance,
            "pass": self.passed,
        }

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "x_re": r.x.real,
                "x_im": r.x.imag,
                "z_re": r.z.real,
                "z_im": r.z.imag,
                "identity": r.identity,
                "residual": r.residual,
                "scale": r.scale,
            }
            for r in self.records
        ]
        return pd.DataFrame(rows, columns=CSV_COLUMNS)


def residual(lhs: complex, rhs: complex, psi: complex) -> float:
    """|LHS - RHS| / (|psi| + max(|LHS|, |RHS|))."""
    return normalized_residual(lhs, rhs, psi)


def _identities(operators: BispectralQuadruple, probes: Sequence[Tuple[WeylElement, WeylElement]]):
    """(name, left side, right side) as functions of a PointEvaluator."""
    checks = [
        ("L psi = z psi", lambda e: e.apply_x(operators.L).value, lambda e: e.z * e.psi.value),
        ("Lambda psi = x psi", lambda e: e.apply_z(operators.Lambda).value, lambda e: e.x * e.psi.value),
        ("D psi = Dz psi", lambda e: e.apply_x(operators.D).value, lambda e: e.moment(1, 0).value),
        ("Delta psi = Dx psi", lambda e: e.apply_z(operators.Delta).value, lambda e: e.moment(0, 1).value),
    ]
    for P, bP in probes:
        checks.append((
            f"probe {P.to_string(X_VARIABLES)}",
            lambda e, P=P: e.apply_x(P).value,
            lambda e, bP=bP: e.apply_z(bP).value,
        ))
    return checks


def _verify_point(rep, spec, method, checks, point: Point) -> List[ResidualRecord]:
    x, z = point
    evaluator = PointEvaluator(rep, x, z, spec, method=method)
    try:
        psi = evaluator.psi.value
    except TruncationError as exc:
        logger.warning(f"psi inconclusive at ({x}, {z}): {exc}")
        return [ResidualRecord(x, z, name, None, float("nan"), str(exc)) for name, _, _ in checks]

    records = []
    for name, lhs_fn, rhs_fn in checks:
        try:
            lhs, rhs = lhs_fn(evaluator), rhs_fn(evaluator)
        except TruncationError as exc:
            logger.warning(f"{name} inconclusive at ({x}, {z}): {exc}")
            records.append(ResidualRecord(x, z, name, None, abs(psi), str(exc)))
            continue
        records.append(ResidualRecord(x, z, name, residual(lhs, rhs, psi), abs(psi)))
    return records


def verify_bispectral(task: VerificationTask, workers: int = 1, progress: bool = False) -> VerificationReport:
    word = task.word
    classification = classify(word)
    if classification.verdict is not Verdict.NewBispectral:
        warnings.warn(f"Verifying a word classified as {classification.verdict.value}: {classification.detail}")

    operators = bispectral_quadruple(word)
    rep = build_integral_rep(
        word, task.contours, allow_m_gt_2=task.allow_m_gt_2, default_contour=task.default_contour
    )
    probes = [(P, intertwine(word, P)) for P in task.probes]
    checks = _identities(operators, probes)
    spec = task.quadrature
    logger.info(f"Verifying m = {word.m} on {len(task.grid)} points with tolerance {task.tolerance:.1e}")

    def run(point):
        return _verify_point(rep, spec, task.method, checks, point)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = pool.map(run, task.grid)
        if progress:
            results = tqdm(results, total=len(task.grid), desc="verify")
        records = list(itertools.chain.from_iterable(results))

    report = VerificationReport(classification=classification, operators=operators, records=records,
                                tolerance=task.tolerance)
    conclusive = [r for r in records if r.conclusive]
    report.passed = bool(conclusive) and all(r.residual <= task.tolerance for r in conclusive)
    if report.inconclusive:
        logger.warning(f"{len(report.inconclusive)} of {len(records)} checks were inconclusive")
    logger.info(f"max residual {report.max_residual:.3e}, pass = {report.passed}")
    return report


def admissible_contours(n: int) -> List[Tuple[int, int]]:
    return [(k1, k2) for k1 in range(n) for k2 in range(n) if (k1 - k2) % n != 0]


def contour_independence(
    word: AutomorphismWord,
    grid: Sequence[Point],
    spec: Optional[QuadratureSpec] = None,
    tol: Optional[float] = None,
    choices: Optional[Sequence[Tuple[Tuple[int, int], Tuple[int, int]]]] = None,
) -> Dict[Tuple[Tuple[int, int], Tuple[int, int]], VerificationReport]:
    """
    Reruns the eigenfunction identities of an m = 1 word for every admissible
    (k1, k2) on the u- and v-contours. The operators are the same for all
    choices; only psi changes.
    """
    if word.m != 1:
        raise ValueError(f"contour_independence expects an m = 1 word, got m = {word.m}")
    p, q = word.pairs()[0]
    if choices is None:
        choices = list(itertools.product(admissible_contours(p.degree), admissible_contours(q.degree)))
    reports = {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for u_contour, v_contour in choices:
            task = VerificationTask(word=word, grid=tuple(grid), spec=spec, contours=(u_contour, v_contour), tol=tol)
            reports[(u_contour, v_contour)] = verify_bispectral(task)
            logger.debug(f"contours u {u_contour}, v {v_contour}: pass = {reports[(u_contour, v_contour)].passed}")
    return reports
