from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

from src.constants import (
    DEFAULT_CONTOUR,
    EVAL_RADIUS,
    FD_STEP,
    GRADING_RATIO,
    MAX_DOUBLINGS,
)


@dataclass(frozen=True)
class QuadratureSpec:
    nodes_per_panel: int = field(
        default=24,
        metadata={"help": "Gauss-Legendre nodes on every panel of a truncated ray."}
    )
    panels: int = field(
        default=12,
        metadata={"help": "Number of geometrically graded panels per ray."}
    )
    grading_ratio: float = field(
        default=GRADING_RATIO,
        metadata={"help": "Ratio between consecutive panel edges, counted from the far end of the ray."}
    )
    truncation: Optional[float] = field(
        default=None,
        metadata={"help": "Ray length used for every variable. If None, chosen per ray from the polynomial and the point."}
    )
    rel_tol: float = field(
        default=1e-10,
        metadata={"help": "Relative change between truncation T and 2T accepted as converged."}
    )
    max_doublings: int = field(
        default=MAX_DOUBLINGS,
        metadata={"help": "How many times the truncation may be doubled before giving up."}
    )
    max_radius: float = field(
        default=EVAL_RADIUS,
        metadata={"help": "Largest |x|, |z| accepted by the evaluator."}
    )

    def __post_init__(self):
        if self.nodes_per_panel <= 0 or self.panels <= 0:
            raise ValueError(f"nodes_per_panel and panels must be positive, got {self.nodes_per_panel}, {self.panels}")
        if not 0.0 < self.grading_ratio < 1.0:
            raise ValueError(f"grading_ratio must lie in (0, 1), got {self.grading_ratio}")
        if self.truncation is not None and not 0.0 < self.truncation < float("inf"):
            raise ValueError(f"truncation must be a finite positive number, got {self.truncation}")
        if self.rel_tol <= 0.0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_doublings < 1:
            raise ValueError(f"max_doublings must be at least 1, got {self.max_doublings}")
        if self.max_radius <= 0.0:
            raise ValueError(f"max_radius must be positive, got {self.max_radius}")

    def updated(self, **overrides) -> "QuadratureSpec":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def default_quadrature_spec(m: int) -> QuadratureSpec:
    if m <= 1:
        return QuadratureSpec(nodes_per_panel=24, panels=12, rel_tol=1e-10)
    return QuadratureSpec(nodes_per_panel=16, panels=10, rel_tol=1e-7)


@dataclass
class ContourArguments:
    k1: int = field(
        default=DEFAULT_CONTOUR[0],
        metadata={"help": "Root-of-unity index of the incoming ray."}
    )
    k2: int = field(
        default=DEFAULT_CONTOUR[1],
        metadata={"help": "Root-of-unity index of the outgoing ray."}
    )

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.k1, self.k2)


@dataclass
class VerificationArguments:
    tol: Optional[float] = field(
        default=None,
        metadata={"help": "Pass tolerance for normalized residuals. If None, 1e-6 for m = 1 and 1e-4 for m = 2."}
    )
    check_derivatives: bool = field(
        default=False,
        metadata={"help": "Also compare moment derivatives of psi with finite differences on the grid."}
    )
    fd_step: float = field(
        default=FD_STEP,
        metadata={"help": "Base step of the Richardson finite-difference check."}
    )
    workers: int = field(
        default=4,
        metadata={"help": "Threads used to verify grid points concurrently."}
    )
    progress: bool = field(
        default=False,
        metadata={"help": "Show a progress bar over grid points."}
    )


@dataclass
class CLIArguments:
    job: Optional[str] = field(
        default=None,
        metadata={"help": "Path to the JSON job file."}
    )
    x: Optional[str] = field(
        default=None,
        metadata={"help": "Complex literal for x, e.g. '0.5-0.25i' (eval only)."}
    )
    z: Optional[str] = field(
        default=None,
        metadata={"help": "Complex literal for z (eval only)."}
    )
    grid_out: Optional[str] = field(
        default=None,
        metadata={"help": "Where to write the CSV residual table."}
    )
    report_out: Optional[str] = field(
        default=None,
        metadata={"help": "Where to write the JSON report."}
    )
    allow_m_gt_2: bool = field(
        default=False,
        metadata={"help": "Allow words with more than two (p, q) pairs; cost grows with every layer."}
    )
    log_level: str = field(
        default="WARNING",
        metadata={"help": "Logging level, one of DEBUG, INFO, WARNING, ERROR."}
    )
