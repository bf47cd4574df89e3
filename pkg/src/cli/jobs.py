import itertools
import logging
from pathlib import Path
from typing import Any, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.algebra import UniPoly, WeylElement
from src.automorphism import AutomorphismWord, ElementaryFactor, FactorKind
from src.constants import COARSE_GRID_VALUES, DEFAULT_GRID_VALUES
from src.params import QuadratureSpec, default_quadrature_spec
from src.utils import complex_from_json, load_json

from .parser import PolynomialParseError, parse_operator, parse_poly, parse_rational

logger = logging.getLogger(__name__)

ComplexLike = Union[str, float, int, dict]


class JobSpecError(ValueError):
    pass


class FactorRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["p", "q"]
    poly: Union[str, List[str]] = Field(
        description="Polynomial text in t, or coefficient literals in ascending powers."
    )

    @field_validator("poly")
    @classmethod
    def _readable(cls, value):
        if isinstance(value, str):
            parse_poly(value)
        else:
            for literal in value:
                parse_rational(literal)
        return value

    def to_unipoly(self) -> UniPoly:
        if isinstance(self.poly, str):
            return parse_poly(self.poly)
        return UniPoly.from_coefficients([parse_rational(c) for c in self.poly])

    def to_factor(self) -> ElementaryFactor:
        kind = FactorKind.AdX if self.kind == "p" else FactorKind.AdD
        return ElementaryFactor(kind, self.to_unipoly())


class GridProduct(BaseModel):
    """Rectangular grid: every x value paired with every z value."""
    model_config = ConfigDict(extra="forbid")

    x: List[ComplexLike]
    z: List[ComplexLike]

    def points(self) -> List[Tuple[complex, complex]]:
        xs = [complex_from_json(v) for v in self.x]
        zs = [complex_from_json(v) for v in self.z]
        return list(itertools.product(xs, zs))


class QuadratureOverrides(BaseModel):
    model_config = ConfigDict(extra="forbid")

    nodes_per_panel: Optional[int] = None
    panels: Optional[int] = None
    grading_ratio: Optional[float] = None
    truncation: Optional[float] = None
    rel_tol: Optional[float] = None
    max_doublings: Optional[int] = None
    max_radius: Optional[float] = None
    method: Optional[Literal["auto", "closed_form", "chain", "tensor"]] = None


class JobSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    word: List[FactorRecord] = Field(default_factory=list)
    contours: Optional[List[Optional[Tuple[int, int]]]] = None
    grid: Optional[Union[GridProduct, List[Tuple[ComplexLike, ComplexLike]]]] = None
    quadrature: Optional[QuadratureOverrides] = None
    probes: List[str] = Field(default_factory=list)
    tol: Optional[float] = None
    allow_m_gt_2: bool = False

    @field_validator("probes")
    @classmethod
    def _probes_readable(cls, value):
        for text in value:
            parse_operator(text)
        return value

    def automorphism_word(self) -> AutomorphismWord:
        return AutomorphismWord.from_factors(record.to_factor() for record in self.word)

    def grid_points(self, m: Optional[int] = None) -> Tuple[Tuple[complex, complex], ...]:
        if self.grid is None:
            m = self.automorphism_word().m if m is None else m
            values = DEFAULT_GRID_VALUES if m <= 1 else COARSE_GRID_VALUES
            return tuple((complex(x), complex(z)) for x, z in itertools.product(values, values))
        if isinstance(self.grid, GridProduct):
            return tuple(self.grid.points())
        return tuple((complex_from_json(x), complex_from_json(z)) for x, z in self.grid)

    def contour_overrides(self) -> Optional[List[Optional[Tuple[int, int]]]]:
        if self.contours is None:
            return None
        return [tuple(c) if c is not None else None for c in self.contours]

    def quadrature_spec(self, m: Optional[int] = None) -> QuadratureSpec:
        m = self.automorphism_word().m if m is None else m
        spec = default_quadrature_spec(m)
        if self.quadrature is None:
            return spec
        return spec.updated(**self.quadrature.model_dump(exclude={"method"}))

    @property
    def method(self) -> str:
        if self.quadrature is None or self.quadrature.method is None:
            return "auto"
        return self.quadrature.method

    def probe_operators(self) -> List[WeylElement]:
        return [parse_operator(text) for text in self.probes]


def parse_job(payload: Any) -> JobSpec:
    try:
        return JobSpec.model_validate(payload)
    except ValidationError as exc:
        raise JobSpecError(f"invalid job: {exc}") from exc
    except PolynomialParseError as exc:
        raise JobSpecError(f"invalid job: {exc}") from exc


def load_job(path: Union[str, Path]) -> JobSpec:
    try:
        payload = load_json(path)
    except (OSError, ValueError) as exc:
        raise JobSpecError(f"cannot read job file {path}: {exc}") from exc
    job = parse_job(payload)
    logger.info(f"Loaded job {path} with {len(job.word)} factors")
    return job
