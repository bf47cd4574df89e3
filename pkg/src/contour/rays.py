import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from src.algebra import UniPoly
from src.automorphism import AutomorphismWord
from src.constants import DEFAULT_CONTOUR

logger = logging.getLogger(__name__)

DIRECTION_TOLERANCE = 1e-14


class ContourError(ValueError):
    pass


class Orientation(str, Enum):
    Incoming = "Incoming"   # from infinity to 0
    Outgoing = "Outgoing"   # from 0 to infinity

    @property
    def sign(self) -> int:
        return -1 if self is Orientation.Incoming else 1


@dataclass(frozen=True)
class Ray:
    direction: complex
    orientation: Orientation

    def __post_init__(self):
        if abs(abs(self.direction) - 1.0) > DIRECTION_TOLERANCE:
            raise ContourError(f"Ray direction must have unit modulus, got |{self.direction}| = {abs(self.direction)}")


@dataclass(frozen=True)
class ContourPair:
    incoming: Ray
    outgoing: Ray
    n: int
    k1: int
    k2: int
    alpha: complex

    def __post_init__(self):
        if self.incoming.direction == self.outgoing.direction:
            raise ContourError("degenerate contour: incoming and outgoing rays coincide")

    @property
    def rays(self) -> Tuple[Ray, Ray]:
        return self.incoming, self.outgoing


@dataclass(frozen=True)
class ContourPlan:
    """One ContourPair per integration variable u1, v1, ..., um, vm."""
    pairs: Tuple[ContourPair, ...]

    @property
    def m(self) -> int:
        return len(self.pairs) // 2

    def __len__(self):
        return len(self.pairs)


def principal_root(c: complex, n: int) -> complex:
    """n-th root with argument in (-pi/n, pi/n]."""
    return abs(c) ** (1.0 / n) * cmath.exp(1j * cmath.phase(c) / n)


def _unit(w: complex) -> complex:
    w = w / abs(w)
    # Snap tiny rounding noise so that e.g. -1 stays exactly -1.
    re = 0.0 if abs(w.real) < 1e-15 else w.real
    im = 0.0 if abs(w.imag) < 1e-15 else w.imag
    w = complex(re, im)
    return w / abs(w)


def ray_direction(alpha: complex, k: int, n: int) -> complex:
    return _unit(cmath.exp(2j * math.pi * k / n) / alpha)


def contour_for(poly: UniPoly, k1: int, k2: int) -> ContourPair:
    n = poly.degree
    if n < 2:
        raise ContourError(
            f"unsupported degree {n} for {poly}: contours exist for polynomials of degree at least 2"
        )
    if (k1 - k2) % n == 0:
        raise ContourError(
            f"degenerate contour: k1 = {k1} and k2 = {k2} agree modulo {n}, the rays coincide "
            f"and the integral vanishes identically"
        )
    alpha = principal_root(complex(poly.leading), n)
    incoming = Ray(ray_direction(alpha, k1, n), Orientation.Incoming)
    outgoing = Ray(ray_direction(alpha, k2, n), Orientation.Outgoing)
    return ContourPair(incoming=incoming, outgoing=outgoing, n=n, k1=k1, k2=k2, alpha=alpha)


def decay_bound(poly: UniPoly) -> float:
    """
    C such that Re poly(d t) >= |c_n| t^n / 2 - C for t >= 0 along any ray
    direction d from contour_for.
    """
    n = poly.degree
    lead = abs(complex(poly.leading))
    lower = sum(abs(complex(poly.coefficient(k))) for k in range(n))
    radius = 1.0 + 2.0 * lower / lead
    return lower * radius ** (n - 1)


def plan_for_word(
    word: AutomorphismWord,
    overrides: Optional[Sequence[Optional[Tuple[int, int]]]] = None,
    default: Tuple[int, int] = DEFAULT_CONTOUR,
) -> ContourPlan:
    sequence = word.polynomial_sequence()
    overrides = list(overrides or [])
    if len(overrides) > len(sequence):
        raise ContourError(f"{len(overrides)} contour overrides given for {len(sequence)} layers")
    pairs = []
    for index, (label, poly) in enumerate(sequence):
        choice = overrides[index] if index < len(overrides) and overrides[index] is not None else default
        try:
            pairs.append(contour_for(poly, *choice))
        except ContourError as exc:
            raise ContourError(f"layer {label}: {exc}") from exc
        logger.debug(f"layer {label}: (k1, k2) = {tuple(choice)}, directions {pairs[-1].incoming.direction}, {pairs[-1].outgoing.direction}")
    return ContourPlan(tuple(pairs))
