import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from src.algebra import GaussianRational, WeylElement

from .factors import AutomorphismWord
from .quadruple import bispectral_quadruple

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[GaussianRational, GaussianRational], Tuple[GaussianRational, GaussianRational]]


class Verdict(str, Enum):
    NewBispectral = "NewBispectral"
    AiryReducible = "AiryReducible"
    Rank1OrTrivial = "Rank1OrTrivial"
    ReducibleWord = "ReducibleWord"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    detail: str
    matrix: Optional[Matrix] = None

    def __post_init__(self):
        if (self.matrix is not None) != (self.verdict is Verdict.Rank1OrTrivial):
            raise ValueError("A coefficient matrix accompanies exactly the Rank1OrTrivial verdict")
        if self.matrix is not None and determinant(self.matrix).is_zero():
            raise ValueError("Rank1OrTrivial matrix must be non-degenerate")

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "detail": self.detail,
            "matrix": None if self.matrix is None else [[str(a) for a in row] for row in self.matrix],
        }


def determinant(matrix: Matrix) -> GaussianRational:
    (a11, a12), (a21, a22) = matrix
    return a11 * a22 - a12 * a21


def _linear_part(P: WeylElement) -> Optional[Tuple[GaussianRational, GaussianRational, GaussianRational]]:
    """(coefficient of z, coefficient of Dz, constant) when P is affine in (z, Dz)."""
    if any(k not in {(0, 0), (1, 0), (0, 1)} for k, _ in P.items()):
        return None
    return P.coefficient(1, 0), P.coefficient(0, 1), P.coefficient(0, 0)


def symplectic_matrix(w: AutomorphismWord) -> Tuple[Matrix, Tuple[GaussianRational, GaussianRational]]:
    """
    For an affine b: b(x) = a11 z + a12 Dz + c1, b(Dx) = a21 z + a22 Dz + c2.
    Returns the matrix and the offsets (c1, c2).
    """
    quad = bispectral_quadruple(w)
    lam, delta = _linear_part(quad.Lambda), _linear_part(quad.Delta)
    if lam is None or delta is None:
        raise ValueError("b is not affine on generators; word is not of the all-quadratic kind")
    matrix = ((lam[0], lam[1]), (delta[0], delta[1]))
    return matrix, (lam[2], delta[2])


def classify(w: AutomorphismWord) -> Classification:
    sequence = w.polynomial_sequence()

    for label, poly in sequence:
        if poly.is_zero():
            return Classification(
                Verdict.ReducibleWord,
                f"{label} is a zero placeholder: neighbouring factors of the same kind merge "
                f"(or the outer factor is a trivial conjugation), so the word shortens",
            )
        if poly.degree <= 1:
            return Classification(
                Verdict.ReducibleWord,
                f"{label} = {poly} has degree {poly.degree}: an affine change of variables "
                f"removes this factor; only degrees >= 2 produce new operators",
            )

    degrees = [poly.degree for _, poly in sequence]
    if all(d == 2 for d in degrees):
        matrix, offsets = symplectic_matrix(w)
        a12 = matrix[0][1]
        if a12.is_zero():
            nature = "a12 = 0: b maps C[x] onto C[z], no bispectral operators"
        else:
            nature = "a12 != 0: bispectral operators of rank 1"
        detail = (
            f"all polynomials quadratic; b(x) = {matrix[0][0]} z + {matrix[0][1]} Dz + {offsets[0]}, "
            f"b(Dx) = {matrix[1][0]} z + {matrix[1][1]} Dz + {offsets[1]}; {nature}"
        )
        return Classification(Verdict.Rank1OrTrivial, detail, matrix)

    if w.m == 1 and sorted(degrees)[0] == 2 and sorted(degrees)[1] >= 3:
        which = "p" if degrees[0] == 2 else "q"
        return Classification(
            Verdict.AiryReducible,
            f"m = 1 with deg {which} = 2: L and Lambda reduce to generalized Airy operators "
            f"by affine changes and a gauge factor",
        )

    logger.debug(f"Word {w} with degrees {degrees} gives a new bispectral pair")
    return Classification(Verdict.NewBispectral, f"degrees {degrees}: new bispectral pair")
