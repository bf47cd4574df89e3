import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from src.algebra import UniPoly
from src.automorphism import AutomorphismWord, is_self_dual, pair_word
from src.constants import ASYMMETRY_POINT, SVD_CUTOFF, SYMMETRY_SAMPLE_POINTS
from src.params import QuadratureSpec, default_quadrature_spec
from src.quad import build_integral_rep, eval_psi

logger = logging.getLogger(__name__)

Label = Tuple[int, int]
LABELS: Tuple[Label, ...] = ((1, 1), (2, 2), (1, 2), (2, 1))


def cubic_word() -> AutomorphismWord:
    """p1 = q1 = t^3/3."""
    cubic = UniPoly.monomial(3, Fraction(1, 3))
    return pair_word(cubic, cubic)


def _name(label: Label) -> str:
    return f"{label[0]}{label[1]}"


@dataclass(frozen=True)
class SymmetryReport:
    defects: Dict[str, float]
    transpose_defects: Dict[str, float]
    witness: float
    singular_values: Tuple[float, ...]
    rank: int
    gap: float
    self_dual: bool

    def to_dict(self) -> dict:
        return {
            "defects": dict(self.defects),
            "transpose_defects": dict(self.transpose_defects),
            "witness": self.witness,
            "singular_values": list(self.singular_values),
            "rank": self.rank,
            "gap": self.gap,
            "self_dual": self.self_dual,
        }


def numerical_rank(matrix: np.ndarray, cutoff: float = SVD_CUTOFF) -> Tuple[int, Tuple[float, ...], float]:
    """
    Rank as the number of singular values above cutoff * sigma_1, and the gap
    sigma_r / sigma_{r+1} at that rank (inf when nothing is cut).
    """
    sigma = np.linalg.svd(matrix, compute_uv=False)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0, tuple(float(s) for s in sigma), float("inf")
    rank = int(np.sum(sigma > cutoff * sigma[0]))
    if rank < sigma.size:
        gap = float(sigma[rank - 1] / sigma[rank]) if sigma[rank] > 0 else float("inf")
    else:
        gap = float("inf")
    return rank, tuple(float(s) for s in sigma), gap


def symmetry_report(
    spec: Optional[QuadratureSpec] = None,
    grid: Sequence[Tuple[complex, complex]] = SYMMETRY_SAMPLE_POINTS,
    method: str = "auto",
    progress: bool = False,
) -> SymmetryReport:
    """
    psi_kl integrates u over Gamma_k and v over Gamma_l, with Gamma_k made of
    the incoming ray e^{2 pi i k/3} and the outgoing ray R+. Each psi_kl is
    sampled at (x, z) and (z, x) for every grid point; defects are normalized
    by the largest |psi| seen at that point.
    """
    word = cubic_word()
    spec = spec or default_quadrature_spec(1)
    reps = {label: build_integral_rep(word, [(label[0], 0), (label[1], 0)]) for label in LABELS}

    points = [(complex(x), complex(z)) for x, z in grid]
    if (complex(ASYMMETRY_POINT[0]), complex(ASYMMETRY_POINT[1])) not in points:
        points.append((complex(ASYMMETRY_POINT[0]), complex(ASYMMETRY_POINT[1])))

    values: Dict[Label, np.ndarray] = {label: np.zeros(len(points), dtype=complex) for label in LABELS}
    swapped: Dict[Label, np.ndarray] = {label: np.zeros(len(points), dtype=complex) for label in LABELS}
    iterator = tqdm(enumerate(points), total=len(points), desc="symmetry") if progress else enumerate(points)
    for i, (x, z) in iterator:
        for label in LABELS:
            values[label][i] = eval_psi(reps[label], x, z, spec, method=method).value
            swapped[label][i] = eval_psi(reps[label], z, x, spec, method=method).value

    scale = np.max(np.abs(np.stack([values[l] for l in LABELS] + [swapped[l] for l in LABELS])), axis=0)
    scale = np.where(scale > 0, scale, 1.0)

    def sup(diff: np.ndarray) -> float:
        return float(np.max(np.abs(diff) / scale))

    defects = {_name(label): sup(values[label] - swapped[label]) for label in LABELS}
    defects["12+21"] = sup(values[(1, 2)] + values[(2, 1)] - swapped[(1, 2)] - swapped[(2, 1)])
    transpose_defects = {
        _name(label): sup(values[label] - swapped[(label[1], label[0])]) for label in LABELS
    }

    w = points.index((complex(ASYMMETRY_POINT[0]), complex(ASYMMETRY_POINT[1])))
    witness = float(abs(values[(1, 2)][w] - swapped[(1, 2)][w]) / scale[w])

    sample = np.stack([(values[label] + swapped[label]) / scale for label in LABELS], axis=1)
    rank, sigma, gap = numerical_rank(sample)

    report = SymmetryReport(
        defects=defects,
        transpose_defects=transpose_defects,
        witness=witness,
        singular_values=sigma,
        rank=rank,
        gap=gap,
        self_dual=is_self_dual(word),
    )
    logger.info(f"symmetric span rank {rank}, gap {gap:.3e}, witness {witness:.3e}")
    return report
