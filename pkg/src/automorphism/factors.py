from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from src.algebra import GaussianRational, UniPoly, WeylElement, multiply

Key = Tuple[int, int]


class FactorKind(str, Enum):
    AdX = "AdX"
    AdD = "AdD"


@dataclass(frozen=True)
class ElementaryFactor:
    """
    e^{ad p(x)} (kind AdX) or e^{ad q(D)} (kind AdD). A zero polynomial is
    only meaningful as a placeholder inside an AutomorphismWord.
    """
    kind: FactorKind
    poly: UniPoly

    @classmethod
    def ad_x(cls, p: UniPoly) -> "ElementaryFactor":
        return cls(FactorKind.AdX, p)

    @classmethod
    def ad_d(cls, q: UniPoly) -> "ElementaryFactor":
        return cls(FactorKind.AdD, q)

    @property
    def is_placeholder(self) -> bool:
        return self.poly.is_zero()

    def inverse(self) -> "ElementaryFactor":
        return ElementaryFactor(self.kind, -self.poly)

    def generator_images(self) -> Tuple[WeylElement, WeylElement]:
        """Images of (x, D)."""
        x, d = WeylElement.x(), WeylElement.d()
        shift = self.poly.derivative()
        if self.kind is FactorKind.AdX:
            return x, d - WeylElement.from_x_poly(shift)
        return x + WeylElement.from_d_poly(shift), d

    def __str__(self):
        name = "p" if self.kind is FactorKind.AdX else "q"
        return f"{self.kind.value}({name} = {self.poly})"


def _rows(P: WeylElement, by_d: bool) -> Dict[int, Dict[Key, GaussianRational]]:
    """Terms of P grouped by D-exponent (by_d) or by x-exponent."""
    rows: Dict[int, Dict[Key, GaussianRational]] = defaultdict(dict)
    for (a, b), c in P.items():
        rows[b if by_d else a][(a, b)] = c
    return rows


def substitute_d(P: WeylElement, d_image: WeylElement) -> WeylElement:
    """
    P with D -> d_image and x fixed. Writing P = sum_b A_b(x) D^b, Horner's
    rule gives (... (A_B E + A_{B-1}) E ...) E + A_0 with E = d_image.
    """
    if P.is_zero():
        return P
    rows = _rows(P, by_d=True)
    top = max(rows)
    result = WeylElement({(a, 0): c for (a, _), c in rows[top].items()})
    for b in range(top - 1, -1, -1):
        result = multiply(result, d_image)
        if b in rows:
            result = result + WeylElement({(a, 0): c for (a, _), c in rows[b].items()})
    return result


def substitute_x(P: WeylElement, x_image: WeylElement) -> WeylElement:
    """
    P with x -> x_image and D fixed. Writing P = sum_a x^a B_a(D), Horner's
    rule gives F (... F (F B_A + B_{A-1}) ...) + B_0 with F = x_image.
    """
    if P.is_zero():
        return P
    rows = _rows(P, by_d=False)
    top = max(rows)
    result = WeylElement({(0, b): c for (_, b), c in rows[top].items()})
    for a in range(top - 1, -1, -1):
        result = multiply(x_image, result)
        if a in rows:
            result = result + WeylElement({(0, b): c for (_, b), c in rows[a].items()})
    return result


def apply_factor(f: ElementaryFactor, P: WeylElement) -> WeylElement:
    if f.is_placeholder:
        return P
    x_image, d_image = f.generator_images()
    if f.kind is FactorKind.AdX:
        return substitute_d(P, d_image)
    return substitute_x(P, x_image)


@dataclass(frozen=True)
class AutomorphismWord:
    """
    sigma = e^{ad p1(x)} e^{ad q1(D)} ... e^{ad pm(x)} e^{ad qm(D)}.

    `factors` are kept as given; `pairs()` reads them into the alternating
    shape (p1, q1, ..., pm, qm), inserting zero placeholders where two factors
    of the same kind are adjacent or the word starts with AdD / ends with AdX.
    """
    factors: Tuple[ElementaryFactor, ...] = ()

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[UniPoly, UniPoly]]) -> "AutomorphismWord":
        factors = []
        for p, q in pairs:
            factors.append(ElementaryFactor.ad_x(p))
            factors.append(ElementaryFactor.ad_d(q))
        return cls(tuple(factors))

    @classmethod
    def from_factors(cls, factors: Iterable[ElementaryFactor]) -> "AutomorphismWord":
        return cls(tuple(factors))

    def pairs(self) -> List[Tuple[UniPoly, UniPoly]]:
        out: List[Tuple[UniPoly, UniPoly]] = []
        pending_p = None
        for f in self.factors:
            if f.kind is FactorKind.AdX:
                if pending_p is not None:
                    out.append((pending_p, UniPoly()))
                pending_p = f.poly
            else:
                out.append((pending_p if pending_p is not None else UniPoly(), f.poly))
                pending_p = None
        if pending_p is not None:
            out.append((pending_p, UniPoly()))
        return out

    @property
    def m(self) -> int:
        return len(self.pairs())

    def polynomial_sequence(self) -> List[Tuple[str, UniPoly]]:
        """(label, poly) for p1, q1, ..., pm, qm."""
        seq = []
        for j, (p, q) in enumerate(self.pairs(), start=1):
            seq.append((f"p{j}", p))
            seq.append((f"q{j}", q))
        return seq

    def degree_sequence(self) -> List[int]:
        return [poly.degree for _, poly in self.polynomial_sequence()]

    def prefix(self, k: int) -> "AutomorphismWord":
        """Word made of the first k (p, q) pairs."""
        return AutomorphismWord.from_pairs(self.pairs()[:k])

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        if not self.factors:
            return "identity"
        return " . ".join(str(f) for f in self.factors)


def apply_word(w: AutomorphismWord, P: WeylElement) -> WeylElement:
    # The leftmost factor acts outermost, so the rightmost one is applied first.
    result = P
    for f in reversed(w.factors):
        result = apply_factor(f, result)
    return result


def inverse_word(w: AutomorphismWord) -> AutomorphismWord:
    return AutomorphismWord(tuple(f.inverse() for f in reversed(w.factors)))


@lru_cache(maxsize=256)
def word_images(w: AutomorphismWord) -> Tuple[WeylElement, WeylElement]:
    """(sigma(x), sigma(D)), cached per word."""
    return apply_word(w, WeylElement.x()), apply_word(w, WeylElement.d())


def pair_word(p: UniPoly, q: UniPoly) -> AutomorphismWord:
    return AutomorphismWord.from_pairs([(p, q)])


def word_from_sequence(polys: Sequence[UniPoly]) -> AutomorphismWord:
    """(p1, q1, ..., pm, qm) as a flat sequence."""
    if len(polys) % 2:
        raise ValueError(f"Expected an even number of polynomials, got {len(polys)}")
    return AutomorphismWord.from_pairs(zip(polys[0::2], polys[1::2]))
