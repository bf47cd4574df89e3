from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from .gaussian import ONE, ZERO, GaussianRational, Scalar


def _trim(coeffs: Sequence[GaussianRational]) -> Tuple[GaussianRational, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1].is_zero():
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial over Q(i); `coeffs[k]` multiplies t^k."""

    coeffs: Tuple[GaussianRational, ...] = ()

    def __post_init__(self):
        coeffs = [GaussianRational.coerce(c) for c in self.coeffs]
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Scalar]) -> "UniPoly":
        return cls(tuple(GaussianRational.coerce(c) for c in coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls((GaussianRational.coerce(c),))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "UniPoly":
        return cls((ZERO,) * k + (GaussianRational.coerce(c),))

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(c * k for k, c in enumerate(self.coeffs) if k > 0))

    def __call__(self, value):
        # Horner's scheme; works for any value type closed under + and *.
        result = ZERO
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def complex_coefficients(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coeffs], dtype=np.complex128)

    def evaluate_numeric(self, values) -> np.ndarray:
        values = np.asarray(values, dtype=np.complex128)
        if self.is_zero():
            return np.zeros_like(values)
        return np.polynomial.polynomial.polyval(values, self.complex_coefficients())

    def _binary(self, other, op):
        if not isinstance(other, UniPoly):
            try:
                other = UniPoly.constant(other)
            except TypeError:
                return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(op(self.coefficient(k), other.coefficient(k)) for k in range(n)))

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            try:
                c = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
            return UniPoly(tuple(a * c for a in self.coeffs))
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = GaussianRational.coerce(other)
        return UniPoly(tuple(a / c for a in self.coeffs))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Only non-negative integer powers are supported, got {exponent!r}")
        result = UniPoly((ONE,))
        for _ in range(exponent):
            result = result * self
        return result

    def as_constant(self):
        if self.degree <= 0:
            return self.coefficient(0)
        return None

    def to_string(self, var: str = "t") -> str:
        """Canonical text: `coef * t^k` terms in descending powers joined by " + "."""
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            terms.append(format_term(c, [(var, k)]))
        return " + ".join(terms) if terms else "0"

    def __str__(self):
        return self.to_string()


def format_coefficient(c: GaussianRational) -> str:
    text = str(c)
    if c.re != 0 and c.im != 0:
        return f"({text})"
    return text


def format_term(c: GaussianRational, factors: Sequence[Tuple[str, int]]) -> str:
    """Render `c * v1^e1 * v2^e2`, dropping zero exponents and unit coefficients."""
    powers = [name if e == 1 else f"{name}^{e}" for name, e in factors if e > 0]
    if not powers:
        return format_coefficient(c)
    monomial = " * ".join(powers)
    if c == 1:
        return monomial
    if c == -1:
        return f"-{monomial}"
    return f"{format_coefficient(c)} * {monomial}"
