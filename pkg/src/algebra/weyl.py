from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from .gaussian import ONE, ZERO, GaussianRational, Scalar
from .polynomial import UniPoly, format_term

Key = Tuple[int, int]
Number = Union[int, Fraction]

X_VARIABLES = ("x", "D")
Z_VARIABLES = ("z", "Dz")


class UndefinedOrderError(ValueError):
    pass


class WeylElement:
    """
    Normal-ordered element of the Weyl algebra C<x, D>/(Dx - xD - 1).

    `terms` maps (a, b) to the coefficient of x^a D^b; zero coefficients are
    never stored, so equal elements have equal term maps. The same class
    represents operators in (z, Dz); only the rendering differs.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, Scalar] = None):
        clean: Dict[Key, GaussianRational] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"Exponents must be non-negative, got ({a}, {b})")
            c = GaussianRational.coerce(c)
            if not c.is_zero():
                clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_terms(cls, terms: Dict[Key, GaussianRational]) -> "WeylElement":
        # Caller guarantees nonzero GaussianRational values and valid keys.
        element = cls()
        element._terms = terms
        return element

    @classmethod
    def _from_accumulator(cls, acc: Mapping[Key, GaussianRational]) -> "WeylElement":
        return cls({k: v for k, v in acc.items() if not v.is_zero()})

    @classmethod
    def zero(cls) -> "WeylElement":
        return cls()

    @classmethod
    def scalar(cls, c: Scalar) -> "WeylElement":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: Scalar = 1) -> "WeylElement":
        return cls({(a, b): c})

    @classmethod
    def x(cls) -> "WeylElement":
        return cls({(1, 0): ONE})

    @classmethod
    def d(cls) -> "WeylElement":
        return cls({(0, 1): ONE})

    @classmethod
    def from_x_poly(cls, p: UniPoly) -> "WeylElement":
        return cls({(k, 0): c for k, c in enumerate(p.coeffs)})

    @classmethod
    def from_d_poly(cls, p: UniPoly) -> "WeylElement":
        return cls({(0, k): c for k, c in enumerate(p.coeffs)})

    @property
    def terms(self) -> Mapping[Key, GaussianRational]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[Key, GaussianRational]]:
        return self._terms.items()

    def coefficient(self, a: int, b: int) -> GaussianRational:
        return self._terms.get((a, b), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def as_constant(self):
        if all(k == (0, 0) for k in self._terms):
            return self._terms.get((0, 0), ZERO)
        return None

    @staticmethod
    def _coerce(other):
        if isinstance(other, WeylElement):
            return other
        return WeylElement.scalar(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc = defaultdict(lambda: ZERO, self._terms)
        for k, c in other._terms.items():
            acc[k] = acc[k] + c
        return WeylElement._from_accumulator(acc)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return multiply(self, other)
        try:
            c = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return WeylElement({k: v * c for k, v in self._terms.items()})

    def __rmul__(self, other):
        try:
            c = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return WeylElement({k: c * v for k, v in self._terms.items()})

    def __truediv__(self, other):
        c = GaussianRational.coerce(other)
        return WeylElement({k: v / c for k, v in self._terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Only non-negative integer powers are supported, got {exponent!r}")
        result = WeylElement.scalar(ONE)
        for _ in range(exponent):
            result = multiply(result, self)
        return result

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self._terms == other._terms
        try:
            return self._terms == WeylElement.scalar(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self):
        """Terms in canonical order: D-exponent descending, then x-exponent descending."""
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))

    def to_string(self, variables: Tuple[str, str] = X_VARIABLES) -> str:
        x_name, d_name = variables
        parts = [format_term(c, [(x_name, a), (d_name, b)]) for (a, b), c in self.sorted_terms()]
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"WeylElement({self.to_string()})"


@lru_cache(maxsize=None)
def _reorder_coefficients(b: int, c: int) -> Tuple[int, ...]:
    """C(b, k) C(c, k) k! for k = 0 .. min(b, c)."""
    return tuple(comb(b, k) * comb(c, k) * factorial(k) for k in range(min(b, c) + 1))


def _unpack(P: "WeylElement") -> List[Tuple[int, int, Number, Number]]:
    # Integral parts become ints; Fraction arithmetic only where denominators appear.
    def part(f: Fraction) -> Number:
        return f.numerator if f.denominator == 1 else f
    return [(a, b, part(c.re), part(c.im)) for (a, b), c in P.items()]


def multiply(P: WeylElement, Q: WeylElement) -> WeylElement:
    """
    Normal-ordered product, using
    D^b x^c = sum_k C(b, k) C(c, k) k! x^(c-k) D^(b-k).
    """
    if P.is_zero() or Q.is_zero():
        return WeylElement.zero()
    left, right = _unpack(P), _unpack(Q)
    acc_re: Dict[Key, Number] = {}
    acc_im: Dict[Key, Number] = {}
    for a, b, pr, pi in left:
        for c, d, qr, qi in right:
            if pi or qi:
                re, im = pr * qr - pi * qi, pr * qi + pi * qr
            else:
                re, im = pr * qr, 0
            for k, w in enumerate(_reorder_coefficients(b, c)):
                key = (a + c - k, b + d - k)
                if re:
                    acc_re[key] = acc_re.get(key, 0) + re * w
                if im:
                    acc_im[key] = acc_im.get(key, 0) + im * w
    terms = {}
    for key in acc_re.keys() | acc_im.keys():
        re, im = acc_re.get(key, 0), acc_im.get(key, 0)
        if re or im:
            terms[key] = GaussianRational(re, im)
    return WeylElement._from_terms(terms)


def commutator(P: WeylElement, Q: WeylElement) -> WeylElement:
    return multiply(P, Q) - multiply(Q, P)


def compose_poly(p: UniPoly, A: WeylElement) -> WeylElement:
    """p evaluated at the operator A."""
    result = WeylElement.zero()
    for c in reversed(p.coeffs):
        result = multiply(result, A) + c
    return result


def apply_to_monomial(P: WeylElement, k: int) -> UniPoly:
    """P(x, d/dx) applied to x^k, as a polynomial in x."""
    if k < 0:
        raise ValueError(f"Monomial power must be non-negative, got {k}")
    acc: Dict[int, GaussianRational] = defaultdict(lambda: ZERO)
    for (a, b), c in P.items():
        if b > k:
            continue
        falling = factorial(k) // factorial(k - b)
        acc[a + k - b] = acc[a + k - b] + c * falling
    if not acc:
        return UniPoly()
    top = max(acc)
    return UniPoly(tuple(acc.get(n, ZERO) for n in range(top + 1)))


def apply_to_poly(P: WeylElement, f: UniPoly) -> UniPoly:
    result = UniPoly()
    for k, c in enumerate(f.coeffs):
        if not c.is_zero():
            result = result + apply_to_monomial(P, k) * c
    return result


def order_and_degree(P: WeylElement) -> Tuple[int, int]:
    if P.is_zero():
        raise UndefinedOrderError("undefined order: the zero operator has no order or degree")
    order = max(b for (_, b) in P._terms)
    degree = max(a for (a, _) in P._terms)
    return order, degree
