from fractions import Fraction

import numpy as np
import pytest
import sympy

from src.algebra import (
    I,
    GaussianRational,
    UndefinedOrderError,
    UniPoly,
    WeylElement,
    apply_to_monomial,
    apply_to_poly,
    commutator,
    compose_poly,
    multiply,
    order_and_degree,
)
from src.algebra.weyl import Z_VARIABLES

from .conftest import random_poly, random_weyl

X = WeylElement.x()
D = WeylElement.d()
ONE = WeylElement.scalar(1)

t = sympy.Symbol("t")


def to_sympy_scalar(c: GaussianRational):
    return sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)


def to_sympy_poly(p: UniPoly):
    return sum((to_sympy_scalar(c) * t ** k for k, c in enumerate(p.coeffs)), sympy.Integer(0))


def sympy_apply(P: WeylElement, f):
    return sum((to_sympy_scalar(c) * t ** a * sympy.diff(f, t, b) for (a, b), c in P.items()), sympy.Integer(0))


def test_gaussian_rational_canonical_form():
    assert GaussianRational(Fraction(2, 4), Fraction(-3, 6)) == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    assert GaussianRational(0, 0) == 0
    assert str(GaussianRational(Fraction(1, 2), Fraction(3, 4))) == "1/2+3/4*i"
    assert str(GaussianRational(0, -1)) == "-i"
    assert str(GaussianRational(Fraction(-2, 3))) == "-2/3"
    assert I * I == -1
    assert (GaussianRational(1, 1) / GaussianRational(1, -1)) == I
    with pytest.raises(TypeError):
        GaussianRational(0.5)


def test_unipoly_trims_and_differentiates():
    p = UniPoly.from_coefficients([1, 0, 3, 0, 0])
    assert p.degree == 2
    assert p.derivative() == UniPoly.from_coefficients([0, 6])
    assert UniPoly().degree == -1
    assert p(2) == 13
    assert np.allclose(p.evaluate_numeric([0.0, 1j]), [1.0, -2.0])
    assert p.to_string() == "3 * t^2 + 1"


def test_multiply_examples():
    assert multiply(D, X) == X * D + 1
    assert multiply(X, D) == WeylElement.monomial(1, 1)
    expected = WeylElement({(2, 2): 1, (1, 1): 4, (0, 0): 2})
    assert multiply(D ** 2, X ** 2) == expected


def test_commutator_examples():
    assert commutator(D, X) == ONE
    assert commutator(X, X ** 2).is_zero()
    assert commutator(D ** 2, X) == D * 2


def test_compose_poly_examples():
    A = X - D ** 2
    expected = WeylElement({(2, 0): 1, (1, 2): -2, (0, 1): -2, (0, 4): 1})
    assert compose_poly(UniPoly.monomial(2), A) == expected
    assert compose_poly(UniPoly.monomial(1), A) == A
    assert compose_poly(UniPoly.constant(1), A) == ONE


def test_apply_to_monomial_examples():
    assert apply_to_monomial(D, 3) == UniPoly.monomial(2, 3)
    assert apply_to_monomial(X * D, 5) == UniPoly.monomial(5, 5)
    assert apply_to_monomial(multiply(D ** 2, X ** 2), 0) == UniPoly.constant(2)


def test_order_and_degree():
    assert order_and_degree(WeylElement({(2, 3): 1, (0, 1): 1})) == (3, 2)
    assert order_and_degree(ONE) == (0, 0)
    cubic_l = D + compose_poly(UniPoly.monomial(2), X - D ** 2)
    assert order_and_degree(cubic_l) == (4, 2)
    with pytest.raises(UndefinedOrderError, match="undefined order"):
        order_and_degree(WeylElement.zero())


def test_canonical_printing():
    P = multiply(D ** 2, X ** 2)
    assert P.to_string() == "x^2 * D^2 + 4 * x * D + 2"
    assert P.to_string(Z_VARIABLES) == "z^2 * Dz^2 + 4 * z * Dz + 2"
    assert WeylElement({(0, 1): GaussianRational(Fraction(1, 2), 1)}).to_string() == "(1/2+i) * D"
    assert WeylElement.zero().to_string() == "0"


def test_action_matches_sympy(rng):
    for _ in range(200):
        P = random_weyl(rng)
        f = random_poly(rng, rng.randint(0, 6))
        ours = to_sympy_poly(apply_to_poly(P, f))
        assert sympy.expand(ours - sympy_apply(P, to_sympy_poly(f))) == 0


def test_product_matches_composed_action(rng):
    for _ in range(200):
        P, Q = random_weyl(rng), random_weyl(rng)
        PQ = multiply(P, Q)
        for k in range(9):
            monomial = UniPoly.monomial(k)
            assert apply_to_poly(PQ, monomial) == apply_to_poly(P, apply_to_poly(Q, monomial))


def test_associativity_and_leibniz(rng):
    for _ in range(200):
        P, Q, R = random_weyl(rng), random_weyl(rng), random_weyl(rng)
        assert multiply(multiply(P, Q), R) == multiply(P, multiply(Q, R))
        lhs = commutator(P, multiply(Q, R))
        rhs = multiply(commutator(P, Q), R) + multiply(Q, commutator(P, R))
        assert lhs == rhs


def test_normal_form_is_canonical(rng):
    for _ in range(50):
        P, Q = random_weyl(rng), random_weyl(rng)
        product = multiply(P, Q)
        assert WeylElement(product.terms) == product
        assert hash(WeylElement(product.terms)) == hash(product)
        assert all(not c.is_zero() for _, c in product.items())
