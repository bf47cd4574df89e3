import random
from fractions import Fraction

import pytest

from src.algebra import GaussianRational, UniPoly, WeylElement
from src.automorphism import AutomorphismWord, pair_word
from src.params import default_quadrature_spec
from src.quad import build_integral_rep

SMALL_COEFFICIENTS = (0, 1, -1, 2, -2, GaussianRational.i(), -GaussianRational.i())


def random_weyl(rng: random.Random, max_exponent: int = 4, max_terms: int = 4) -> WeylElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(0, max_exponent), rng.randint(0, max_exponent))
        terms[key] = rng.choice(SMALL_COEFFICIENTS)
    return WeylElement(terms)


def random_poly(rng: random.Random, degree: int) -> UniPoly:
    coeffs = [rng.choice(SMALL_COEFFICIENTS) for _ in range(degree)]
    lead = rng.choice([c for c in SMALL_COEFFICIENTS if c != 0])
    return UniPoly.from_coefficients(coeffs + [lead])


def cubic() -> UniPoly:
    return UniPoly.monomial(3, Fraction(1, 3))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def cubic_word() -> AutomorphismWord:
    return pair_word(cubic(), cubic())


@pytest.fixture
def mixed_word() -> AutomorphismWord:
    """p = t^2, q = t^4."""
    return pair_word(UniPoly.monomial(2), UniPoly.monomial(4))


@pytest.fixture
def cubic_rep(cubic_word):
    return build_integral_rep(cubic_word)


@pytest.fixture
def mixed_rep(mixed_word):
    return build_integral_rep(mixed_word)


@pytest.fixture
def m1_spec():
    return default_quadrature_spec(1)
