import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from src.algebra import GaussianRational, UniPoly
from src.automorphism import word_from_sequence
from src.contour import (
    ContourError,
    Orientation,
    Ray,
    contour_for,
    convergence_check,
    decay_bound,
    plan_for_word,
    principal_root,
)

from .conftest import random_poly


def degrees_word(degrees):
    return word_from_sequence([UniPoly.monomial(d) for d in degrees])


def test_cubic_contour_matches_gamma_one():
    pair = contour_for(UniPoly.monomial(3, Fraction(1, 3)), 1, 0)
    assert pair.incoming.direction == pytest.approx(cmath.exp(2j * math.pi / 3), abs=1e-14)
    assert pair.outgoing.direction == pytest.approx(1.0, abs=1e-14)
    assert pair.incoming.orientation is Orientation.Incoming
    assert pair.outgoing.orientation.sign == 1


def test_quadratic_contour_is_real_line():
    pair = contour_for(UniPoly.monomial(2), 1, 0)
    assert pair.incoming.direction == -1
    assert pair.outgoing.direction == 1


def test_quartic_with_leading_two():
    pair = contour_for(UniPoly.monomial(4, 2), 2, 0)
    assert pair.alpha == pytest.approx(2 ** 0.25)
    assert pair.incoming.direction == pytest.approx(-1.0, abs=1e-14)
    assert pair.outgoing.direction == pytest.approx(1.0, abs=1e-14)


def test_contour_errors():
    with pytest.raises(ContourError, match="unsupported degree"):
        contour_for(UniPoly.monomial(1), 1, 0)
    with pytest.raises(ContourError, match="degenerate contour"):
        contour_for(UniPoly.monomial(3), 2, 5)
    with pytest.raises(ContourError):
        Ray(1.5, Orientation.Outgoing)


def test_principal_root_branch():
    root = principal_root(-1 + 0j, 2)
    assert root == pytest.approx(1j)
    assert -math.pi / 3 < cmath.phase(principal_root(1j, 3)) <= math.pi / 3


def test_decay_along_rays(rng):
    for _ in range(30):
        poly = random_poly(rng, rng.randint(2, 6))
        n = poly.degree
        C = decay_bound(poly)
        lead = abs(complex(poly.leading))
        t = np.linspace(1.0, 10.0, 200)
        for k1, k2 in [(1, 0), (n - 1, 0), (1, n - 1)]:
            if (k1 - k2) % n == 0:
                continue
            pair = contour_for(poly, k1, k2)
            for ray in pair.rays:
                assert abs(ray.direction) == pytest.approx(1.0, abs=1e-14)
                values = poly.evaluate_numeric(ray.direction * t).real
                assert np.all(values >= lead * t ** n / 2 - C - 1e-9)
            assert pair.incoming.direction != pair.outgoing.direction


def test_leading_term_is_real_positive_along_rays():
    poly = UniPoly.from_coefficients([0, 0, GaussianRational(1, 1), 0, GaussianRational(0, 3)])
    pair = contour_for(poly, 3, 1)
    for ray in pair.rays:
        leading = complex(poly.leading) * ray.direction ** poly.degree
        assert leading.imag == pytest.approx(0.0, abs=1e-12)
        assert leading.real > 0


@pytest.mark.parametrize(
    "degrees, ok, position",
    [
        ((3, 3), True, None),
        ((2, 2), False, ("p1", "q1")),
        ((2, 3, 3, 2), True, None),
        ((3, 2, 2, 3), False, ("q1", "p2")),
        ((3, 1), False, ("q1",)),
    ],
)
def test_convergence_check(degrees, ok, position):
    report = convergence_check(degrees_word(degrees))
    assert bool(report) is ok
    assert report.position == position


def test_convergence_check_is_order_sensitive():
    assert convergence_check(degrees_word((2, 3, 2, 3)))
    assert not convergence_check(degrees_word((3, 2, 2, 3)))


def test_plan_for_word():
    word = degrees_word((3, 4))
    plan = plan_for_word(word, [None, (2, 0)])
    assert len(plan) == 2 and plan.m == 1
    assert (plan.pairs[0].k1, plan.pairs[0].k2) == (1, 0)
    assert (plan.pairs[1].k1, plan.pairs[1].k2) == (2, 0)
    with pytest.raises(ContourError, match="layer q1"):
        plan_for_word(word, [None, (1, 5)])
