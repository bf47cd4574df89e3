import cmath
import math

import numpy as np
import pytest

from src.algebra import UniPoly, WeylElement
from src.automorphism import AutomorphismWord, bispectral_quadruple, pair_word, word_from_sequence
from src.params import QuadratureSpec
from src.quad import (
    ChainQuadraturePsi,
    DivergentConfigurationError,
    Moment,
    TensorProductPsi,
    TruncationError,
    apply_operator_x,
    apply_operator_z,
    build_integral_rep,
    eval_psi,
    get_psi_evaluator,
    graded_panel_rule,
    integration_by_parts_residuals,
    normalized_residual,
    with_x_derivative,
    with_z_derivative,
)
from src.verify import richardson_derivative

from .conftest import cubic

POINTS = [(0.5, -0.5), (-1.0, 0.5), (0.3, 1.0), (0.0, 0.0), (0.25 + 0.5j, -0.75)]


def relative(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def test_graded_panel_rule_integrates_polynomials():
    t, w = graded_panel_rule(8, 6, 0.5)
    assert np.all(np.diff(t) > 0) and t[0] > 0 and t[-1] < 1
    assert w.sum() == pytest.approx(1.0, abs=1e-14)
    assert (w * t ** 7).sum() == pytest.approx(1 / 8, abs=1e-14)


def test_moments():
    assert Moment() == Moment(0, 0)
    with pytest.raises(ValueError):
        Moment(-1, 0)


def test_derivative_moments(cubic_rep):
    assert with_x_derivative(cubic_rep).moment == Moment(0, 1)
    assert with_x_derivative(with_x_derivative(cubic_rep)).moment == Moment(0, 2)
    both = with_z_derivative(with_x_derivative(cubic_rep)).moment
    assert both == with_x_derivative(with_z_derivative(cubic_rep)).moment == Moment(1, 1)


@pytest.mark.parametrize("x, z", POINTS)
def test_cubic_psi_is_symmetric(cubic_rep, m1_spec, x, z):
    a = eval_psi(cubic_rep, x, z, m1_spec)
    b = eval_psi(cubic_rep, z, x, m1_spec)
    assert relative(a.value, b.value) <= 1e-8


def test_truncation_ladder_converges(cubic_rep, m1_spec):
    result = eval_psi(cubic_rep, 0.5, -0.5, m1_spec)
    assert 0.0 <= result.est_error <= m1_spec.rel_tol
    doubled = eval_psi(cubic_rep, 0.5, -0.5, m1_spec, truncations=[2 * T for T in result.truncations])
    assert relative(result.value, doubled.value) <= 10 * m1_spec.rel_tol


def test_truncation_failure_is_reported(cubic_rep):
    spec = QuadratureSpec(truncation=0.25, rel_tol=1e-14, max_doublings=1)
    with pytest.raises(TruncationError, match="truncation failure") as info:
        eval_psi(cubic_rep, 0.5, -0.5, spec)
    assert info.value.last_estimate > 1e-14


def test_divergent_and_out_of_range(m1_spec, cubic_rep):
    quadratic = UniPoly.monomial(2)
    with pytest.raises(DivergentConfigurationError, match="divergent configuration"):
        build_integral_rep(pair_word(quadratic, quadratic))
    with pytest.raises(ValueError, match="max_radius"):
        eval_psi(cubic_rep, 2.0, 0.0, m1_spec)


def test_depth_cap():
    word = word_from_sequence([cubic()] * 6)
    with pytest.raises(ValueError, match="exceeds the default cap"):
        build_integral_rep(word)
    with pytest.warns(UserWarning):
        rep = build_integral_rep(word, allow_m_gt_2=True)
    assert rep.m == 3 and len(rep.plan) == 6


def test_empty_word_closed_form(m1_spec):
    rep = build_integral_rep(AutomorphismWord())
    x, z = 0.7, -0.4 + 0.2j
    assert eval_psi(rep, x, z, m1_spec).value == pytest.approx(cmath.exp(x * z), rel=1e-15)
    dz = eval_psi(with_z_derivative(rep), x, z, m1_spec).value
    assert dz == pytest.approx(x * cmath.exp(x * z), rel=1e-15)
    mixed = eval_psi(rep.with_moment(Moment(1, 1)), x, z, m1_spec).value
    assert mixed == pytest.approx((1 + x * z) * cmath.exp(x * z), rel=1e-14)


def test_mixed_case_matches_trapezoid_oracle(mixed_rep, m1_spec):
    """
    With p = t^2 the u-integral over R is sqrt(pi) e^{(z - v)^2 / 4}; the remaining
    v-integral runs in from i*infinity and out along R+.
    """
    x, z = 0.3, -0.2
    T, steps = 6.0, 10_000
    t = np.linspace(0.0, T, steps + 1)

    def g(v):
        return math.sqrt(math.pi) * np.exp((z - v) ** 2 / 4 + x * v - v ** 4)

    oracle = -np.trapezoid(1j * g(1j * t), t) + np.trapezoid(g(t + 0j), t)
    result = eval_psi(mixed_rep, x, z, m1_spec)
    assert relative(result.value, oracle) <= 1e-6


@pytest.mark.parametrize("x, z", POINTS[:3])
def test_moment_insertion_matches_finite_differences(cubic_rep, m1_spec, x, z):
    base = eval_psi(cubic_rep, x, z, m1_spec)
    evaluator = get_psi_evaluator(cubic_rep)

    def psi(a, b):
        return evaluator.integrate(a, b, base.truncations, m1_spec)[0]

    dx = eval_psi(with_x_derivative(cubic_rep), x, z, m1_spec).value
    dz = eval_psi(with_z_derivative(cubic_rep), x, z, m1_spec).value
    assert normalized_residual(dx, richardson_derivative(lambda s: psi(s, z), x), base.value) <= 1e-5
    assert normalized_residual(dz, richardson_derivative(lambda s: psi(x, s), z), base.value) <= 1e-5


def test_apply_operator_basics(cubic_rep, m1_spec):
    x, z = 0.5, -0.5
    psi = eval_psi(cubic_rep, x, z, m1_spec).value
    one = apply_operator_x(WeylElement.scalar(1), cubic_rep, x, z, m1_spec)
    assert one.value == pytest.approx(psi, rel=1e-14)
    d = apply_operator_x(WeylElement.d(), cubic_rep, x, z, m1_spec).value
    assert d == pytest.approx(eval_psi(with_x_derivative(cubic_rep), x, z, m1_spec).value, rel=1e-14)
    P, Q = WeylElement({(1, 2): 3, (0, 0): -1}), WeylElement({(2, 1): 1})
    combined = apply_operator_x(P + Q * 2, cubic_rep, x, z, m1_spec).value
    separate = apply_operator_x(P, cubic_rep, x, z, m1_spec).value + 2 * apply_operator_x(Q, cubic_rep, x, z, m1_spec).value
    assert combined == pytest.approx(separate, rel=1e-12)


def test_cubic_eigenvalue_equations(cubic_word, cubic_rep, m1_spec):
    quad = bispectral_quadruple(cubic_word)
    x, z = 0.5, -0.5
    psi = eval_psi(cubic_rep, x, z, m1_spec).value
    L_psi = apply_operator_x(quad.L, cubic_rep, x, z, m1_spec).value
    Lambda_psi = apply_operator_z(quad.Lambda, cubic_rep, x, z, m1_spec).value
    assert normalized_residual(L_psi, z * psi, psi) <= 1e-6
    assert normalized_residual(Lambda_psi, x * psi, psi) <= 1e-6


def test_chain_contraction_matches_dense_tensor_product(cubic_rep, mixed_rep):
    spec = QuadratureSpec(nodes_per_panel=12, panels=8)
    for rep in (cubic_rep, mixed_rep):
        chain, dense = ChainQuadraturePsi(rep), TensorProductPsi(rep)
        levels = chain.truncations_for(0.4, -0.6, spec)
        a, _ = chain.integrate(0.4, -0.6, levels, spec)
        b, _ = dense.integrate(0.4, -0.6, levels, spec)
        assert relative(a, b) <= 1e-11


def test_unknown_method(cubic_rep):
    with pytest.raises(ValueError, match="Unknown evaluation method"):
        get_psi_evaluator(cubic_rep, "monte_carlo")


@pytest.mark.parametrize("x, z", POINTS)
def test_integration_by_parts_residuals(cubic_rep, m1_spec, x, z):
    residuals = integration_by_parts_residuals(cubic_rep, x, z, m1_spec)
    assert residuals["u"] <= 1e-5
    assert residuals["v"] <= 1e-5


def test_contour_label_transpose(m1_spec):
    word = pair_word(cubic(), cubic())
    rep_12 = build_integral_rep(word, [(1, 0), (2, 0)])
    rep_21 = build_integral_rep(word, [(2, 0), (1, 0)])
    x, z = 0.7, -0.3
    a = eval_psi(rep_12, x, z, m1_spec).value
    b = eval_psi(rep_21, z, x, m1_spec).value
    assert relative(a, b) <= 1e-8
