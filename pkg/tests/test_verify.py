import itertools
import math

import pytest

from src.algebra import UniPoly, WeylElement
from src.automorphism import AutomorphismWord, Verdict, pair_word, word_from_sequence
from src.constants import COARSE_GRID_VALUES, DEFAULT_GRID_VALUES
from src.params import QuadratureSpec, default_quadrature_spec
from src.quad import build_integral_rep
from src.verify import (
    VerificationTask,
    contour_independence,
    cross_check_derivatives,
    residual,
    symmetry_report,
    verify_bispectral,
)

from .conftest import cubic

DEFAULT_GRID = tuple(itertools.product(DEFAULT_GRID_VALUES, DEFAULT_GRID_VALUES))
COARSE_GRID = tuple(itertools.product(COARSE_GRID_VALUES, COARSE_GRID_VALUES))


def test_residual_normalization():
    assert residual(1.0, 1.0, 0.0) == 0.0
    assert residual(0.0, 0.0, 0.0) == 0.0
    assert residual(2.0, 1.0, 1.0) == pytest.approx(1 / 3)


def test_task_requires_grid(cubic_word):
    with pytest.raises(ValueError, match="at least one grid point"):
        VerificationTask(word=cubic_word, grid=())


def test_cubic_word_certified(cubic_word):
    task = VerificationTask(word=cubic_word, grid=DEFAULT_GRID, probes=(WeylElement.x(),))
    report = verify_bispectral(task, workers=4)
    assert report.classification.verdict is Verdict.NewBispectral
    assert report.tolerance == 1e-6
    assert not report.inconclusive
    assert report.passed
    assert report.max_residual <= 1e-6
    assert len(report.records) == len(DEFAULT_GRID) * 5


def test_empty_word_is_exact():
    task = VerificationTask(word=AutomorphismWord(), grid=((0.5, -1.0), (1.0, 1.0)), probes=(WeylElement.x() ** 2,))
    with pytest.warns(UserWarning):
        report = verify_bispectral(task)
    assert report.passed
    assert report.max_residual <= 1e-15


def test_mixed_case(mixed_word):
    task = VerificationTask(word=mixed_word, grid=DEFAULT_GRID, tol=1e-6)
    with pytest.warns(UserWarning, match="AiryReducible"):
        report = verify_bispectral(task, workers=4)
    assert report.classification.verdict is Verdict.AiryReducible
    assert report.passed


def test_report_artifacts(cubic_word):
    task = VerificationTask(word=cubic_word, grid=((0.5, -0.5), (0.0, 0.25j)))
    report = verify_bispectral(task)
    payload = report.to_dict()
    assert set(payload) >= {"classification", "operators", "residuals", "pass"}
    assert payload["operators"]["L"] == "D^4 + -2 * x * D^2 + -D + x^2"
    assert payload["residuals"][0]["x"] == {"re": 0.5, "im": 0.0}
    frame = report.to_frame()
    assert list(frame.columns) == ["x_re", "x_im", "z_re", "z_im", "identity", "residual", "scale"]
    assert len(frame) == 8
    again = verify_bispectral(task)
    assert again.to_dict() == payload


def test_truncation_failure_is_inconclusive(cubic_word):
    spec = QuadratureSpec(truncation=0.25, rel_tol=1e-14, max_doublings=1)
    task = VerificationTask(word=cubic_word, grid=((0.5, -0.5),), spec=spec)
    report = verify_bispectral(task)
    assert len(report.inconclusive) == 4
    assert not report.passed


def test_probe_powers_of_x(cubic_word):
    probes = tuple(WeylElement.x() ** n for n in range(1, 4))
    task = VerificationTask(word=cubic_word, grid=((0.5, -0.5), (-0.25, 0.75)), probes=probes)
    assert verify_bispectral(task).passed


def test_contour_independence(cubic_word):
    reports = contour_independence(
        cubic_word,
        grid=((0.5, -0.5), (-0.3, 0.2)),
        choices=[((1, 0), (1, 0)), ((2, 0), (1, 0)), ((0, 2), (1, 2))],
    )
    assert len(reports) == 3
    assert all(report.passed for report in reports.values())
    operators = {tuple(report.operators.as_text().items()) for report in reports.values()}
    assert len(operators) == 1


def test_symmetry_report():
    report = symmetry_report()
    assert report.defects["11"] <= 1e-8
    assert report.defects["22"] <= 1e-8
    assert report.defects["12+21"] <= 1e-8
    assert report.witness > 1e-3
    assert max(report.transpose_defects.values()) <= 1e-8
    assert report.rank == 3
    assert report.gap >= 1e3
    assert report.self_dual


def test_cross_check_derivatives(cubic_rep):
    check = cross_check_derivatives(cubic_rep, DEFAULT_GRID)
    assert check.max_deviation <= 1e-5
    assert set(check.by_variable()) == {"x", "z"}


def test_cross_check_closed_form():
    rep = build_integral_rep(AutomorphismWord())
    check = cross_check_derivatives(rep, ((0.5, -0.5), (1.0, 0.25)), default_quadrature_spec(0))
    assert check.max_deviation <= 1e-9


def test_rank_one_word_rejected_by_integrator():
    quadratic = UniPoly.monomial(2)
    task = VerificationTask(word=pair_word(quadratic, quadratic), grid=((0.0, 0.0),))
    with pytest.raises(ValueError, match="divergent configuration"):
        with pytest.warns(UserWarning):
            verify_bispectral(task)


@pytest.mark.slow
def test_two_layer_smoke():
    word = word_from_sequence([cubic()] * 4)
    task = VerificationTask(word=word, grid=COARSE_GRID, probes=(WeylElement.x(),))
    report = verify_bispectral(task, workers=4)
    assert report.tolerance == 1e-4
    assert report.passed
    assert not math.isnan(report.max_residual)
