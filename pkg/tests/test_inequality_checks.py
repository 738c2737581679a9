import numpy as np
import pytest
from hypothesis import given, settings

from conftest import GRID, complex_matrices, ginibre
from src.algebra import AlgebraElement
from src.common.errors import InapplicableInput
from src.ensembles import EnsembleFamily, EnsembleSpec, generate
from src.inequalities import (
    check_basic_bounds,
    check_cor24,
    check_cor25,
    check_lemma210,
    check_thm22,
    check_thm23,
    check_thm26,
    check_thm28,
    check_thm29,
    check_thm211,
    joint_sup,
    product_sup,
)

ZERO_SLACK = 1e-9


def test_nilpotent_basic_bounds(nilpotent):
    report = check_basic_bounds(nilpotent, GRID)
    assert report.passed
    assert report.quantities["v"] == pytest.approx(0.5, abs=1e-9)
    assert report.slacks["half_norm<=v"] == pytest.approx(0.0, abs=ZERO_SLACK)


def test_nilpotent_thm23_links_are_tight(nilpotent):
    report = check_thm23(nilpotent, GRID)
    assert report.passed
    assert report.quantities["crawford_x2"] == pytest.approx(0.0, abs=1e-6)
    assert report.quantities["norm_sum_squares"] == pytest.approx(1.0, abs=1e-12)
    for link in ("half_norm<=lower_mid", "lower_mid<=v", "v<=upper_mid", "upper_mid<=upper_outer"):
        assert abs(report.slacks[link]) <= ZERO_SLACK, link
    assert report.quantities["proof_bound"] == pytest.approx(0.5)


def test_nilpotent_thm29_lower_links_are_tight(nilpotent):
    report = check_thm29(nilpotent, GRID)
    assert report.passed
    assert abs(report.slacks["half_norm<=lower_mid"]) <= ZERO_SLACK
    assert abs(report.slacks["lower_mid<=v"]) <= ZERO_SLACK
    assert report.requirements["cartesian_identity"]


def test_thm23_equality_for_symmetric_spectrum():
    x = AlgebraElement.from_matrix(np.diag([1.0, -1.0]))
    report = check_thm23(x, GRID)
    assert report.passed
    assert report.quantities["crawford_x2"] == pytest.approx(1.0)
    assert report.quantities["lower_mid"] == pytest.approx(1.0)


def test_thm28_booleans(nilpotent, identity2):
    n = check_thm28(nilpotent, GRID)
    assert n.passed
    assert n.flags == {"v_is_half_norm": True, "sum_is_norm": True}
    i = check_thm28(identity2, GRID)
    assert i.passed
    assert i.flags == {"v_is_half_norm": False, "sum_is_norm": False}
    assert i.requirements["commutator_identity"]


def test_thm28_needs_a_fine_grid(nilpotent):
    with pytest.raises(ValueError):
        check_thm28(nilpotent, 128)


def test_thm28_on_random_elements(rng):
    for _ in range(20):
        report = check_thm28(ginibre(rng, 3), GRID)
        assert report.passed
        assert report.quantities["commutator_identity_defect"] <= 1e-10


def test_thm22_and_thm26(rng, nilpotent):
    for x in (nilpotent, ginibre(rng, 2), ginibre(rng, 4)):
        assert check_thm22(x, GRID).passed
        report = check_thm26(x, GRID)
        assert report.passed
        assert report.slacks["norm_re<=v"] >= -report.tol


def test_cor24_on_square_zero_ensemble():
    for dim in (2, 3, 4):
        for x in generate(EnsembleSpec(family=EnsembleFamily.SQUAREZERO, dim=dim, count=5, seed=11)):
            report = check_cor24(x, GRID)
            assert report.passed
            v, norm = report.quantities["v"], report.quantities["norm"]
            assert abs(v - norm / 2) <= 1e-6 * (1 + norm)


def test_cor24_is_inapplicable_to_identity(identity2):
    with pytest.raises(InapplicableInput):
        check_cor24(identity2, GRID)


def test_cor25_on_normal_ensemble():
    for x in generate(EnsembleSpec(family=EnsembleFamily.NORMAL, dim=3, count=10, seed=5)):
        report = check_cor25(x, GRID)
        assert report.passed
        v, norm = report.quantities["v"], report.quantities["norm"]
        assert abs(v - norm) <= 1e-8 * (1 + norm)
        assert abs(report.quantities["norm_x2"] - norm**2) <= 1e-7 * (1 + norm**2)


def test_cor25_is_inapplicable_to_nilpotent(nilpotent):
    with pytest.raises(InapplicableInput):
        check_cor25(nilpotent, GRID)


def test_lemma210(nilpotent):
    report = check_lemma210(nilpotent, nilpotent.adjoint())
    assert report.passed
    assert report.quantities["r_sum"] == pytest.approx(1.0, rel=1e-9)
    assert report.quantities["bound"] == pytest.approx(2.0, rel=1e-9)


def test_thm211_equality_for_equal_arguments(rng):
    x = ginibre(rng, 3)
    report = check_thm211(x, x, GRID)
    assert report.passed
    assert report.quantities["refined_re"] == pytest.approx(report.quantities["v_x+v_y"], rel=1e-7)


def test_thm211_on_random_pairs(rng):
    for n in (2, 3):
        for _ in range(5):
            assert check_thm211(ginibre(rng, n), ginibre(rng, n), GRID).passed


def test_product_and_joint_sups(nilpotent):
    value, _ = product_sup(nilpotent, nilpotent.adjoint(), GRID)
    assert value == pytest.approx(0.25, abs=1e-9)
    assert joint_sup(nilpotent, nilpotent.adjoint(), GRID) == pytest.approx(0.25, abs=1e-9)
    assert joint_sup(nilpotent, nilpotent.adjoint(), GRID, part="im") == pytest.approx(0.25, abs=1e-9)


@settings(max_examples=20, deadline=None)
@given(complex_matrices(2))
def test_ladders_hold_for_arbitrary_elements(x):
    assert check_basic_bounds(x, 64).passed
    assert check_thm23(x, 64).passed
    assert check_thm29(x, 64).passed


@settings(max_examples=20, deadline=None)
@given(complex_matrices(2), complex_matrices(2))
def test_lemma210_for_arbitrary_pairs(z, w):
    assert check_lemma210(z, w).passed
