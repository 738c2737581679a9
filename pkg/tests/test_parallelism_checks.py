import cmath

import numpy as np
import pytest

from conftest import GRID, LAMBDA_GRID, ginibre
from src.algebra import AlgebraElement
from src.common.errors import InapplicableInput, NotCentral, NotUnitary
from src.ensembles import random_central_unitary
from src.parallelism import (
    check_central_invariance,
    check_cor212,
    check_cor214,
    check_thm213_equivalence,
    ensure_central_unitary,
)


def _thm213(x, y):
    return check_thm213_equivalence(x, y, GRID, lambda_grid=LAMBDA_GRID)


def test_thm213_designed_cases(nilpotent, projections, rng):
    x = ginibre(rng, 3)
    cases = [
        ((nilpotent, nilpotent.adjoint()), True),
        ((x, AlgebraElement.identity(3)), True),
        (projections, False),
    ]
    for (a, b), expected in cases:
        report = _thm213(a, b)
        assert report.passed
        assert report.flags["parallel"] is expected
        assert report.flags["witness_exists"] is expected
        if expected:
            target = report.quantities["v_x"] * report.quantities["v_y"]
            assert report.quantities["witness_product"] >= target - 1e-6


def test_thm213_witness_allowance_is_capped(nilpotent):
    x = nilpotent * 10.0
    report = _thm213(x, x.adjoint())
    assert report.passed
    assert report.quantities["witness_tol"] == 1e-6
    target = report.quantities["v_x"] * report.quantities["v_y"]
    assert target == pytest.approx(25.0, rel=1e-9)
    assert report.quantities["witness_product"] >= target - 1e-6


def test_thm213_decisions_agree_on_random_pairs(rng):
    for n in (2, 3, 4):
        for _ in range(4):
            report = _thm213(ginibre(rng, n), ginibre(rng, n))
            assert report.passed, report.details["certificate"]


def test_cor212_for_nilpotent_pair(nilpotent):
    report = check_cor212(nilpotent, nilpotent.adjoint(), GRID, lambda_grid=LAMBDA_GRID)
    assert report.passed
    assert report.quantities["product_sup_re"] == pytest.approx(0.25, abs=1e-9)
    assert report.quantities["product_sup_im"] == pytest.approx(0.25, abs=1e-9)
    assert report.quantities["witness_sup_product"] == pytest.approx(0.25, abs=1e-9)
    assert report.requirements["witness"]


def test_cor212_for_equal_arguments(rng):
    x = ginibre(rng, 3)
    report = check_cor212(x, x, GRID, lambda_grid=LAMBDA_GRID)
    assert report.passed
    assert report.quantities["theta0"] == pytest.approx(0.0, abs=1e-12)


def test_cor212_requires_parallel_inputs(projections):
    with pytest.raises(InapplicableInput):
        check_cor212(*projections, GRID, lambda_grid=LAMBDA_GRID)


@pytest.mark.parametrize("n", [2, 3])
def test_cor214_identity_parallelism(n, rng, nilpotent):
    for x in (ginibre(rng, n), AlgebraElement.identity(n)):
        assert check_cor214(x, GRID, lambda_grid=LAMBDA_GRID).passed
    assert check_cor214(nilpotent, GRID, lambda_grid=LAMBDA_GRID).passed


def test_ensure_central_unitary_validates():
    c = AlgebraElement.scalar_blocks((2, 2), [cmath.exp(0.3j), cmath.exp(1.1j)])
    ensure_central_unitary(c)
    with pytest.raises(NotUnitary):
        ensure_central_unitary(AlgebraElement.identity(2) * 2.0)
    with pytest.raises(NotCentral):
        ensure_central_unitary(AlgebraElement.from_matrix([[0, 1], [1, 0]]))


def test_central_invariance_on_direct_sums(rng):
    for _ in range(4):
        x = AlgebraElement.direct_sum(ginibre(rng, 2), ginibre(rng, 2))
        y = AlgebraElement.direct_sum(ginibre(rng, 2), ginibre(rng, 2))
        c = random_central_unitary(x.shape, rng)
        report = check_central_invariance(x, y, c, GRID, lambda_grid=LAMBDA_GRID)
        assert report.passed
        for label in ("x", "y", "x+y"):
            assert abs(report.quantities[f"v_c{label}"] - report.quantities[f"v_{label}"]) <= 1e-8


def test_central_invariance_keeps_parallel_pairs_parallel(rng):
    x = AlgebraElement.direct_sum(ginibre(rng, 2), ginibre(rng, 2))
    c = AlgebraElement.scalar_blocks(x.shape, [1j, -1.0])
    report = check_central_invariance(x, x * 2.0, c, GRID, lambda_grid=LAMBDA_GRID)
    assert report.passed
    assert report.flags == {"parallel_plain": True, "parallel_left": True, "parallel_right": True}


def test_central_invariance_rejects_non_central(nilpotent):
    with pytest.raises(NotCentral):
        check_central_invariance(
            nilpotent, nilpotent, AlgebraElement.from_matrix(np.array([[0, 1], [1, 0]])), GRID
        )
