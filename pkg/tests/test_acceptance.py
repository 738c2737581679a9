"""Full-size runs at the default grids (θ 512, ψ 512): ``pytest -m slow``."""

import numpy as np
import pytest

from src.algebra import AlgebraElement, op_norm, spectral_radius
from src.ensembles import EnsembleFamily, EnsembleSpec, generate, random_central_unitary, sample_rngs
from src.inequalities import (
    check_basic_bounds,
    check_cor24,
    check_cor25,
    check_lemma210,
    check_thm23,
    check_thm28,
    check_thm29,
    check_thm211,
)
from src.numrange import crawford, numerical_radius
from src.parallelism import check_central_invariance, check_thm213_equivalence

pytestmark = pytest.mark.slow

ORACLE_SAMPLES = 100_000


def _ensemble(family: EnsembleFamily, dim: int, count: int, seed: int):
    return generate(EnsembleSpec(family=family, dim=dim, count=count, seed=seed))


def _pairs(elements):
    return list(zip(elements[0::2], elements[1::2]))


def _form(block: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    return np.abs(np.einsum("...i,ij,...j->...", vectors.conj(), block, vectors))


def _unit(rng: np.random.Generator, shape) -> np.ndarray:
    z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return z / np.linalg.norm(z, axis=-1, keepdims=True)


def brute_force_radius(block: np.ndarray, rng: np.random.Generator, keep: int = 16) -> float:
    """max |⟨xξ, ξ⟩| over random unit vectors, then polished by shrinking random steps.

    Every value it returns is attained by an explicit unit vector, so it never exceeds v(x).
    """
    n = block.shape[0]
    xi = _unit(rng, (ORACLE_SAMPLES, n))
    values = _form(block, xi)
    top = np.argsort(values)[-keep:]
    best, best_values = xi[top], values[top]
    for step in np.geomspace(0.2, 1e-9, 200):
        trial = best[:, None, :] + step * (
            rng.standard_normal((keep, 64, n)) + 1j * rng.standard_normal((keep, 64, n))
        )
        trial /= np.linalg.norm(trial, axis=-1, keepdims=True)
        trial_values = _form(block, trial)
        pick = np.argmax(trial_values, axis=1)
        gained = trial_values[np.arange(keep), pick] > best_values
        best[gained] = trial[np.arange(keep), pick][gained]
        best_values = np.where(gained, trial_values[np.arange(keep), pick], best_values)
    return float(np.max(best_values))


def test_nilpotent_equality_chain(nilpotent):
    assert numerical_radius(nilpotent).value == pytest.approx(0.5, abs=1e-9)
    assert crawford(nilpotent) == pytest.approx(0.0, abs=1e-6)
    star = nilpotent.adjoint()
    assert op_norm(star @ nilpotent + nilpotent @ star) == pytest.approx(1.0, abs=1e-12)
    for report in (check_thm23(nilpotent), check_thm29(nilpotent)):
        assert report.passed
        for link in ("half_norm<=lower_mid", "lower_mid<=v"):
            assert abs(report.slacks[link]) <= 1e-9, (report.name, link)
    assert check_thm28(nilpotent).flags == {"v_is_half_norm": True, "sum_is_norm": True}


@pytest.mark.parametrize("n", [2, 3])
def test_sweep_agrees_with_sampled_radius(n):
    rngs = sample_rngs(9000 + n, 25)
    for x, rng in zip(_ensemble(EnsembleFamily.GINIBRE, n, 25, seed=900 + n), rngs):
        sweep = numerical_radius(x).value
        oracle = brute_force_radius(x.blocks[0], rng)
        assert sweep - oracle <= 1e-3
        assert oracle <= sweep + 1e-9


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_inequality_ensemble(n):
    elements = _ensemble(EnsembleFamily.GINIBRE, n, 500, seed=100 + n)
    for x in elements:
        for check in (check_basic_bounds, check_thm23, check_thm29):
            report = check(x)
            assert report.passed, (report.name, report.slacks)
    for x, y in _pairs(elements):
        for report in (check_thm211(x, y), check_lemma210(x, y)):
            assert report.passed, (report.name, report.slacks)


def test_square_zero_radius_is_half_norm():
    for dim, count in ((2, 34), (3, 33), (4, 33)):
        for x in _ensemble(EnsembleFamily.SQUAREZERO, dim, count, seed=200 + dim):
            norm = op_norm(x)
            assert abs(numerical_radius(x).value - norm / 2.0) <= 1e-6 * (1.0 + norm)
            assert check_cor24(x).passed


def test_normal_radius_is_norm():
    for dim, count in ((2, 25), (3, 25), (4, 25), (5, 25)):
        for x in _ensemble(EnsembleFamily.NORMAL, dim, count, seed=300 + dim):
            norm = op_norm(x)
            assert abs(numerical_radius(x).value - norm) <= 1e-8 * (1.0 + norm)
            assert abs(op_norm(x @ x) - norm**2) <= 1e-7 * (1.0 + norm**2)
            assert check_cor25(x).passed


def test_half_norm_equivalence_on_mixed_ensemble(nilpotent, identity2):
    elements = (
        _ensemble(EnsembleFamily.GINIBRE, 3, 200, seed=401)
        + _ensemble(EnsembleFamily.SQUAREZERO, 4, 150, seed=402)
        + _ensemble(EnsembleFamily.NILPOTENT2, 2, 150, seed=403)
        + [nilpotent, identity2]
    )
    half_norm = 0
    for x in elements:
        report = check_thm28(x)
        assert report.passed, report.quantities
        assert report.flags["v_is_half_norm"] == report.flags["sum_is_norm"]
        assert report.quantities["commutator_identity_defect"] <= 1e-10 * max(
            1.0, report.quantities["norm"] ** 2
        )
        half_norm += report.flags["v_is_half_norm"]
    assert half_norm >= 301


def test_witness_equivalence_on_random_pairs(nilpotent, projections):
    pairs = [(nilpotent, nilpotent.adjoint()), projections]
    for dim in (2, 3, 4):
        elements = _ensemble(EnsembleFamily.GINIBRE, dim, 134, seed=500 + dim)
        pairs.extend(_pairs(elements))
        pairs.append((elements[0], AlgebraElement.identity(dim)))
    assert len(pairs) >= 203
    for x, y in pairs:
        report = check_thm213_equivalence(x, y)
        assert report.passed, report.details["certificate"]
        if report.flags["parallel"]:
            target = report.quantities["v_x"] * report.quantities["v_y"]
            assert report.quantities["witness_product"] >= target - 1e-6


def test_central_invariance_on_direct_sums():
    elements = _ensemble(EnsembleFamily.DIRECTSUM, 2, 200, seed=600)
    rngs = sample_rngs(601, 100)
    for (x, y), rng in zip(_pairs(elements), rngs):
        c = random_central_unitary(x.shape, rng)
        report = check_central_invariance(x, y, c)
        assert report.passed
        assert len({report.flags[k] for k in ("parallel_plain", "parallel_left", "parallel_right")}) == 1
        for label in ("x", "y", "x+y"):
            assert abs(report.quantities[f"v_c{label}"] - report.quantities[f"v_{label}"]) <= 1e-8


def test_spectral_radius_of_non_diagonalizable_elements(rng):
    for n in (3, 4, 6):
        for _ in range(10):
            lam = complex(rng.uniform(0.2, 1.5) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)))
            mu = 0.5 * abs(lam)
            jordan = lam * np.eye(n) + np.diag(np.ones(n - 1), k=1)
            jordan[-1, -1] = mu
            jordan[-2, -1] = 0.0
            s = np.eye(n) + 0.3 * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
            x = AlgebraElement.from_matrix(s @ jordan @ np.linalg.inv(s))
            assert spectral_radius(x) == pytest.approx(abs(lam), rel=1e-7)
