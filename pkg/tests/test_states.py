import cmath
import math

import numpy as np
import pytest

from conftest import ginibre
from src.algebra import AlgebraElement, cartesian_parts
from src.common.errors import DimensionMismatch
from src.numrange import StateWitness, scalar_sup_identities, scalar_sup_product, state_eval


def test_witness_must_be_unit():
    with pytest.raises(ValueError):
        StateWitness(np.array([1.0, 1.0]))
    w = StateWitness.from_vector([3.0, 4.0j])
    assert np.linalg.norm(w.vector) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        StateWitness.from_vector([0.0, 0.0])


def test_vector_state_on_nilpotent(nilpotent):
    w = StateWitness.from_vector([1.0, 1.0])
    assert state_eval(nilpotent, w) == pytest.approx(0.5)
    assert state_eval(AlgebraElement.identity(2), w) == pytest.approx(1.0)


def test_mixed_state_on_direct_sum():
    x = AlgebraElement((np.diag([2.0, 0.0]), np.array([[4.0j]])))
    first = StateWitness(np.array([1.0, 0.0]), block=0, weight=0.25)
    second = StateWitness(np.array([1.0]), block=1, weight=0.75)
    assert state_eval(x, [first, second]) == pytest.approx(0.5 + 3.0j)
    with pytest.raises(ValueError):
        state_eval(x, [first])


def test_witness_must_fit_its_block(nilpotent):
    with pytest.raises(DimensionMismatch):
        state_eval(nilpotent, StateWitness.from_vector([1.0, 0.0, 0.0]))
    with pytest.raises(DimensionMismatch):
        state_eval(nilpotent, StateWitness.from_vector([1.0, 0.0], block=1))


def test_witness_to_dict_uses_pairs():
    data = StateWitness.from_vector([1j, 0.0]).to_dict()
    assert data == {"block": 0, "weight": 1.0, "vector": [[0.0, 1.0], [0.0, 0.0]]}


@pytest.mark.parametrize("z", [3 + 4j, -2.0, 1e-3j, 0.0])
def test_scalar_sup_identities_recover_modulus(z):
    re_sup, im_sup = scalar_sup_identities(z)
    assert re_sup == pytest.approx(abs(z), rel=1e-6, abs=1e-12)
    assert im_sup == pytest.approx(abs(z), rel=1e-6, abs=1e-12)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_state_of_rotated_cartesian_parts_recovers_modulus(n, rng):
    x = ginibre(rng, n)
    w = StateWitness.from_vector(rng.standard_normal(n) + 1j * rng.standard_normal(n))
    z = state_eval(x, w)
    re_values, im_values = [], []
    for theta in np.linspace(0.0, 2.0 * np.pi, 4096, endpoint=False):
        re, im = cartesian_parts(x * cmath.exp(1j * theta))
        rotated = cmath.exp(1j * theta) * z
        a, b = state_eval(re, w), state_eval(im, w)
        assert a == pytest.approx(rotated.real, abs=1e-12)
        assert b == pytest.approx(rotated.imag, abs=1e-12)
        re_values.append(abs(a))
        im_values.append(abs(b))
    assert max(re_values) == pytest.approx(abs(z), rel=1e-6)
    assert max(im_values) == pytest.approx(abs(z), rel=1e-6)
    assert scalar_sup_identities(z) == pytest.approx((abs(z), abs(z)), rel=1e-6)


@pytest.mark.parametrize(
    ("a", "b", "theta0"),
    [(1.0, 1.0, 0.0), (1.0, 1j, 0.0), (2.0, 1j, -math.pi / 2), (1 + 1j, 0.5 - 2j, 0.7)],
)
def test_scalar_sup_product_matches_brute_force(a, b, theta0):
    thetas = np.linspace(0.0, 2.0 * np.pi, 200_000, endpoint=False)
    re = np.abs((np.exp(1j * thetas) * a).real) * np.abs((np.exp(1j * (thetas + theta0)) * b).real)
    im = np.abs((np.exp(1j * thetas) * a).imag) * np.abs((np.exp(1j * (thetas + theta0)) * b).imag)
    value = scalar_sup_product(a, b, theta0)
    assert value == pytest.approx(re.max(), abs=1e-8)
    assert value == pytest.approx(im.max(), abs=1e-8)


def test_scalar_sup_product_aligned_is_product_of_moduli():
    assert scalar_sup_product(2.0, 3.0) == pytest.approx(6.0)
    assert scalar_sup_product(0.0, 3.0) == 0.0
