import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.algebra import AlgebraElement

# grids small enough for a quick suite, large enough for every check's precondition
GRID = 256
LAMBDA_GRID = 64


def ginibre(rng: np.random.Generator, n: int) -> AlgebraElement:
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2 * n)
    return AlgebraElement.from_matrix(z)


def complex_matrices(n: int):
    """Hypothesis strategy for n×n complex AlgebraElements with moderate entries."""
    entries = st.floats(-2.0, 2.0, allow_nan=False, allow_infinity=False, allow_subnormal=False)
    return arrays(np.float64, (2, n, n), elements=entries).map(
        lambda a: AlgebraElement.from_matrix(a[0] + 1j * a[1])
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def nilpotent() -> AlgebraElement:
    return AlgebraElement.from_matrix([[0, 1], [0, 0]])


@pytest.fixture
def identity2() -> AlgebraElement:
    return AlgebraElement.identity(2)


@pytest.fixture
def projections() -> tuple[AlgebraElement, AlgebraElement]:
    return (
        AlgebraElement.from_matrix(np.diag([1.0, 0.0])),
        AlgebraElement.from_matrix(np.diag([0.0, 1.0])),
    )
