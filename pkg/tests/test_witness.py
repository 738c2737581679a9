from conftest import GRID, LAMBDA_GRID
from src.algebra import AlgebraElement
from src.numrange import state_eval
from src.parallelism import pure_state_witness, vradius_parallel
from src.parallelism.witness import is_radius_witness, search_boundary_witness


def test_witness_for_nilpotent_pair(nilpotent):
    w = pure_state_witness(nilpotent, nilpotent.adjoint(), GRID, lambda_grid=LAMBDA_GRID)
    assert w is not None
    product = abs(state_eval(nilpotent, w) * state_eval(nilpotent.adjoint(), w))
    assert abs(product - 0.25) <= 1e-6


def test_no_witness_for_orthogonal_projections(projections):
    p, q = projections
    assert pure_state_witness(p, q, GRID, lambda_grid=LAMBDA_GRID) is None
    assert search_boundary_witness(p, q, 1.0, 1.0, 1e-6, GRID) is None


def test_certificate_is_reused(nilpotent):
    cert = vradius_parallel(nilpotent, nilpotent.adjoint(), GRID, lambda_grid=LAMBDA_GRID)
    assert pure_state_witness(nilpotent, nilpotent.adjoint(), GRID, certificate=cert) is cert.witness


def test_boundary_search_finds_shared_maximizer():
    x = AlgebraElement.from_matrix([[1.0, 0.0], [0.0, 0.2]])
    y = AlgebraElement.from_matrix([[-3.0, 0.0], [0.0, 1.0]])
    w = search_boundary_witness(x, y, 1.0, 3.0, 1e-6, GRID)
    assert w is not None
    assert is_radius_witness(x, y, w, 1.0, 3.0, 1e-6)
