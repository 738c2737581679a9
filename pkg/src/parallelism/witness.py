"""Pure-state witnesses for numerical-radius parallelism.

A witness for x ∥_v y is a vector state φ with |φ(x)| = v(x) and |φ(y)| = v(y),
so that |φ(x)φ(y)| = v(x)v(y).
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Tuple

from ..algebra.element import AlgebraElement
from ..numrange.geometry import range_boundary
from ..numrange.states import StateWitness, state_eval
from ..numrange.sweep import numerical_radius

logger = logging.getLogger(__name__)


def witness_values(x: AlgebraElement, y: AlgebraElement, w: StateWitness) -> Tuple[complex, complex]:
    return state_eval(x, w), state_eval(y, w)


def is_radius_witness(
    x: AlgebraElement,
    y: AlgebraElement,
    w: StateWitness,
    vx: float,
    vy: float,
    tol: float,
) -> bool:
    """|φ(x)| ≥ v(x) − 2tol and |φ(y)| ≥ v(y) − 2tol."""
    a, b = witness_values(x, y, w)
    return abs(a) >= vx - 2.0 * tol and abs(b) >= vy - 2.0 * tol


def _candidates(x: AlgebraElement, y: AlgebraElement, grid: int | None) -> Iterable[StateWitness]:
    for z in (x, y):
        w = numerical_radius(z, grid).witness
        if w is not None:
            yield w
    for z in (x, y):
        yield from range_boundary(z, grid).witnesses


def search_boundary_witness(
    x: AlgebraElement,
    y: AlgebraElement,
    vx: float,
    vy: float,
    tol: float,
    grid: int | None = None,
) -> Optional[StateWitness]:
    """Look for a witness among the radius maximizers and boundary support states of x and y."""
    for w in _candidates(x, y, grid):
        if is_radius_witness(x, y, w, vx, vy, tol):
            return w
    return None


def pure_state_witness(
    x: AlgebraElement,
    y: AlgebraElement,
    grid: int | None = None,
    *,
    lambda_grid: int | None = None,
    certificate=None,
) -> Optional[StateWitness]:
    """A pure state with |φ(x)φ(y)| = v(x)v(y), or None when there is none.

    First tries the maximizing state of v(x + λ*y) at the certificate's λ*,
    then falls back to an independent search over states that attain v(x) or
    v(y) and over the boundary support states of both ranges.
    """
    from .certificates import vradius_parallel

    cert = certificate or vradius_parallel(x, y, grid, lambda_grid=lambda_grid)
    if cert.witness is not None:
        return cert.witness
    vx, vy = cert.details["v_x"], cert.details["v_y"]
    found = search_boundary_witness(x, y, vx, vy, cert.tol, grid)
    if found is not None:
        logger.info("witness found by boundary search although the λ-sweep decided %s", cert.decision)
    return found


__all__ = [
    "is_radius_witness",
    "pure_state_witness",
    "search_boundary_witness",
    "witness_values",
]
