"""Angle sweeps: numerical radius as sup over θ of the top eigenvalue of a rotated part.

For every θ on a uniform grid of [0, 2π) the Hermitian matrices are built for all
grid points at once and diagonalized by the batched Jacobi solver. The best grid
point is then polished by a few rounds of parabolic interpolation. The maximum
of λ_max over the full circle also covers the -λ_min branch, since
Re(e^{i(θ+π)}x) = -Re(e^{iθ}x).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, Tuple

import numpy as np

from ..algebra.eigen import jacobi_eigh
from ..algebra.element import AlgebraElement
from ..algebra.linalg import hermitian_norms, rotated_imag_stack, rotated_real_stack
from ..common.config import settings
from .states import StateWitness

logger = logging.getLogger(__name__)

MIN_GRID = 64
TWO_PI = 2.0 * math.pi

StackBuilder = Callable[[np.ndarray, np.ndarray], np.ndarray]
ProfileFn = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Refined supremum of an angle profile together with its maximizing state."""

    value: float
    argmax: float
    witness: StateWitness | None
    profile: np.ndarray
    thetas: np.ndarray
    kind: str = "re"
    extras: Dict[str, float] = field(default_factory=dict)

    def to_dict(self, *, include_profile: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "kind": self.kind,
            "value": self.value,
            "argmax": self.argmax,
            "grid": int(self.thetas.shape[0]),
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "extras": dict(self.extras),
        }
        if include_profile:
            data["profile"] = self.profile.tolist()
        return data


def theta_grid(grid: int) -> np.ndarray:
    return np.linspace(0.0, TWO_PI, grid, endpoint=False)


def _check_grid(grid: int | None, minimum: int = MIN_GRID) -> int:
    grid = settings.grid if grid is None else int(grid)
    if grid < minimum:
        raise ValueError(f"grid must be at least {minimum}, got {grid}")
    return grid


def _parabola_vertex(points: list[Tuple[float, float]]) -> float | None:
    (a, fa), (b, fb), (c, fc) = points
    num = (b - a) ** 2 * (fb - fc) - (b - c) ** 2 * (fb - fa)
    den = (b - a) * (fb - fc) - (b - c) * (fb - fa)
    if den == 0.0 or not math.isfinite(den):
        return None
    vertex = b - 0.5 * num / den
    if not a <= vertex <= c:
        return None
    return vertex


def polish_max(
    fn: ProfileFn,
    points: list[Tuple[float, float]],
    rounds: int | None = None,
    *,
    min_gain: float = 0.0,
) -> Tuple[float, float]:
    """Parabolic polishing of a bracketed maximum given as three (θ, f) points.

    The middle point must be the best one. Each round fits a parabola, evaluates
    its vertex and keeps the best three of the four points. The vertex replaces
    the incumbent only when it gains more than ``min_gain``.
    """
    rounds = settings.refine_rounds if rounds is None else rounds
    best_theta, best_value = points[1]
    for _ in range(rounds):
        vertex = _parabola_vertex(points)
        if vertex is None or any(abs(vertex - p[0]) <= 1e-15 for p in points):
            break
        fv = float(fn(np.array([vertex % TWO_PI]))[0])
        if fv > best_value + min_gain:
            best_theta, best_value = vertex, fv
        merged = sorted(points + [(vertex, fv)])
        k = max(range(4), key=lambda j: (merged[j][1], -j))
        k = min(max(k, 1), 2)
        points = merged[k - 1 : k + 2]
    return best_theta % TWO_PI, best_value


def refine_max(
    fn: ProfileFn,
    thetas: np.ndarray,
    values: np.ndarray,
    rounds: int | None = None,
) -> Tuple[float, float]:
    """Polish the grid maximum of a 2π-periodic profile by parabolic interpolation.

    The returned value is never below the grid maximum; ties keep the smallest θ.
    """
    grid = thetas.shape[0]
    step = TWO_PI / grid
    i = int(np.argmax(values))
    theta = float(thetas[i])
    points = [
        (theta - step, float(values[(i - 1) % grid])),
        (theta, float(values[i])),
        (theta + step, float(values[(i + 1) % grid])),
    ]
    return polish_max(fn, points, rounds)


def sweep_sup(
    fn: ProfileFn,
    grid: int | None = None,
    refine_rounds: int | None = None,
) -> Tuple[float, float, np.ndarray, np.ndarray]:
    """sup over θ of a vectorized profile: returns (θ*, value, profile, thetas)."""
    grid = _check_grid(grid)
    thetas = theta_grid(grid)
    values = np.asarray(fn(thetas), dtype=float)
    theta_star, value = refine_max(fn, thetas, values, refine_rounds)
    return theta_star, value, values, thetas


# ---------- Hermitian top-eigenvalue profiles ----------


def _top_profile(
    x: AlgebraElement, thetas: np.ndarray, builder: StackBuilder
) -> Tuple[np.ndarray, np.ndarray]:
    """λ_max over all blocks of builder(block, θ); returns values and winning block."""
    best = np.full(thetas.shape[0], -np.inf)
    which = np.zeros(thetas.shape[0], dtype=int)
    for index, block in enumerate(x.blocks):
        values, _, _ = jacobi_eigh(builder(block, thetas))
        top = np.atleast_2d(values)[:, 0]
        better = top > best
        best = np.where(better, top, best)
        which = np.where(better, index, which)
    return best, which


def _witness_at(x: AlgebraElement, theta: float, builder: StackBuilder) -> StateWitness:
    best: Tuple[float, np.ndarray, int] | None = None
    for index, block in enumerate(x.blocks):
        values, vectors, _ = jacobi_eigh(builder(block, np.array([theta]))[0])
        if best is None or values[0] > best[0]:
            best = (float(values[0]), vectors[:, 0], index)
    assert best is not None
    return StateWitness.from_vector(best[1], block=best[2])


def alpha_beta_stack(block: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Stack of α Re(block) + β Im(block) with (α, β) = (cos θ, -sin θ)."""
    star = block.conj().T
    re = 0.5 * (block + star)
    im = -0.5j * (block - star)
    alpha = np.cos(thetas)[:, None, None]
    beta = -np.sin(thetas)[:, None, None]
    return alpha * re[None] + beta * im[None]


def _radius_sweep(
    x: AlgebraElement,
    builder: StackBuilder,
    kind: str,
    grid: int | None,
    refine_rounds: int | None,
) -> SweepResult:
    grid = _check_grid(grid)
    theta_star, value, values, thetas = sweep_sup(
        lambda t: _top_profile(x, t, builder)[0], grid, refine_rounds
    )
    witness = _witness_at(x, theta_star, builder)
    logger.debug("%s sweep: grid=%d value=%.15g argmax=%.6f", kind, grid, value, theta_star)
    return SweepResult(
        value=value,
        argmax=theta_star,
        witness=witness,
        profile=values,
        thetas=thetas,
        kind=kind,
    )


def numerical_radius(
    x: AlgebraElement, grid: int | None = None, *, refine_rounds: int | None = None
) -> SweepResult:
    """v(x) = sup_θ ‖Re(e^{iθ}x)‖, computed as max_θ λ_max(Re(e^{iθ}x))."""
    return _radius_sweep(x, rotated_real_stack, "re", grid, refine_rounds)


def numerical_radius_im(
    x: AlgebraElement, grid: int | None = None, *, refine_rounds: int | None = None
) -> SweepResult:
    """v(x) = sup_θ ‖Im(e^{iθ}x)‖."""
    return _radius_sweep(x, rotated_imag_stack, "im", grid, refine_rounds)


def radius_alpha_beta(
    x: AlgebraElement, grid: int | None = None, *, refine_rounds: int | None = None
) -> SweepResult:
    """v(x) = sup over α²+β²=1 of ‖α Re(x) + β Im(x)‖ with (α, β) = (cos θ, -sin θ).

    ``extras`` carries ‖Re(x)‖ and ‖Im(x)‖, the values at (1, 0) and (0, 1).
    """
    result = _radius_sweep(x, alpha_beta_stack, "alpha_beta", grid, refine_rounds)
    axis_thetas = np.array([0.0, 1.5 * math.pi])
    re_norm = im_norm = 0.0
    for block in x.blocks:
        norms = hermitian_norms(alpha_beta_stack(block, axis_thetas))
        re_norm = max(re_norm, float(norms[0]))
        im_norm = max(im_norm, float(norms[1]))
    return replace(result, extras={"re_norm": re_norm, "im_norm": im_norm})


__all__ = [
    "MIN_GRID",
    "SweepResult",
    "alpha_beta_stack",
    "numerical_radius",
    "numerical_radius_im",
    "polish_max",
    "radius_alpha_beta",
    "refine_max",
    "sweep_sup",
    "theta_grid",
]
