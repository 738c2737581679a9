"""Decision procedures for norm parallelism and numerical-radius parallelism.

Both relations ask whether ‖x + λy‖ (resp. v(x + λy)) reaches ‖x‖ + ‖y‖
(resp. v(x) + v(y)) for some unimodular λ = e^{iψ}. The ψ-circle is swept on a
uniform grid, the best grid point is polished by parabolic interpolation, and
the decision is ``gap ≤ tol``.
"""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Literal, Optional, Tuple

import numpy as np

from ..algebra.eigen import jacobi_eigh
from ..algebra.element import AlgebraElement
from ..algebra.linalg import op_norm, stack_norms
from ..common.config import settings
from ..common.errors import ShapeMismatch
from ..numrange.states import StateWitness, state_eval
from ..numrange.sweep import TWO_PI, numerical_radius, polish_max, theta_grid
from .witness import is_radius_witness

logger = logging.getLogger(__name__)

MIN_PARALLEL_GRID = 256
CHUNK_MATRICES = 32768

Kind = Literal["norm", "vradius"]


def parallel_tol(a: float, b: float) -> float:
    """tol = max(abs, rel·(a + b)) for a parallelism decision."""
    return max(settings.parallel_abs_tol, settings.parallel_rel_tol * (a + b))


def is_marginal(gap: float, tol: float) -> bool:
    # upper edge is inclusive; one part in 1e12 absorbs rounding of factor·tol
    return 0.1 * tol < gap <= settings.marginal_factor * tol * (1.0 + 1e-12)


@dataclass(frozen=True, eq=False)
class ParallelismCertificate:
    """Outcome of a parallelism decision.

    ``achieved`` is the largest value of ‖x + λy‖ or v(x + λy) seen on the
    refined ψ-sweep, ``target`` the sum of the two norms or radii and
    ``gap = max(0, target − achieved)``. ``lambda_star`` is the smallest ψ whose
    value ties with the best one.
    """

    kind: Kind
    decision: bool
    lambda_star: complex
    achieved: float
    target: float
    gap: float
    tol: float
    witness: Optional[StateWitness] = None
    details: Dict[str, float] = field(default_factory=dict)

    @property
    def marginal(self) -> bool:
        return is_marginal(self.gap, self.tol)

    @property
    def theta0(self) -> float:
        return cmath.phase(self.lambda_star)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "decision": self.decision,
            "lambda_star": [self.lambda_star.real, self.lambda_star.imag],
            "achieved": float(self.achieved),
            "target": float(self.target),
            "gap": self.gap,
            "tol": self.tol,
            "marginal": self.marginal,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "details": dict(self.details),
        }


def _same_shape(x: AlgebraElement, y: AlgebraElement) -> None:
    if x.shape != y.shape:
        raise ShapeMismatch(f"block shapes differ: {x.shape} vs {y.shape}")


def _lambda_grid(lambda_grid: int | None) -> int:
    lambda_grid = settings.lambda_grid if lambda_grid is None else int(lambda_grid)
    if lambda_grid < 64:
        raise ValueError(f"lambda grid must be at least 64, got {lambda_grid}")
    return lambda_grid


def _combine(x: AlgebraElement, y: AlgebraElement, psi: float) -> AlgebraElement:
    return x + y * cmath.exp(1j * psi)


def lambda_sweep(
    coarse: Callable[[np.ndarray], np.ndarray],
    refined: Callable[[float], float],
    lambda_grid: int,
    tie_tol: float,
) -> Tuple[float, float, np.ndarray]:
    """Maximize a 2π-periodic function of ψ; returns (ψ*, best value, coarse profile).

    ``coarse`` evaluates the whole grid cheaply, ``refined`` evaluates one ψ
    accurately. The smallest grid ψ within ``tie_tol`` of the coarse maximum is
    bracketed with refined values and polished.
    """
    psis = theta_grid(lambda_grid)
    step = TWO_PI / lambda_grid
    profile = np.asarray(coarse(psis), dtype=float)
    i = int(np.nonzero(profile >= profile.max() - tie_tol)[0][0])

    seen: List[float] = []

    def fn(ps: np.ndarray) -> np.ndarray:
        out = np.array([refined(float(p)) for p in ps])
        seen.extend(out.tolist())
        return out

    # walk uphill on refined values until the bracket's middle is the best
    center = float(psis[i])
    for _ in range(lambda_grid):
        left, mid, right = fn(np.array([center - step, center, center + step]))
        if left > mid + tie_tol and left >= right:
            center -= step
        elif right > mid + tie_tol:
            center += step
        else:
            break
    points = [(center - step, float(left)), (center, float(mid)), (center + step, float(right))]
    psi_star, _ = polish_max(fn, points, min_gain=tie_tol)
    return psi_star, max(seen), profile


def _coarse_vradius(x: AlgebraElement, y: AlgebraElement, thetas: np.ndarray) -> Callable:
    """Unrefined max_θ λ_max(Re(e^{iθ}(x + e^{iψ}y))) for a whole ψ grid, chunked."""
    rot = np.exp(1j * thetas)

    def coarse(psis: np.ndarray) -> np.ndarray:
        out = np.full(psis.shape[0], -np.inf)
        chunk = max(1, CHUNK_MATRICES // thetas.shape[0])
        for bx, by in zip(x.blocks, y.blocks):
            n = bx.shape[0]
            for start in range(0, psis.shape[0], chunk):
                lam = np.exp(1j * psis[start : start + chunk])
                z = bx[None] + lam[:, None, None] * by[None]
                zt = rot[None, :, None, None] * z[:, None]
                re = 0.5 * (zt + np.conj(np.swapaxes(zt, -1, -2)))
                values, _, _ = jacobi_eigh(re.reshape(-1, n, n))
                top = np.atleast_2d(values)[:, 0].reshape(lam.shape[0], thetas.shape[0])
                out[start : start + chunk] = np.maximum(
                    out[start : start + chunk], top.max(axis=1)
                )
        return out

    return coarse


def vradius_parallel(
    x: AlgebraElement,
    y: AlgebraElement,
    grid: int | None = None,
    *,
    lambda_grid: int | None = None,
) -> ParallelismCertificate:
    """Decide x ∥_v y, i.e. v(x + λy) = v(x) + v(y) for some |λ| = 1."""
    _same_shape(x, y)
    grid = settings.grid if grid is None else int(grid)
    if grid < MIN_PARALLEL_GRID:
        raise ValueError(f"grid must be at least {MIN_PARALLEL_GRID}, got {grid}")
    lambda_grid = _lambda_grid(lambda_grid)

    vx = numerical_radius(x, grid).value
    vy = numerical_radius(y, grid).value
    target = vx + vy
    tol = parallel_tol(vx, vy)

    psi_star, achieved, _ = lambda_sweep(
        _coarse_vradius(x, y, theta_grid(grid)),
        lambda p: numerical_radius(_combine(x, y, p), grid).value,
        lambda_grid,
        0.1 * tol,
    )
    gap = float(max(0.0, target - achieved))
    decision = bool(gap <= tol)
    lam = cmath.exp(1j * psi_star)

    details: Dict[str, float] = {"v_x": vx, "v_y": vy, "psi_star": psi_star}
    witness = numerical_radius(_combine(x, y, psi_star), grid).witness
    if witness is not None:
        a, b = state_eval(x, witness), state_eval(y, witness)
        details.update(witness_abs_x=abs(a), witness_abs_y=abs(b), witness_product=abs(a * b))
        if not is_radius_witness(x, y, witness, vx, vy, tol):
            witness = None

    if decision and witness is None:
        logger.warning("λ-sweep decided x ∥_v y but the maximizing state is not a witness (gap %.3e)", gap)
    if is_marginal(gap, tol):
        logger.info("marginal vradius decision: gap=%.3e tol=%.3e", gap, tol)
    logger.debug("vradius_parallel: v_x=%.12g v_y=%.12g achieved=%.12g", vx, vy, achieved)

    return ParallelismCertificate(
        kind="vradius",
        decision=decision,
        lambda_star=lam,
        achieved=achieved,
        target=target,
        gap=gap,
        tol=tol,
        witness=witness,
        details=details,
    )


def _norm_profile(x: AlgebraElement, y: AlgebraElement) -> Callable[[np.ndarray], np.ndarray]:
    def profile(psis: np.ndarray) -> np.ndarray:
        lam = np.exp(1j * np.asarray(psis, dtype=float))
        out = np.zeros(lam.shape[0])
        for bx, by in zip(x.blocks, y.blocks):
            out = np.maximum(out, stack_norms(bx[None] + lam[:, None, None] * by[None]))
        return out

    return profile


def norm_parallel(
    x: AlgebraElement,
    y: AlgebraElement,
    grid: int | None = None,
    *,
    lambda_grid: int | None = None,
) -> ParallelismCertificate:
    """Decide x ∥ y, i.e. ‖x + λy‖ = ‖x‖ + ‖y‖ for some |λ| = 1.

    The certificate also carries v(x*y) and, on a positive decision, the state
    attaining it, which satisfies |φ(x*y)| = ‖x‖‖y‖.
    """
    _same_shape(x, y)
    grid = settings.grid if grid is None else int(grid)
    lambda_grid = _lambda_grid(lambda_grid)

    nx, ny = op_norm(x), op_norm(y)
    target = nx + ny
    tol = parallel_tol(nx, ny)
    profile = _norm_profile(x, y)

    psi_star, achieved, _ = lambda_sweep(
        profile, lambda p: float(profile(np.array([p]))[0]), lambda_grid, 0.1 * tol
    )
    gap = float(max(0.0, target - achieved))
    decision = bool(gap <= tol)

    cross = numerical_radius(x.adjoint() @ y, grid)
    witness_value = abs(state_eval(x.adjoint() @ y, cross.witness)) if cross.witness else 0.0
    witness_tol = tol * max(1.0, target)
    witness = cross.witness if decision and witness_value >= nx * ny - witness_tol else None
    if decision and witness is None:
        logger.warning("x ∥ y decided but |φ(x*y)| = %.12g < ‖x‖‖y‖ = %.12g", witness_value, nx * ny)

    return ParallelismCertificate(
        kind="norm",
        decision=decision,
        lambda_star=cmath.exp(1j * psi_star),
        achieved=achieved,
        target=target,
        gap=gap,
        tol=tol,
        witness=witness,
        details={
            "norm_x": nx,
            "norm_y": ny,
            "psi_star": psi_star,
            "v_cross": cross.value,
            "witness_cross": witness_value,
        },
    )


__all__ = [
    "MIN_PARALLEL_GRID",
    "ParallelismCertificate",
    "is_marginal",
    "lambda_sweep",
    "norm_parallel",
    "parallel_tol",
    "vradius_parallel",
]
