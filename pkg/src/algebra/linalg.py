"""Adjoint, Cartesian decomposition, C*-norm and spectral radius of algebra elements."""

from __future__ import annotations

import logging
import math
from typing import Tuple

import numpy as np

from ..common.config import settings
from ..common.errors import NoConvergence
from .eigen import jacobi_eigh
from .element import AlgebraElement

logger = logging.getLogger(__name__)


def adjoint(x: AlgebraElement) -> AlgebraElement:
    return x.adjoint()


def cartesian_parts(x: AlgebraElement) -> Tuple[AlgebraElement, AlgebraElement]:
    """Return (Re x, Im x) with Re x = (x + x*)/2 and Im x = (x - x*)/(2i)."""
    star = x.adjoint()
    return (x + star) * 0.5, (x - star) * (-0.5j)


# ---------- batched helpers over θ grids ----------


def rotated_real_stack(block: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Stack of Re(e^{iθ} block) for every θ, shape (len(thetas), n, n)."""
    z = np.exp(1j * np.asarray(thetas, dtype=float))[:, None, None] * block[None]
    return 0.5 * (z + np.conj(np.swapaxes(z, -1, -2)))


def rotated_imag_stack(block: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Stack of Im(e^{iθ} block) for every θ."""
    z = np.exp(1j * np.asarray(thetas, dtype=float))[:, None, None] * block[None]
    return -0.5j * (z - np.conj(np.swapaxes(z, -1, -2)))


def hermitian_norms(stack: np.ndarray) -> np.ndarray:
    """‖H‖ = max(|λ_max|, |λ_min|) for a stack of Hermitian matrices."""
    values, _, _ = jacobi_eigh(stack)
    values = np.atleast_2d(values)
    return np.maximum(np.abs(values[:, 0]), np.abs(values[:, -1]))


def stack_norms(stack: np.ndarray) -> np.ndarray:
    """Spectral norms √λ_max(M*M) for a stack of arbitrary square matrices."""
    m = np.asarray(stack, dtype=np.complex128)
    if m.ndim == 2:
        m = m[None]
    gram = np.conj(np.swapaxes(m, -1, -2)) @ m
    values, _, _ = jacobi_eigh(gram)
    values = np.atleast_2d(values)
    return np.sqrt(np.maximum(values[:, 0], 0.0))


def _block_norm(block: np.ndarray) -> float:
    if not np.any(block):
        return 0.0
    return float(stack_norms(block)[0])


# ---------- norms ----------


def op_norm(x: AlgebraElement) -> float:
    """C*-norm: max over blocks of √λ_max(x*x)."""
    return max(_block_norm(b) for b in x.blocks)


def _gelfand(block: np.ndarray, rtol: float, max_squarings: int) -> float:
    norm = _block_norm(block)
    if norm == 0.0:
        return 0.0
    n = block.shape[0]
    current = block / norm
    log_scale = math.log(norm)
    estimate = norm
    stable = 0
    for k in range(1, max_squarings + 1):
        current = current @ current
        nu = _block_norm(current)
        if nu == 0.0:
            return 0.0
        current = current / nu
        # log ‖x^{2^k}‖ accumulated without forming the power itself
        log_scale = 2.0 * log_scale + math.log(nu)
        refined = math.exp(log_scale / 2.0**k)
        # norms of a non-normal block can plateau before x^n; only trust 2^k ≥ n
        if 2**k >= n and abs(refined - estimate) < rtol * estimate:
            stable += 1
        else:
            stable = 0
        estimate = refined
        if stable >= 2:
            logger.debug("gelfand converged after %d squarings", k)
            return refined
    raise NoConvergence(
        f"Gelfand iteration did not stabilize after {max_squarings} squarings"
    )


def spectral_radius(
    x: AlgebraElement,
    *,
    rtol: float | None = None,
    max_squarings: int | None = None,
) -> float:
    """r(x) = lim ‖x^k‖^{1/k}, by repeated squaring with rescaling, max over blocks."""
    rtol = settings.gelfand_rtol if rtol is None else rtol
    max_squarings = settings.gelfand_max_squarings if max_squarings is None else max_squarings
    return max(_gelfand(b, rtol, max_squarings) for b in x.blocks)


__all__ = [
    "adjoint",
    "cartesian_parts",
    "hermitian_norms",
    "op_norm",
    "rotated_imag_stack",
    "rotated_real_stack",
    "spectral_radius",
    "stack_norms",
]
