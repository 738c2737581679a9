"""Hermitian eigensolver: cyclic complex Jacobi, vectorized over a batch of matrices.

Every matrix in the batch receives the same (p, q) rotation schedule with its own
rotation angle, so a whole θ grid of Hermitian matrices is diagonalized in one
pass of numpy operations.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..common.config import settings
from ..common.errors import NoConvergence, NotHermitian
from .element import AlgebraElement

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-12


def _off_norm(a: np.ndarray, mask: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(np.abs(a[:, mask]) ** 2, axis=-1))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int, floor: np.ndarray) -> None:
    """Annihilate a[:, p, q] in place with a 2x2 unitary rotation per matrix.

    Pivots with |a_pq| <= floor (eps·‖H‖_F per matrix) are zeroed without rotating.
    """
    apq = a[:, p, q]
    b = np.abs(apq)
    active = b > floor
    safe_b = np.where(active, b, 1.0)
    phase = np.where(active, apq / safe_b, 1.0)

    tau = (a[:, q, q].real - a[:, p, p].real) / (2.0 * safe_b)
    t = np.where(tau >= 0.0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
    t = np.where(active, t, 0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c

    # G = diag(1, conj(phase)) @ [[c, s], [-s, c]] restricted to (p, q)
    gpp = c.astype(np.complex128)
    gpq = s.astype(np.complex128)
    gqp = -s * np.conj(phase)
    gqq = c * np.conj(phase)

    colp = a[:, :, p].copy()
    colq = a[:, :, q].copy()
    a[:, :, p] = colp * gpp[:, None] + colq * gqp[:, None]
    a[:, :, q] = colp * gpq[:, None] + colq * gqq[:, None]

    rowp = a[:, p, :].copy()
    rowq = a[:, q, :].copy()
    a[:, p, :] = np.conj(gpp)[:, None] * rowp + np.conj(gqp)[:, None] * rowq
    a[:, q, :] = np.conj(gpq)[:, None] * rowp + np.conj(gqq)[:, None] * rowq

    a[:, p, q] = 0.0
    a[:, q, p] = 0.0
    a[:, p, p] = a[:, p, p].real
    a[:, q, q] = a[:, q, q].real

    vp = v[:, :, p].copy()
    vq = v[:, :, q].copy()
    v[:, :, p] = vp * gpp[:, None] + vq * gqp[:, None]
    v[:, :, q] = vp * gpq[:, None] + vq * gqq[:, None]


def jacobi_eigh(
    stack: np.ndarray,
    *,
    tol: float | None = None,
    max_sweeps: int | None = None,
) -> Tuple[np.ndarray, np.ndarray, int]:
    """Diagonalize one Hermitian matrix or a (batch, n, n) stack of them.

    Returns eigenvalues sorted descending, the matching eigenvectors as columns,
    and the number of sweeps used. The input is symmetrized before rotating.
    """
    tol = settings.jacobi_tol if tol is None else tol
    max_sweeps = settings.jacobi_max_sweeps if max_sweeps is None else max_sweeps

    a = np.array(stack, dtype=np.complex128, copy=True)
    single = a.ndim == 2
    if single:
        a = a[None]
    a = 0.5 * (a + np.conj(np.swapaxes(a, -1, -2)))
    batch, n, _ = a.shape

    v = np.broadcast_to(np.eye(n, dtype=np.complex128), a.shape).copy()
    mask = ~np.eye(n, dtype=bool)
    frobenius = np.sqrt(np.sum(np.abs(a) ** 2, axis=(-2, -1)))
    threshold = tol * frobenius
    floor = np.finfo(np.float64).eps * frobenius

    sweeps = 0
    off = _off_norm(a, mask)
    while np.any(off > threshold):
        if sweeps >= max_sweeps:
            worst = float(np.max(off - threshold))
            raise NoConvergence(
                f"Jacobi did not converge in {max_sweeps} sweeps (excess off-diagonal mass {worst:.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q, floor)
        sweeps += 1
        off = _off_norm(a, mask)

    values = np.real(np.diagonal(a, axis1=-2, axis2=-1)).copy()
    order = np.argsort(-values, axis=-1, kind="stable")
    values = np.take_along_axis(values, order, axis=-1)
    vectors = np.take_along_axis(v, order[:, None, :], axis=-1)
    logger.debug("jacobi: batch=%d n=%d sweeps=%d", batch, n, sweeps)

    if single:
        return values[0], vectors[0], sweeps
    return values, vectors, sweeps


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Eigenpairs of a Hermitian element, merged across blocks.

    ``blocks[k]`` tags the block that ``eigenvectors[k]`` lives in; vectors from
    different blocks have different lengths. Eigenvalues are sorted descending.
    """

    eigenvalues: np.ndarray
    eigenvectors: Tuple[np.ndarray, ...]
    blocks: Tuple[int, ...]
    residual: float
    shape: Tuple[int, ...]
    sweeps: int = 0

    def top(self) -> Tuple[float, np.ndarray, int]:
        return float(self.eigenvalues[0]), self.eigenvectors[0], self.blocks[0]

    def bottom(self) -> Tuple[float, np.ndarray, int]:
        return float(self.eigenvalues[-1]), self.eigenvectors[-1], self.blocks[-1]

    def reconstruct(self) -> AlgebraElement:
        """Rebuild V Λ V* blockwise."""
        parts = [np.zeros((n, n), dtype=np.complex128) for n in self.shape]
        for lam, vec, block in zip(self.eigenvalues, self.eigenvectors, self.blocks):
            parts[block] += lam * np.outer(vec, vec.conj())
        return AlgebraElement(tuple(parts))

    def orthonormality_defect(self) -> float:
        worst = 0.0
        for index in range(len(self.shape)):
            cols = [vec for vec, b in zip(self.eigenvectors, self.blocks) if b == index]
            basis = np.column_stack(cols)
            gram = basis.conj().T @ basis
            worst = max(worst, float(np.max(np.abs(gram - np.eye(gram.shape[0])))))
        return worst


def herm_eig(h: AlgebraElement, tol: float | None = None) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian element, block by block."""
    if h.hermitian_defect() > HERMITIAN_TOL * (1.0 + h.max_abs()):
        raise NotHermitian(
            f"element is not Hermitian (defect {h.hermitian_defect():.3e})"
        )

    values: list[float] = []
    vectors: list[np.ndarray] = []
    tags: list[int] = []
    residual = 0.0
    sweeps = 0
    for index, block in enumerate(h.blocks):
        lam, vec, used = jacobi_eigh(block, tol=tol)
        sweeps = max(sweeps, used)
        herm = 0.5 * (block + block.conj().T)
        res = herm @ vec - vec * lam[None, :]
        residual = max(residual, float(np.max(np.linalg.norm(res, axis=0))))
        values.extend(lam.tolist())
        vectors.extend(vec[:, k].copy() for k in range(vec.shape[1]))
        tags.extend([index] * len(lam))

    order = np.argsort(-np.asarray(values), kind="stable")
    return EigenDecomposition(
        eigenvalues=np.asarray(values)[order],
        eigenvectors=tuple(vectors[k] for k in order),
        blocks=tuple(tags[k] for k in order),
        residual=residual,
        shape=h.shape,
        sweeps=sweeps,
    )


__all__ = ["EigenDecomposition", "herm_eig", "jacobi_eigh"]
