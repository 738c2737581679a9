"""Finite-dimensional C*-algebra elements: M_n(C) and direct sums of matrix blocks."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from numbers import Number
from typing import Iterable, Iterator, Sequence, Tuple

import numpy as np

from ..common.errors import NonFiniteEntries, ShapeMismatch

Shape = Tuple[int, ...]


def _as_block(matrix: object) -> np.ndarray:
    block = np.array(matrix, dtype=np.complex128, copy=True)
    if block.ndim == 0:
        block = block.reshape(1, 1)
    if block.ndim != 2 or block.shape[0] != block.shape[1] or block.shape[0] == 0:
        raise ShapeMismatch(f"block must be a non-empty square matrix, got shape {block.shape}")
    if not np.all(np.isfinite(block)):
        raise NonFiniteEntries("block contains NaN or Inf entries")
    block.setflags(write=False)
    return block


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """An element of M_{n1} ⊕ … ⊕ M_{nk}; a single block models M_n.

    Blocks are immutable complex128 arrays. Sums and products are defined only
    between elements with the same block shape signature.
    """

    blocks: Tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        blocks = tuple(_as_block(b) for b in self.blocks)
        if not blocks:
            raise ShapeMismatch("an element needs at least one block")
        object.__setattr__(self, "blocks", blocks)

    # ---------- constructors ----------

    @classmethod
    def from_matrix(cls, matrix: object) -> "AlgebraElement":
        return cls((matrix,))

    @classmethod
    def direct_sum(cls, *parts: "AlgebraElement | object") -> "AlgebraElement":
        blocks: list[np.ndarray] = []
        for part in parts:
            if isinstance(part, AlgebraElement):
                blocks.extend(part.blocks)
            else:
                blocks.append(part)  # type: ignore[arg-type]
        return cls(tuple(blocks))

    @classmethod
    def identity(cls, shape: Shape | int) -> "AlgebraElement":
        dims = (shape,) if isinstance(shape, int) else tuple(shape)
        return cls(tuple(np.eye(n, dtype=np.complex128) for n in dims))

    @classmethod
    def zeros(cls, shape: Shape | int) -> "AlgebraElement":
        dims = (shape,) if isinstance(shape, int) else tuple(shape)
        return cls(tuple(np.zeros((n, n), dtype=np.complex128) for n in dims))

    @classmethod
    def scalar_blocks(cls, shape: Shape, values: Sequence[complex]) -> "AlgebraElement":
        """Blockwise scalar multiples of the identity, e.g. central elements."""
        if len(values) != len(shape):
            raise ShapeMismatch("need one scalar per block")
        return cls(tuple(v * np.eye(n, dtype=np.complex128) for n, v in zip(shape, values)))

    # ---------- structure ----------

    @property
    def shape(self) -> Shape:
        return tuple(b.shape[0] for b in self.blocks)

    @property
    def is_direct_sum(self) -> bool:
        return len(self.blocks) > 1

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block(self, index: int) -> np.ndarray:
        return self.blocks[index]

    def map(self, fn) -> "AlgebraElement":
        return AlgebraElement(tuple(fn(b) for b in self.blocks))

    def _zip(self, other: "AlgebraElement") -> Iterable[Tuple[np.ndarray, np.ndarray]]:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if self.shape != other.shape:
            raise ShapeMismatch(f"block shapes differ: {self.shape} vs {other.shape}")
        return zip(self.blocks, other.blocks)

    # ---------- arithmetic ----------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(tuple(a + b for a, b in self._zip(other)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(tuple(a - b for a, b in self._zip(other)))

    def __neg__(self) -> "AlgebraElement":
        return self.map(lambda b: -b)

    def __mul__(self, scalar: Number) -> "AlgebraElement":
        if isinstance(scalar, AlgebraElement):
            raise TypeError("use '@' for the algebra product")
        return self.map(lambda b: complex(scalar) * b)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Number) -> "AlgebraElement":
        return self.map(lambda b: b / complex(scalar))

    def __matmul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(tuple(a @ b for a, b in self._zip(other)))

    def power(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise ValueError("negative powers are not supported")
        return self.map(lambda b: np.linalg.matrix_power(b, k))

    def adjoint(self) -> "AlgebraElement":
        return self.map(lambda b: b.conj().T)

    @property
    def H(self) -> "AlgebraElement":
        return self.adjoint()

    # ---------- entrywise measures ----------

    def max_abs(self) -> float:
        return max(float(np.max(np.abs(b))) for b in self.blocks)

    def frobenius(self) -> float:
        return float(np.sqrt(sum(np.sum(np.abs(b) ** 2) for b in self.blocks)))

    def allclose(self, other: "AlgebraElement", atol: float = 1e-12) -> bool:
        return all(np.allclose(a, b, rtol=0.0, atol=atol) for a, b in self._zip(other))

    # ---------- predicates ----------

    def hermitian_defect(self) -> float:
        return max(float(np.max(np.abs(b - b.conj().T))) for b in self.blocks)

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return self.hermitian_defect() <= tol * (1.0 + self.max_abs())

    def is_normal(self, tol: float = 1e-10) -> bool:
        commutator = self.H @ self - self @ self.H
        return commutator.max_abs() <= tol * (1.0 + self.max_abs() ** 2)

    def commutes_with(self, other: "AlgebraElement", tol: float = 1e-10) -> bool:
        return (self @ other - other @ self).max_abs() <= tol

    def matrix_units(self) -> Iterator["AlgebraElement"]:
        """Yield the matrix units E_ij of every block; they generate the algebra."""
        for index, n in enumerate(self.shape):
            for i in range(n):
                for j in range(n):
                    blocks = [np.zeros((m, m), dtype=np.complex128) for m in self.shape]
                    blocks[index][i, j] = 1.0
                    yield AlgebraElement(tuple(blocks))

    # ---------- identity ----------

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(repr(self.shape).encode("ascii"))
        for b in self.blocks:
            h.update(np.ascontiguousarray(b).tobytes())
        return h.hexdigest()[:16]

    def __repr__(self) -> str:
        return f"AlgebraElement(shape={self.shape}, digest={self.digest()})"


__all__ = ["AlgebraElement", "Shape"]
