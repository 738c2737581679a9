"""Vector states on matrix blocks and their convex combinations across blocks."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from ..algebra.element import AlgebraElement
from ..common.errors import DimensionMismatch

UNIT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class StateWitness:
    """A pure state ξ ↦ ⟨xξ, ξ⟩ on one block, carried with a convex weight.

    On its own a witness must have weight 1; weights below 1 only make sense
    inside a mixture passed to :func:`state_eval`.
    """

    vector: np.ndarray
    block: int = 0
    weight: float = 1.0

    def __post_init__(self) -> None:
        vec = np.array(self.vector, dtype=np.complex128, copy=True).reshape(-1)
        if abs(float(np.linalg.norm(vec)) - 1.0) > UNIT_TOL:
            raise ValueError(f"witness vector must be a unit vector (norm {np.linalg.norm(vec):.3e})")
        if not 0.0 <= self.weight <= 1.0:
            raise ValueError("witness weight must lie in [0, 1]")
        vec.setflags(write=False)
        object.__setattr__(self, "vector", vec)

    @classmethod
    def from_vector(cls, vector: Sequence[complex] | np.ndarray, block: int = 0) -> "StateWitness":
        vec = np.asarray(vector, dtype=np.complex128).reshape(-1)
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            raise ValueError("cannot build a state from the zero vector")
        return cls(vec / norm, block=block)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "block": self.block,
            "weight": self.weight,
            "vector": [[float(v.real), float(v.imag)] for v in self.vector],
        }


def _pure_value(x: AlgebraElement, w: StateWitness) -> complex:
    if not 0 <= w.block < len(x.blocks):
        raise DimensionMismatch(f"witness block {w.block} outside element with {len(x.blocks)} blocks")
    block = x.blocks[w.block]
    if block.shape[0] != w.vector.shape[0]:
        raise DimensionMismatch(
            f"witness of length {w.vector.shape[0]} does not fit block of size {block.shape[0]}"
        )
    return complex(np.vdot(w.vector, block @ w.vector))


def state_eval(x: AlgebraElement, w: StateWitness | Sequence[StateWitness]) -> complex:
    """φ(x) for a pure witness or a convex combination of witnesses."""
    parts: Tuple[StateWitness, ...] = (w,) if isinstance(w, StateWitness) else tuple(w)
    if not parts:
        raise ValueError("a state needs at least one witness")
    total = sum(p.weight for p in parts)
    if abs(total - 1.0) > UNIT_TOL:
        raise ValueError(f"witness weights must sum to 1, got {total}")
    return sum((p.weight * _pure_value(x, p) for p in parts), 0j)


def scalar_sup_identities(z: complex, grid: int = 4096) -> Tuple[float, float]:
    """Grid values of sup_θ |Re(e^{iθ}z)| and sup_θ |Im(e^{iθ}z)|; both tend to |z|."""
    thetas = np.linspace(0.0, 2.0 * np.pi, grid, endpoint=False)
    rotated = np.exp(1j * thetas) * complex(z)
    return float(np.max(np.abs(rotated.real))), float(np.max(np.abs(rotated.imag)))


def scalar_sup_product(a: complex, b: complex, theta0: float = 0.0) -> float:
    """sup_θ |Re(e^{iθ}a)|·|Re(e^{i(θ+θ0)}b)| in closed form.

    The Im analogue has the same value: both equal |a||b|(1 + |cos δ|)/2 where δ
    is the angle between a and e^{iθ0}b.
    """
    if a == 0 or b == 0:
        return 0.0
    delta = cmath.phase(cmath.exp(1j * theta0) * b) - cmath.phase(a)
    return abs(a) * abs(b) * (1.0 + abs(math.cos(delta))) / 2.0


__all__ = [
    "StateWitness",
    "scalar_sup_identities",
    "scalar_sup_product",
    "state_eval",
]
