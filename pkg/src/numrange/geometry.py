"""Boundary of the numerical range and the Crawford number.

For each θ the top eigenvector ξ_θ of Re(e^{iθ}x) is a support point of V(x) in
direction e^{-iθ}; the points ⟨xξ_θ, ξ_θ⟩ trace the boundary. The Crawford
number is read off as the distance from 0 to the convex hull of those points.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ..algebra.eigen import jacobi_eigh
from ..algebra.element import AlgebraElement
from ..algebra.linalg import rotated_real_stack
from .states import StateWitness
from .sweep import MIN_GRID, _check_grid, theta_grid

logger = logging.getLogger(__name__)

HULL_EPS = 1e-12

Point = Tuple[float, float]


@dataclass(frozen=True, eq=False)
class RangeSample:
    """Support points of V(x), one per angle, sorted by θ over [0, 2π)."""

    thetas: np.ndarray
    points: np.ndarray
    witnesses: Tuple[StateWitness, ...]

    @property
    def resolution(self) -> int:
        return int(self.thetas.shape[0])

    def __len__(self) -> int:
        return self.resolution

    def to_dict(self) -> Dict[str, Any]:
        return {
            "resolution": self.resolution,
            "points": [
                {
                    "theta": float(t),
                    "point": [float(p.real), float(p.imag)],
                    "block": w.block,
                }
                for t, p, w in zip(self.thetas, self.points, self.witnesses)
            ],
        }


def range_boundary(x: AlgebraElement, grid: int | None = None) -> RangeSample:
    grid = _check_grid(grid, MIN_GRID)
    thetas = theta_grid(grid)

    best = np.full(grid, -np.inf)
    points = np.zeros(grid, dtype=np.complex128)
    vectors: List[np.ndarray | None] = [None] * grid
    owner = np.zeros(grid, dtype=int)

    for index, block in enumerate(x.blocks):
        values, vecs, _ = jacobi_eigh(rotated_real_stack(block, thetas))
        top = values[:, 0]
        xi = vecs[:, :, 0]
        pts = np.einsum("gi,ij,gj->g", xi.conj(), block, xi)
        for g in np.nonzero(top > best)[0]:
            vectors[g] = xi[g]
            owner[g] = index
        points = np.where(top > best, pts, points)
        best = np.maximum(best, top)

    witnesses = tuple(
        StateWitness.from_vector(v, block=int(b)) for v, b in zip(vectors, owner)
    )
    logger.debug("range boundary: grid=%d blocks=%d", grid, len(x.blocks))
    return RangeSample(thetas=thetas, points=points, witnesses=witnesses)


# ---------- planar geometry ----------


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[complex] | np.ndarray) -> np.ndarray:
    """Counter-clockwise hull vertices (monotone chain), collinear points dropped.

    Degenerate inputs come back as one or two vertices.
    """
    pts = sorted({(float(p.real), float(p.imag)) for p in np.asarray(points, dtype=complex)})
    if len(pts) <= 2:
        return np.array([complex(*p) for p in pts], dtype=np.complex128)

    scale = max(max(abs(a), abs(b)) for a, b in pts) or 1.0
    eps = HULL_EPS * scale * scale

    def chain(seq: Sequence[Point]) -> List[Point]:
        out: List[Point] = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= eps:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:
        hull = [pts[0], pts[-1]]
    return np.array([complex(*p) for p in hull], dtype=np.complex128)


def segment_distance(a: complex, b: complex, z: complex = 0j) -> float:
    d = b - a
    length2 = d.real * d.real + d.imag * d.imag
    if length2 == 0.0:
        return abs(z - a)
    t = ((z - a) * d.conjugate()).real / length2
    t = min(1.0, max(0.0, t))
    return abs(z - (a + t * d))


def hull_distance(hull: np.ndarray, z: complex = 0j) -> float:
    """Distance from z to the convex polygon with CCW vertices ``hull``; 0 inside."""
    vertices = [complex(v) for v in hull]
    if not vertices:
        raise ValueError("empty hull")
    if len(vertices) == 1:
        return abs(z - vertices[0])
    if len(vertices) == 2:
        return segment_distance(vertices[0], vertices[1], z)

    scale = max(abs(v) for v in vertices) or 1.0
    eps = HULL_EPS * scale * scale
    edges = list(zip(vertices, vertices[1:] + vertices[:1]))
    target = (z.real, z.imag)
    inside = all(
        _cross((a.real, a.imag), (b.real, b.imag), target) >= -eps for a, b in edges
    )
    if inside:
        return 0.0
    return min(segment_distance(a, b, z) for a, b in edges)


def crawford(x: AlgebraElement, grid: int | None = None) -> float:
    """c(x) = inf |φ(x)|, the distance from 0 to the hull of sampled support points.

    Sampling only ever shrinks the hull, so when 0 lies outside V(x) the value
    can sit slightly above the true distance; a finer grid tightens it.
    """
    return crawford_bounds(x, grid)[1]


def crawford_bounds(x: AlgebraElement, grid: int | None = None) -> Tuple[float, float]:
    """(lower, upper) enclosure of c(x) at the given resolution.

    ``upper`` is the hull distance returned by :func:`crawford`. Between two
    support points taken one grid step apart, the boundary of V(x) stays inside
    the triangle cut off by their support lines, whose height is at most
    edge·tan(π/grid)/2; subtracting the largest such height gives ``lower``.
    Degenerate hulls (a point or a segment) are sampled exactly.
    """
    sample = range_boundary(x, grid)
    hull = convex_hull(sample.points)
    upper = hull_distance(hull)
    if not math.isfinite(upper):
        raise ValueError("non-finite Crawford distance")
    if len(hull) <= 2 or upper == 0.0:
        return upper, upper
    edges = np.abs(np.roll(hull, -1) - hull)
    height = float(np.max(edges)) * math.tan(math.pi / sample.resolution) / 2.0
    return max(0.0, upper - height), upper


__all__ = [
    "RangeSample",
    "convex_hull",
    "crawford",
    "crawford_bounds",
    "hull_distance",
    "range_boundary",
    "segment_distance",
]
