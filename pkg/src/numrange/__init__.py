"""
Numerical range public API

便捷导出：
- 状态：StateWitness, state_eval
- 数值半径扫描：numerical_radius, numerical_radius_im, radius_alpha_beta
- 数值域几何：range_boundary, crawford
"""

from .geometry import (
    RangeSample,
    convex_hull,
    crawford,
    crawford_bounds,
    hull_distance,
    range_boundary,
)
from .states import StateWitness, scalar_sup_identities, scalar_sup_product, state_eval
from .sweep import (
    SweepResult,
    alpha_beta_stack,
    numerical_radius,
    numerical_radius_im,
    radius_alpha_beta,
    sweep_sup,
)

__all__ = [
    # States
    "StateWitness",
    "scalar_sup_identities",
    "scalar_sup_product",
    "state_eval",
    # Sweeps
    "SweepResult",
    "alpha_beta_stack",
    "numerical_radius",
    "numerical_radius_im",
    "radius_alpha_beta",
    "sweep_sup",
    # Geometry
    "RangeSample",
    "convex_hull",
    "crawford",
    "crawford_bounds",
    "hull_distance",
    "range_boundary",
]
