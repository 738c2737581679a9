"""Verifiers for the numerical-radius inequalities.

Each verifier recomputes every quantity of one inequality chain from scratch and
returns a :class:`CheckReport`. A failing chain is a report, never an exception;
only corollaries whose hypothesis is not met raise :class:`InapplicableInput`.
"""

from __future__ import annotations

import logging
import math
from typing import Callable, Tuple

import numpy as np

from ..algebra.element import AlgebraElement
from ..algebra.linalg import (
    cartesian_parts,
    hermitian_norms,
    op_norm,
    rotated_imag_stack,
    rotated_real_stack,
    spectral_radius,
    stack_norms,
)
from ..common.config import settings
from ..common.errors import InapplicableInput, ShapeMismatch
from ..numrange.geometry import crawford_bounds
from ..numrange.sweep import (
    numerical_radius,
    numerical_radius_im,
    radius_alpha_beta,
    sweep_sup,
    theta_grid,
)
from .report import CheckReport, ReportBuilder, report_tol

logger = logging.getLogger(__name__)

FINE_GRID = 256
IDENTITY_TOL = 1e-12
COMMUTATOR_TOL = 1e-10

StackBuilder = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _grid(grid: int | None, minimum: int = 64) -> int:
    grid = settings.grid if grid is None else int(grid)
    if grid < minimum:
        raise ValueError(f"grid must be at least {minimum}, got {grid}")
    return grid


def _v(x: AlgebraElement, grid: int) -> float:
    return numerical_radius(x, grid).value


def _rotated_norms(x: AlgebraElement, thetas: np.ndarray, builder: StackBuilder) -> np.ndarray:
    """‖builder(x, θ)‖ for every θ, max over blocks."""
    out = np.zeros(thetas.shape[0])
    for block in x.blocks:
        out = np.maximum(out, hermitian_norms(builder(block, thetas)))
    return out


def product_sup(
    x: AlgebraElement,
    y: AlgebraElement,
    grid: int | None = None,
    *,
    part: str = "re",
    theta0: float = 0.0,
) -> Tuple[float, float]:
    """sup_θ ‖P(e^{iθ}x)·P(e^{i(θ+θ0)}y)‖ with P = Re or Im; returns (value, argmax)."""
    builder = rotated_real_stack if part == "re" else rotated_imag_stack
    if x.shape != y.shape:
        raise ShapeMismatch(f"block shapes differ: {x.shape} vs {y.shape}")

    def profile(thetas: np.ndarray) -> np.ndarray:
        out = np.zeros(thetas.shape[0])
        for bx, by in zip(x.blocks, y.blocks):
            products = builder(bx, thetas) @ builder(by, thetas + theta0)
            out = np.maximum(out, stack_norms(products))
        return out

    theta_star, value, _, _ = sweep_sup(profile, grid)
    return value, theta_star


def joint_sup(
    x: AlgebraElement,
    y: AlgebraElement,
    grid: int | None = None,
    *,
    part: str = "re",
) -> float:
    """sup_θ ‖P(e^{iθ}x)‖·‖P(e^{iθ}y)‖ with P = Re or Im."""
    builder = rotated_real_stack if part == "re" else rotated_imag_stack
    _, value, _, _ = sweep_sup(
        lambda t: _rotated_norms(x, t, builder) * _rotated_norms(y, t, builder), grid
    )
    return value


# ---------- unary chains ----------


def check_basic_bounds(x: AlgebraElement, grid: int | None = None) -> CheckReport:
    """½‖x‖ ≤ v(x) ≤ ‖x‖."""
    grid = _grid(grid)
    b = ReportBuilder("eq11", x)
    norm = b.quantity("norm", op_norm(x))
    half = b.quantity("half_norm", norm / 2.0)
    v = b.quantity("v", _v(x, grid))
    b.le("half_norm<=v", half, v)
    b.le("v<=norm", v, norm)
    return b.build()


def check_thm22(x: AlgebraElement, grid: int | None = None) -> CheckReport:
    """The Re-sweep, Im-sweep and (α, β)-sweep agree, and v(x*) = v(x)."""
    grid = _grid(grid)
    b = ReportBuilder("thm22", x)
    v_re = b.quantity("v_re", numerical_radius(x, grid).value)
    v_im = b.quantity("v_im", numerical_radius_im(x, grid).value)
    v_ab = b.quantity("v_alpha_beta", radius_alpha_beta(x, grid).value)
    v_star = b.quantity("v_adjoint", numerical_radius(x.adjoint(), grid).value)
    b.eq("v_re=v_im", v_re, v_im)
    b.eq("v_re=v_alpha_beta", v_re, v_ab)
    b.eq("v_adjoint=v_re", v_star, v_re)
    return b.build()


def check_thm23(x: AlgebraElement, grid: int | None = None) -> CheckReport:
    """Both chains of the refined ½‖x‖ ≤ v(x) ≤ ‖x‖ bounds.

    (i)  ½‖x‖ ≤ ½√(‖x*x + xx*‖ + 2c(x²)) ≤ v(x)
    (ii) v(x) ≤ ½√(‖x*x + xx*‖ + 2v(x²)) ≤ ½(‖x‖ + ‖x²‖^{1/2}) ≤ ‖x‖

    c(x²) enters through the lower end of its resolution enclosure, so a coarse
    grid can only weaken the lower chain, never break it.
    """
    grid = _grid(grid)
    x2 = x @ x
    b = ReportBuilder("thm23", x)
    norm = b.quantity("norm", op_norm(x))
    norm_x2 = b.quantity("norm_x2", op_norm(x2))
    s = b.quantity("norm_sum_squares", op_norm(x.adjoint() @ x + x @ x.adjoint()))
    c_low, c_high = crawford_bounds(x2, grid)
    b.quantity("crawford_x2", c_high)
    b.quantity("crawford_x2_lower", c_low)
    v2 = b.quantity("v_x2", _v(x2, grid))
    v = b.quantity("v", _v(x, grid))

    half = b.quantity("half_norm", norm / 2.0)
    lower_mid = b.quantity("lower_mid", 0.5 * math.sqrt(s + 2.0 * c_low))
    upper_mid = b.quantity("upper_mid", 0.5 * math.sqrt(s + 2.0 * v2))
    upper_outer = b.quantity("upper_outer", 0.5 * (norm + math.sqrt(norm_x2)))
    # reported only: an intermediate of the upper chain's derivation
    b.quantity("proof_bound", 0.5 * math.sqrt(norm * norm + 3.0 * norm_x2))

    b.le("half_norm<=lower_mid", half, lower_mid)
    b.le("lower_mid<=v", lower_mid, v)
    b.le("v<=upper_mid", v, upper_mid)
    b.le("upper_mid<=upper_outer", upper_mid, upper_outer)
    b.le("upper_outer<=norm", upper_outer, norm)
    return b.build()


def check_thm26(x: AlgebraElement, grid: int | None = None) -> CheckReport:
    """max{‖Re x‖, ‖Im x‖} ≤ v(x), with v(x) from the (α, β) sweep."""
    grid = _grid(grid)
    ab = radius_alpha_beta(x, grid)
    b = ReportBuilder("thm26", x)
    v_ab = b.quantity("v_alpha_beta", ab.value)
    v = b.quantity("v", _v(x, grid))
    re_norm = b.quantity("norm_re", ab.extras["re_norm"])
    im_norm = b.quantity("norm_im", ab.extras["im_norm"])
    b.le("norm_re<=v", re_norm, v_ab)
    b.le("norm_im<=v", im_norm, v_ab)
    b.eq("v_alpha_beta=v", v_ab, v)
    return b.build()


def check_thm28(x: AlgebraElement, grid: int | None = None) -> CheckReport:
    """v(x) = ½‖x‖  ⇔  ‖x‖ = ‖Re(e^{iθ}x)‖ + ‖Im(e^{iθ}x)‖ for every θ.

    Also checks Im(Re(e^{iθ}x)·Im(e^{iθ}x)) = (xx* − x*x)/4 on the whole grid.
    """
    grid = _grid(grid, FINE_GRID)
    thetas = theta_grid(grid)
    b = ReportBuilder("thm28", x)
    norm = b.quantity("norm", op_norm(x))
    v = b.quantity("v", _v(x, grid))
    sums = _rotated_norms(x, thetas, rotated_real_stack) + _rotated_norms(
        x, thetas, rotated_imag_stack
    )
    b.quantity("sum_min", float(np.min(sums)))
    b.quantity("sum_max", float(np.max(sums)))
    tol = report_tol(norm, v, float(np.max(sums)))

    cond_i = abs(v - norm / 2.0) <= tol
    cond_ii = bool(np.max(np.abs(sums - norm)) <= tol)
    b.flag("v_is_half_norm", cond_i)
    b.flag("sum_is_norm", cond_ii)
    b.require("equivalence", cond_i == cond_ii)

    defect = 0.0
    for block in x.blocks:
        re = rotated_real_stack(block, thetas)
        im = rotated_imag_stack(block, thetas)
        product = re @ im
        im_product = -0.5j * (product - np.conj(np.swapaxes(product, -1, -2)))
        star = block.conj().T
        target = (block @ star - star @ block) / 4.0
        defect = max(defect, float(np.max(np.abs(im_product - target[None]))))
    b.quantity("commutator_identity_defect", defect)
    b.require("commutator_identity", defect <= COMMUTATOR_TOL * max(1.0, norm * norm))
    return b.build(tol)


def check_thm29(x: AlgebraElement, grid: int | None = None) -> CheckReport:
    """½‖x‖ ≤ ½√‖x*x + xx*‖ ≤ v(x) ≤ (1/√2)√‖x*x + xx*‖ ≤ ‖x‖, plus x*x + xx* = 2Re²x + 2Im²x."""
    grid = _grid(grid)
    star = x.adjoint()
    sum_squares = star @ x + x @ star
    re, im = cartesian_parts(x)

    b = ReportBuilder("thm29", x)
    norm = b.quantity("norm", op_norm(x))
    s = b.quantity("norm_sum_squares", op_norm(sum_squares))
    v = b.quantity("v", _v(x, grid))
    half = b.quantity("half_norm", norm / 2.0)
    lower_mid = b.quantity("lower_mid", 0.5 * math.sqrt(s))
    upper_mid = b.quantity("upper_mid", math.sqrt(s) / math.sqrt(2.0))
    b.le("half_norm<=lower_mid", half, lower_mid)
    b.le("lower_mid<=v", lower_mid, v)
    b.le("v<=upper_mid", v, upper_mid)
    b.le("upper_mid<=norm", upper_mid, norm)

    defect = (sum_squares - (re @ re) * 2.0 - (im @ im) * 2.0).max_abs()
    b.quantity("cartesian_identity_defect", defect)
    b.require("cartesian_identity", defect <= IDENTITY_TOL * (1.0 + norm * norm))
    return b.build()


def check_cor24(x: AlgebraElement, grid: int | None = None) -> CheckReport:
    """If x² = 0 then v(x) = ½‖x‖."""
    grid = _grid(grid)
    norm = op_norm(x)
    norm_x2 = op_norm(x @ x)
    if norm_x2 > 1e-10 * (1.0 + norm * norm):
        raise InapplicableInput(f"x² ≠ 0 (‖x²‖ = {norm_x2:.3e})")
    b = ReportBuilder("cor24", x)
    b.quantity("norm", norm)
    b.quantity("norm_x2", norm_x2)
    v = b.quantity("v", _v(x, grid))
    half = b.quantity("half_norm", norm / 2.0)
    b.eq("v=half_norm", v, half)
    return b.build()


def check_cor25(x: AlgebraElement, grid: int | None = None) -> CheckReport:
    """If v(x) = ‖x‖ then ‖x²‖ = ‖x‖²."""
    grid = _grid(grid)
    norm = op_norm(x)
    v = _v(x, grid)
    tol = report_tol(norm, v)
    if abs(v - norm) > tol:
        raise InapplicableInput(f"v(x) ≠ ‖x‖ ({v:.12g} vs {norm:.12g})")
    b = ReportBuilder("cor25", x)
    b.quantity("norm", norm)
    b.quantity("v", v)
    norm_x2 = b.quantity("norm_x2", op_norm(x @ x))
    norm_sq = b.quantity("norm_squared", norm * norm)
    b.eq("norm_x2=norm_squared", norm_x2, norm_sq)
    return b.build(tol * (1.0 + norm * norm))


# ---------- pair chains ----------


def check_lemma210(z: AlgebraElement, w: AlgebraElement) -> CheckReport:
    """r(z + w) ≤ ½(‖z‖ + ‖w‖ + √((‖z‖ − ‖w‖)² + 4 min{‖zw‖, ‖wz‖}))."""
    b = ReportBuilder("lem210", z, w)
    r = b.quantity("r_sum", spectral_radius(z + w))
    nz = b.quantity("norm_z", op_norm(z))
    nw = b.quantity("norm_w", op_norm(w))
    m = b.quantity("min_cross", min(op_norm(z @ w), op_norm(w @ z)))
    bound = b.quantity("bound", 0.5 * (nz + nw + math.sqrt((nz - nw) ** 2 + 4.0 * m)))
    b.le("r_sum<=bound", r, bound)
    return b.build()


def check_thm211(x: AlgebraElement, y: AlgebraElement, grid: int | None = None) -> CheckReport:
    """v(x + y) ≤ ½(v(x) + v(y)) + ½√((v(x) − v(y))² + 4 sup_θ‖P(e^{iθ}x)P(e^{iθ}y)‖) ≤ v(x) + v(y).

    Checked for both P = Re and P = Im on the same grid.
    """
    grid = _grid(grid, FINE_GRID)
    b = ReportBuilder("thm211", x, y)
    vx = b.quantity("v_x", _v(x, grid))
    vy = b.quantity("v_y", _v(y, grid))
    vxy = b.quantity("v_sum", _v(x + y, grid))
    total = b.quantity("v_x+v_y", vx + vy)
    for part in ("re", "im"):
        p, _ = product_sup(x, y, grid, part=part)
        b.quantity(f"product_sup_{part}", p)
        mid = b.quantity(
            f"refined_{part}", 0.5 * (vx + vy) + 0.5 * math.sqrt((vx - vy) ** 2 + 4.0 * p)
        )
        b.le(f"v_sum<=refined_{part}", vxy, mid)
        b.le(f"refined_{part}<=v_x+v_y", mid, total)
    return b.build()


__all__ = [
    "check_basic_bounds",
    "check_cor24",
    "check_cor25",
    "check_lemma210",
    "check_thm211",
    "check_thm22",
    "check_thm23",
    "check_thm26",
    "check_thm28",
    "check_thm29",
    "joint_sup",
    "product_sup",
]
