"""Parallelism verifiers: witness equivalence, the product-sup identities, identity
parallelism and invariance under central unitaries."""

from __future__ import annotations

import logging

from ..algebra.element import AlgebraElement
from ..algebra.linalg import op_norm
from ..common.errors import InapplicableInput, NotCentral, NotUnitary
from ..inequalities.checks import joint_sup, product_sup
from ..inequalities.report import CheckReport, ReportBuilder, report_tol
from ..numrange.states import scalar_sup_product, state_eval
from ..numrange.sweep import numerical_radius
from .certificates import ParallelismCertificate, vradius_parallel
from .witness import pure_state_witness

logger = logging.getLogger(__name__)

CENTRAL_TOL = 1e-10
WITNESS_TOL = 1e-6


def check_thm213_equivalence(
    x: AlgebraElement,
    y: AlgebraElement,
    grid: int | None = None,
    *,
    lambda_grid: int | None = None,
) -> CheckReport:
    """x ∥_v y  ⇔  some pure state has |φ(x)φ(y)| = v(x)v(y).

    Disagreement fails the report unless the λ-sweep decision is marginal.
    """
    cert = vradius_parallel(x, y, grid, lambda_grid=lambda_grid)
    witness = pure_state_witness(x, y, grid, certificate=cert)

    b = ReportBuilder("thm213", x, y)
    vx = b.quantity("v_x", cert.details["v_x"])
    vy = b.quantity("v_y", cert.details["v_y"])
    b.quantity("achieved", cert.achieved)
    b.quantity("target", cert.target)
    b.quantity("gap", cert.gap)
    b.flag("parallel", cert.decision)
    b.flag("witness_exists", witness is not None)
    if witness is not None:
        product = b.quantity("witness_product", abs(state_eval(x, witness) * state_eval(y, witness)))
        allowance = b.quantity(
            "witness_tol", min(2.0 * cert.tol * max(1.0, vx + vy), WITNESS_TOL)
        )
        b.require("witness_equality", product >= vx * vy - allowance)
        b.detail("witness", witness.to_dict())
    agree = cert.decision == (witness is not None)
    if not agree and cert.marginal:
        logger.info("thm213: decisions disagree on a marginal pair (gap %.3e)", cert.gap)
    b.require("equivalence", agree or cert.marginal)
    b.detail("certificate", cert.to_dict())
    return b.build(cert.tol, marginal=cert.marginal)


def _require_parallel(cert: ParallelismCertificate) -> None:
    if not cert.decision:
        raise InapplicableInput(f"x and y are not v-parallel (gap {cert.gap:.3e} > tol {cert.tol:.3e})")


def check_cor212(
    x: AlgebraElement,
    y: AlgebraElement,
    grid: int | None = None,
    *,
    lambda_grid: int | None = None,
) -> CheckReport:
    """If x ∥_v y with v(x + e^{iθ0}y) = v(x) + v(y), then

        sup_θ ‖P(e^{iθ}x)·P(e^{i(θ+θ0)}y)‖ = v(x)v(y)  for P = Re and P = Im,

    and the witness φ has sup_θ |P(e^{iθ}φ(x))|·|P(e^{i(θ+θ0)}φ(y))| = v(x)v(y).
    The joint sups without the θ0 shift are reported but not asserted.
    """
    cert = vradius_parallel(x, y, grid, lambda_grid=lambda_grid)
    _require_parallel(cert)
    theta0 = cert.theta0

    b = ReportBuilder("cor212", x, y)
    vx = b.quantity("v_x", cert.details["v_x"])
    vy = b.quantity("v_y", cert.details["v_y"])
    target = b.quantity("v_x*v_y", vx * vy)
    b.quantity("theta0", theta0)
    tol = max(report_tol(vx, vy, target), 2.0 * cert.tol * max(1.0, vx + vy))

    for part in ("re", "im"):
        p, _ = product_sup(x, y, grid, part=part, theta0=theta0)
        b.quantity(f"product_sup_{part}", p)
        b.eq(f"product_sup_{part}=v_x*v_y", p, target)
        b.quantity(f"joint_sup_{part}", joint_sup(x, y, grid, part=part))

    witness = cert.witness
    b.require("witness", witness is not None)
    if witness is not None:
        a, c = state_eval(x, witness), state_eval(y, witness)
        shifted = b.quantity("witness_sup_product", scalar_sup_product(a, c, theta0))
        b.quantity("witness_sup_product_unshifted", scalar_sup_product(a, c))
        b.eq("witness_sup_product=v_x*v_y", shifted, target)
        b.detail("witness", witness.to_dict())
    return b.build(tol, marginal=cert.marginal)


def check_cor214(
    x: AlgebraElement, grid: int | None = None, *, lambda_grid: int | None = None
) -> CheckReport:
    """Every element is v-parallel to the identity; the radius witness of x certifies it."""
    e = AlgebraElement.identity(x.shape)
    cert = vradius_parallel(x, e, grid, lambda_grid=lambda_grid)
    sweep = numerical_radius(x, grid)

    b = ReportBuilder("cor214", x)
    v = b.quantity("v", sweep.value)
    b.quantity("gap", cert.gap)
    b.flag("parallel", cert.decision)
    b.require("parallel_to_identity", cert.decision)
    assert sweep.witness is not None
    product = b.quantity(
        "witness_product", abs(state_eval(x, sweep.witness) * state_eval(e, sweep.witness))
    )
    b.eq("witness_product=v", product, v)
    b.detail("certificate", cert.to_dict())
    return b.build(max(cert.tol, report_tol(v)), marginal=cert.marginal)


def ensure_central_unitary(c: AlgebraElement) -> None:
    """Raise NotUnitary / NotCentral unless c is a central unitary of its algebra."""
    e = AlgebraElement.identity(c.shape)
    defect = op_norm(c.adjoint() @ c - e)
    if defect > CENTRAL_TOL:
        raise NotUnitary(f"‖c*c − e‖ = {defect:.3e}")
    for unit in c.matrix_units():
        if not c.commutes_with(unit, CENTRAL_TOL):
            raise NotCentral("c does not commute with every matrix unit")


def check_central_invariance(
    x: AlgebraElement,
    y: AlgebraElement,
    c: AlgebraElement,
    grid: int | None = None,
    *,
    lambda_grid: int | None = None,
) -> CheckReport:
    """For a central unitary c: x ∥_v y ⇔ cx ∥_v cy ⇔ xc ∥_v yc, and v(cz) = v(z) = v(zc)."""
    ensure_central_unitary(c)
    certs = {
        "plain": vradius_parallel(x, y, grid, lambda_grid=lambda_grid),
        "left": vradius_parallel(c @ x, c @ y, grid, lambda_grid=lambda_grid),
        "right": vradius_parallel(x @ c, y @ c, grid, lambda_grid=lambda_grid),
    }

    b = ReportBuilder("central", x, y, c)
    for key, cert in certs.items():
        b.flag(f"parallel_{key}", cert.decision)
        b.quantity(f"gap_{key}", cert.gap)
    decisions = {cert.decision for cert in certs.values()}
    marginal = any(cert.marginal for cert in certs.values())
    b.require("equivalence", len(decisions) == 1 or marginal)

    for label, z in (("x", x), ("y", y), ("x+y", x + y)):
        vz = b.quantity(f"v_{label}", numerical_radius(z, grid).value)
        vcz = b.quantity(f"v_c{label}", numerical_radius(c @ z, grid).value)
        vzc = b.quantity(f"v_{label}c", numerical_radius(z @ c, grid).value)
        b.eq(f"v_c{label}=v_{label}", vcz, vz)
        b.eq(f"v_{label}c=v_{label}", vzc, vz)
    return b.build(marginal=marginal)


__all__ = [
    "check_central_invariance",
    "check_cor212",
    "check_cor214",
    "check_thm213_equivalence",
    "ensure_central_unitary",
]
