"""CheckReport: the structured outcome of verifying one inequality instance."""

from __future__ import annotations

import math
from typing import Any, Dict, List, Literal, Sequence

from pydantic import BaseModel, Field, field_validator, model_validator

from ..algebra.element import AlgebraElement
from ..common.config import settings

Status = Literal["pass", "fail", "inapplicable"]


def report_tol(*values: float, rel: float | None = None, abs_: float | None = None) -> float:
    """tol = max(abs, rel·scale) with scale the largest magnitude among ``values``."""
    rel = settings.rel_tol if rel is None else rel
    abs_ = settings.abs_tol if abs_ is None else abs_
    scale = max((abs(v) for v in values if math.isfinite(v)), default=0.0)
    return max(abs_, rel * scale)


class CheckReport(BaseModel):
    """One verified theorem instance.

    ``slacks`` follow the convention "≥ -tol means pass": an inequality
    ``lhs ≤ rhs`` stores ``rhs - lhs`` and an equality stores ``-|lhs - rhs|``.
    ``requirements`` are boolean assertions with their own, separately
    documented tolerances (identities, equivalences); ``flags`` are reported
    without being asserted.
    """

    name: str
    inputs: List[str] = Field(default_factory=list)
    quantities: Dict[str, float] = Field(default_factory=dict)
    slacks: Dict[str, float] = Field(default_factory=dict)
    requirements: Dict[str, bool] = Field(default_factory=dict)
    flags: Dict[str, bool] = Field(default_factory=dict)
    tol: float = 0.0
    passed: bool = False
    status: Status = "fail"
    marginal: bool = False
    details: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("quantities", "slacks")
    @classmethod
    def _finite(cls, values: Dict[str, float]) -> Dict[str, float]:
        for key, value in values.items():
            if not math.isfinite(value):
                raise ValueError(f"quantity '{key}' is not finite ({value})")
        return values

    @model_validator(mode="after")
    def _consistent(self) -> "CheckReport":
        if self.status == "inapplicable":
            if self.passed:
                raise ValueError("an inapplicable report cannot be marked passed")
            return self
        expected = all(s >= -self.tol for s in self.slacks.values()) and all(
            self.requirements.values()
        )
        if self.passed != expected:
            raise ValueError("passed must equal 'every slack ≥ -tol and every requirement holds'")
        if self.status != ("pass" if self.passed else "fail"):
            raise ValueError("status does not match passed")
        return self

    @property
    def worst_slack(self) -> float:
        return min(self.slacks.values(), default=0.0)

    def retolerate(self, rel: float) -> "CheckReport":
        """Re-judge the slacks at relative tolerance ``rel``; requirements are kept as computed."""
        if self.status == "inapplicable":
            return self
        tol = report_tol(*self.quantities.values(), rel=rel)
        passed = all(s >= -tol for s in self.slacks.values()) and all(self.requirements.values())
        return self.model_copy(
            update={"tol": tol, "passed": passed, "status": "pass" if passed else "fail"}
        )

    @classmethod
    def inapplicable(cls, name: str, inputs: Sequence[str], reason: str) -> "CheckReport":
        return cls(
            name=name,
            inputs=list(inputs),
            status="inapplicable",
            passed=False,
            details={"reason": reason},
        )

    @classmethod
    def errored(cls, name: str, inputs: Sequence[str], error: Exception) -> "CheckReport":
        """A failed entry for a check that raised before producing its chain."""
        return cls(
            name=name,
            inputs=list(inputs),
            requirements={"completed": False},
            status="fail",
            passed=False,
            details={"error": type(error).__name__, "reason": str(error)},
        )


class ReportBuilder:
    """Collects the links of an inequality chain and seals them into a CheckReport.

    Usage::

        b = ReportBuilder("eq11", x)
        b.quantity("v", v)
        b.le("half_norm<=v", norm / 2, v)
        report = b.build()
    """

    def __init__(self, name: str, *elements: AlgebraElement) -> None:
        self.name = name
        self.inputs = [e.digest() for e in elements]
        self.quantities: Dict[str, float] = {}
        self.slacks: Dict[str, float] = {}
        self.requirements: Dict[str, bool] = {}
        self.flags: Dict[str, bool] = {}
        self.details: Dict[str, Any] = {}

    def quantity(self, key: str, value: float) -> float:
        self.quantities[key] = float(value)
        return float(value)

    def le(self, key: str, lhs: float, rhs: float) -> None:
        self.slacks[key] = float(rhs) - float(lhs)

    def eq(self, key: str, lhs: float, rhs: float) -> None:
        self.slacks[key] = -abs(float(lhs) - float(rhs))

    def require(self, key: str, ok: bool) -> None:
        self.requirements[key] = bool(ok)

    def flag(self, key: str, value: bool) -> None:
        self.flags[key] = bool(value)

    def detail(self, key: str, value: Any) -> None:
        self.details[key] = value

    def build(self, tol: float | None = None, *, marginal: bool = False) -> CheckReport:
        if tol is None:
            tol = report_tol(*self.quantities.values())
        passed = all(s >= -tol for s in self.slacks.values()) and all(self.requirements.values())
        return CheckReport(
            name=self.name,
            inputs=self.inputs,
            quantities=self.quantities,
            slacks=self.slacks,
            requirements=self.requirements,
            flags=self.flags,
            tol=tol,
            passed=passed,
            status="pass" if passed else "fail",
            marginal=marginal,
            details=self.details,
        )


__all__ = ["CheckReport", "ReportBuilder", "Status", "report_tol"]
