"""Declarative registry of suite checks, keyed by tag."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence

import numpy as np

from ..algebra.element import AlgebraElement
from ..common.errors import UnknownTag
from ..ensembles.generators import random_central_unitary
from ..inequalities import (
    CheckReport,
    check_basic_bounds,
    check_cor24,
    check_cor25,
    check_lemma210,
    check_thm22,
    check_thm23,
    check_thm26,
    check_thm28,
    check_thm29,
    check_thm211,
)
from ..parallelism import (
    check_central_invariance,
    check_cor212,
    check_cor214,
    check_thm213_equivalence,
)


@dataclass(frozen=True)
class RunContext:
    """Per-entry parameters handed to a check."""

    grid: int | None = None
    lambda_grid: int | None = None
    seed: int = 0
    index: int = 0

    def rng(self) -> np.random.Generator:
        """Generator keyed by (seed, entry index); independent of scheduling order."""
        return np.random.Generator(np.random.Philox(np.random.SeedSequence([self.seed, self.index])))


Runner = Callable[[Sequence[AlgebraElement], RunContext], CheckReport]


class CheckSpec(ABC):
    """Declarative description of one suite check."""

    arity: int = 1

    def __init__(self, tag: str, *, description: str = "", tags: Sequence[str] | None = None) -> None:
        self.tag = tag
        self.description = description
        self.tags = tuple(tags or ())

    @abstractmethod
    def run(self, elements: Sequence[AlgebraElement], ctx: RunContext) -> CheckReport:
        ...

    @property
    def is_pair(self) -> bool:
        return self.arity == 2

    def metadata(self) -> Dict[str, object]:
        return {
            "tag": self.tag,
            "arity": self.arity,
            "description": self.description,
            "tags": list(self.tags),
        }


class CallableCheckSpec(CheckSpec):
    """Wraps a plain function of (elements, ctx)."""

    def __init__(
        self,
        tag: str,
        runner: Runner,
        *,
        arity: int = 1,
        description: str = "",
        tags: Sequence[str] | None = None,
    ) -> None:
        if arity not in (1, 2):
            raise ValueError(f"arity must be 1 or 2, got {arity}")
        super().__init__(tag, description=description, tags=tags)
        self.arity = arity
        self.runner = runner

    def run(self, elements: Sequence[AlgebraElement], ctx: RunContext) -> CheckReport:
        if len(elements) != self.arity:
            raise ValueError(f"check '{self.tag}' takes {self.arity} element(s), got {len(elements)}")
        return self.runner(elements, ctx)


class CentralCheckSpec(CheckSpec):
    """Central-unitary invariance on a pair; c is drawn from the entry's generator."""

    arity = 2

    def run(self, elements: Sequence[AlgebraElement], ctx: RunContext) -> CheckReport:
        x, y = elements
        c = random_central_unitary(x.shape, ctx.rng())
        return check_central_invariance(x, y, c, ctx.grid, lambda_grid=ctx.lambda_grid)


_CHECK_SPECS: Dict[str, CheckSpec] = {}


def register_spec(spec: CheckSpec, *, override: bool = False) -> None:
    if spec.tag in _CHECK_SPECS and not override:
        raise ValueError(f"Check spec '{spec.tag}' already registered")
    _CHECK_SPECS[spec.tag] = spec


def register_callable_check(
    tag: str,
    runner: Runner,
    *,
    arity: int = 1,
    description: str = "",
    tags: Sequence[str] | None = None,
    override: bool = False,
) -> None:
    register_spec(
        CallableCheckSpec(tag, runner, arity=arity, description=description, tags=tags),
        override=override,
    )


def get_spec(tag: str) -> CheckSpec:
    spec = _CHECK_SPECS.get(tag)
    if spec is None:
        raise UnknownTag(f"unknown check tag '{tag}' (known: {', '.join(list_specs())})")
    return spec


def list_specs() -> List[str]:
    return sorted(_CHECK_SPECS.keys())


def describe_specs() -> List[Dict[str, object]]:
    return [_CHECK_SPECS[tag].metadata() for tag in list_specs()]


# Register built-in checks -----------------------------------------------------

register_callable_check(
    "eq11",
    lambda xs, ctx: check_basic_bounds(xs[0], ctx.grid),
    description="½‖x‖ ≤ v(x) ≤ ‖x‖",
    tags=("radius",),
)

register_callable_check(
    "thm22",
    lambda xs, ctx: check_thm22(xs[0], ctx.grid),
    description="Re-sweep, Im-sweep and (α,β)-sweep agree; v(x*) = v(x)",
    tags=("radius",),
)

register_callable_check(
    "thm23",
    lambda xs, ctx: check_thm23(xs[0], ctx.grid),
    description="Crawford-refined lower and upper bounds on v(x)",
    tags=("radius", "crawford"),
)

register_callable_check(
    "thm26",
    lambda xs, ctx: check_thm26(xs[0], ctx.grid),
    description="max{‖Re x‖, ‖Im x‖} ≤ v(x)",
    tags=("radius",),
)

register_callable_check(
    "thm28",
    lambda xs, ctx: check_thm28(xs[0], ctx.grid),
    description="v(x) = ½‖x‖ ⇔ ‖Re(e^{iθ}x)‖ + ‖Im(e^{iθ}x)‖ = ‖x‖",
    tags=("radius", "equivalence"),
)

register_callable_check(
    "thm29",
    lambda xs, ctx: check_thm29(xs[0], ctx.grid),
    description="bounds through ‖x*x + xx*‖",
    tags=("radius",),
)

register_callable_check(
    "cor24",
    lambda xs, ctx: check_cor24(xs[0], ctx.grid),
    description="x² = 0 ⇒ v(x) = ½‖x‖",
    tags=("radius", "corollary"),
)

register_callable_check(
    "cor25",
    lambda xs, ctx: check_cor25(xs[0], ctx.grid),
    description="v(x) = ‖x‖ ⇒ ‖x²‖ = ‖x‖²",
    tags=("radius", "corollary"),
)

register_callable_check(
    "lem210",
    lambda xs, ctx: check_lemma210(xs[0], xs[1]),
    arity=2,
    description="spectral radius bound for sums",
    tags=("spectral",),
)

register_callable_check(
    "thm211",
    lambda xs, ctx: check_thm211(xs[0], xs[1], ctx.grid),
    arity=2,
    description="refined triangle inequality for v",
    tags=("radius", "triangle"),
)

register_callable_check(
    "thm213",
    lambda xs, ctx: check_thm213_equivalence(xs[0], xs[1], ctx.grid, lambda_grid=ctx.lambda_grid),
    arity=2,
    description="x ∥_v y ⇔ a pure state has |φ(x)φ(y)| = v(x)v(y)",
    tags=("parallelism", "equivalence"),
)

register_callable_check(
    "cor212",
    lambda xs, ctx: check_cor212(xs[0], xs[1], ctx.grid, lambda_grid=ctx.lambda_grid),
    arity=2,
    description="product sups of Cartesian parts for v-parallel pairs",
    tags=("parallelism", "corollary"),
)

register_callable_check(
    "cor214",
    lambda xs, ctx: check_cor214(xs[0], ctx.grid, lambda_grid=ctx.lambda_grid),
    description="x ∥_v e",
    tags=("parallelism", "corollary"),
)

register_spec(
    CentralCheckSpec(
        "central",
        description="v-parallelism and v are invariant under central unitaries",
        tags=("parallelism", "central"),
    )
)


__all__ = [
    "CallableCheckSpec",
    "CentralCheckSpec",
    "CheckSpec",
    "RunContext",
    "describe_specs",
    "get_spec",
    "list_specs",
    "register_callable_check",
    "register_spec",
]
