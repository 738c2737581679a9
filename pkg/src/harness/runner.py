"""Suite orchestration: fan (element-or-pair, tag) entries out to worker threads
and assemble an order-stable RunReport."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, model_validator

from ..algebra.element import AlgebraElement
from ..common import __version__
from ..common.config import settings
from ..common.errors import InapplicableInput, NumradError
from ..inequalities.report import CheckReport
from .registry import RunContext, get_spec, list_specs

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class SuiteRunnerError(NumradError):
    """Raised for malformed suite requests (bad pair indices, empty input)."""


class RunConfig(BaseModel):
    which: List[str]
    grid: int
    lambda_grid: int
    rel_tol: float
    abs_tol: float
    parallel_rel_tol: float
    parallel_abs_tol: float
    tol_override: Optional[float] = None
    seed: int


class SuiteEntry(BaseModel):
    index: int
    inputs: List[int]
    tag: str
    report: CheckReport


class SuiteSummary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    inapplicable: int = 0
    marginal: int = 0

    @classmethod
    def tally(cls, entries: Iterable[SuiteEntry]) -> "SuiteSummary":
        summary = cls()
        for entry in entries:
            summary.total += 1
            status = entry.report.status
            if status == "pass":
                summary.passed += 1
            elif status == "fail":
                summary.failed += 1
            else:
                summary.inapplicable += 1
            if entry.report.marginal:
                summary.marginal += 1
        return summary


class RunReport(BaseModel):
    version: str = __version__
    timestamp: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    config: RunConfig
    entries: List[SuiteEntry] = Field(default_factory=list)
    summary: SuiteSummary = Field(default_factory=SuiteSummary)

    @model_validator(mode="after")
    def _summary_matches(self) -> "RunReport":
        if self.summary != SuiteSummary.tally(self.entries):
            raise ValueError("summary counts do not match the entries")
        return self

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0


@dataclass(frozen=True)
class _Job:
    index: int
    inputs: Tuple[int, ...]
    tag: str


class SuiteRunner:
    """Runs registered checks over a list of elements."""

    def __init__(self, max_workers: int | None = None) -> None:
        cap = max_workers if max_workers is not None else settings.threads
        self.max_workers = max(1, cap if cap is not None else (os.cpu_count() or 1))

    def plan(
        self,
        n_elements: int,
        which: Sequence[str],
        pairs: Sequence[Pair] | None = None,
    ) -> List[_Job]:
        if pairs is None:
            pairs = [(i, i + 1) for i in range(0, n_elements - 1, 2)]
            if n_elements % 2 and any(get_spec(tag).is_pair for tag in which):
                logger.warning("odd element count: element %d has no pair partner", n_elements - 1)
        for i, j in pairs:
            if not (0 <= i < n_elements and 0 <= j < n_elements):
                raise SuiteRunnerError(f"pair ({i}, {j}) is out of range for {n_elements} elements")

        jobs: List[_Job] = []
        for tag in which:
            if get_spec(tag).is_pair:
                jobs.extend(_Job(i, (i, j), tag) for i, j in pairs)
            else:
                jobs.extend(_Job(i, (i,), tag) for i in range(n_elements))
        return jobs

    def _execute(
        self,
        job: _Job,
        elements: Sequence[AlgebraElement],
        grid: int | None,
        lambda_grid: int | None,
        seed: int,
        ordinal: int,
    ) -> SuiteEntry:
        spec = get_spec(job.tag)
        operands = [elements[i] for i in job.inputs]
        ctx = RunContext(grid=grid, lambda_grid=lambda_grid, seed=seed, index=ordinal)
        try:
            report = spec.run(operands, ctx)
        except InapplicableInput as exc:
            logger.info("%s on %s: inapplicable (%s)", job.tag, list(job.inputs), exc)
            report = CheckReport.inapplicable(job.tag, [e.digest() for e in operands], str(exc))
        except NumradError as exc:
            logger.warning("%s on %s raised %s: %s", job.tag, list(job.inputs), type(exc).__name__, exc)
            return SuiteEntry(
                index=job.index,
                inputs=list(job.inputs),
                tag=job.tag,
                report=CheckReport.errored(job.tag, [e.digest() for e in operands], exc),
            )
        if report.status == "fail":
            logger.warning("%s on %s failed (worst slack %.3e)", job.tag, list(job.inputs), report.worst_slack)
        return SuiteEntry(index=job.index, inputs=list(job.inputs), tag=job.tag, report=report)

    def run(
        self,
        elements: Sequence[AlgebraElement],
        which: Iterable[str] | None = None,
        *,
        grid: int | None = None,
        lambda_grid: int | None = None,
        tol: float | None = None,
        pairs: Sequence[Pair] | None = None,
        seed: int | None = None,
    ) -> RunReport:
        if not elements:
            raise SuiteRunnerError("no elements to check")
        tags = sorted(set(which)) if which is not None else list_specs()
        for tag in tags:
            get_spec(tag)
        seed = settings.seed if seed is None else seed
        grid = settings.grid if grid is None else grid
        lambda_grid = settings.lambda_grid if lambda_grid is None else lambda_grid

        jobs = self.plan(len(elements), tags, pairs)
        workers = min(self.max_workers, max(1, len(jobs)))
        logger.info("running %d suite entries on %d worker(s): tags=%s", len(jobs), workers, tags)

        # ordinal = position in the plan, which only depends on the inputs
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(self._execute, job, elements, grid, lambda_grid, seed, ordinal)
                for ordinal, job in enumerate(jobs)
            ]
            entries = [f.result() for f in futures]

        if tol is not None:
            entries = [e.model_copy(update={"report": e.report.retolerate(tol)}) for e in entries]
        entries.sort(key=lambda e: (e.index, e.tag, e.inputs))

        config = RunConfig(
            which=tags,
            grid=grid,
            lambda_grid=lambda_grid,
            rel_tol=settings.rel_tol,
            abs_tol=settings.abs_tol,
            parallel_rel_tol=settings.parallel_rel_tol,
            parallel_abs_tol=settings.parallel_abs_tol,
            tol_override=tol,
            seed=seed,
        )
        report = RunReport(config=config, entries=entries, summary=SuiteSummary.tally(entries))
        logger.info("suite summary: %s", report.summary.model_dump())
        return report


def run_suite(
    elements: Sequence[AlgebraElement],
    which: Iterable[str] | None = None,
    grid: int | None = None,
    tol: float | None = None,
    *,
    lambda_grid: int | None = None,
    pairs: Sequence[Pair] | None = None,
    seed: int | None = None,
    max_workers: int | None = None,
) -> RunReport:
    """Run the tagged checks; unary tags per element, pair tags per pair."""
    return SuiteRunner(max_workers).run(
        elements, which, grid=grid, lambda_grid=lambda_grid, tol=tol, pairs=pairs, seed=seed
    )


def report_rows(report: RunReport) -> List[Dict[str, object]]:
    """Flat per-entry rows for CSV rendering."""
    return [
        {
            "index": e.index,
            "inputs": " ".join(str(i) for i in e.inputs),
            "tag": e.tag,
            "status": e.report.status,
            "marginal": e.report.marginal,
            "tol": e.report.tol,
            "worst_slack": e.report.worst_slack,
        }
        for e in report.entries
    ]


__all__ = [
    "RunConfig",
    "RunReport",
    "SuiteEntry",
    "SuiteRunner",
    "SuiteRunnerError",
    "SuiteSummary",
    "report_rows",
    "run_suite",
]
