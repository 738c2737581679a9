"""
numrad 命令行入口

命令：radius / range / crawford / check / parallel / gen / report / tags
退出码：0 全部通过，1 存在失败，2 用法或解析错误
"""

import csv
import io
import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional, Tuple

import typer

from ..common.config import settings
from ..common.errors import NumradError
from ..common.logging_config import setup_logging
from ..ensembles import EnsembleFamily, EnsembleSpec, generate
from ..numrange import crawford_bounds, numerical_radius, range_boundary
from ..parallelism import norm_parallel, vradius_parallel
from .documents import load_element, save_element
from .registry import describe_specs
from .runner import RunReport, report_rows, run_suite

logger = logging.getLogger(__name__)

app = typer.Typer(add_completion=False, help="Numerical radius and parallelism toolkit.")


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class ParallelKind(str, Enum):
    NORM = "norm"
    VRADIUS = "vradius"


GridOption = typer.Option(None, "--grid", min=64, help="θ grid size (default NUMRAD_GRID)")
LambdaGridOption = typer.Option(None, "--lambda-grid", min=64, help="ψ grid size for λ = e^{iψ}")
FormatOption = typer.Option(OutputFormat.JSON, "--format", help="json or csv")
OutOption = typer.Option(None, "--out", help="write to this file instead of stdout")


def _render_csv(records: List[Dict[str, Any]]) -> str:
    if not records:
        return ""
    fieldnames = list(records[0].keys())
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(
            {
                key: json.dumps(record.get(key), ensure_ascii=False)
                if isinstance(record.get(key), (dict, list, tuple))
                else ("" if record.get(key) is None else record.get(key))
                for key in fieldnames
            }
        )
    return buffer.getvalue()


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        typer.echo(text, nl=not text.endswith("\n"))
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info("wrote %s", out)


def _emit_json(payload: Any, out: Optional[Path]) -> None:
    _emit(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", out)


def _fail_usage(exc: Exception) -> NoReturn:
    typer.echo(f"error: {exc}", err=True)
    raise typer.Exit(code=2)


def _parse_pairs(text: Optional[str]) -> Optional[List[Tuple[int, int]]]:
    if not text:
        return None
    pairs = []
    for item in text.split(","):
        left, sep, right = item.strip().partition(":")
        if not sep:
            raise typer.BadParameter(f"pair '{item}' must look like i:j", param_hint="--pairs")
        pairs.append((int(left), int(right)))
    return pairs


def _emit_report(report: RunReport, fmt: OutputFormat, out: Optional[Path]) -> None:
    if fmt is OutputFormat.CSV:
        _emit(_render_csv(report_rows(report)), out)
    else:
        _emit(report.model_dump_json(indent=2) + "\n", out)


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="override NUMRAD_LOG_LEVEL"),
) -> None:
    """Configure logging before any command runs."""
    setup_logging(log_level)


@app.command()
def radius(
    file: Path = typer.Argument(..., exists=True, dir_okay=False),
    grid: Optional[int] = GridOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Numerical radius v(x) with its maximizing angle and pure state."""
    try:
        result = numerical_radius(load_element(file), grid)
    except (NumradError, ValueError) as exc:
        _fail_usage(exc)
    _emit_json(result.to_dict(), out)


@app.command("range")
def range_(
    file: Path = typer.Argument(..., exists=True, dir_okay=False),
    grid: Optional[int] = GridOption,
    fmt: OutputFormat = FormatOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Boundary points of the numerical range, one per angle."""
    try:
        sample = range_boundary(load_element(file), grid)
    except (NumradError, ValueError) as exc:
        _fail_usage(exc)
    if fmt is OutputFormat.CSV:
        rows = [
            {"theta": p["theta"], "re": p["point"][0], "im": p["point"][1], "block": p["block"]}
            for p in sample.to_dict()["points"]
        ]
        _emit(_render_csv(rows), out)
    else:
        _emit_json(sample.to_dict(), out)


@app.command()
def crawford(
    file: Path = typer.Argument(..., exists=True, dir_okay=False),
    grid: Optional[int] = GridOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Crawford number c(x), the distance from 0 to the numerical range."""
    try:
        lower, upper = crawford_bounds(load_element(file), grid)
    except (NumradError, ValueError) as exc:
        _fail_usage(exc)
    _emit_json({"crawford": upper, "lower": lower, "upper": upper}, out)


@app.command()
def check(
    files: List[Path] = typer.Argument(..., exists=True, dir_okay=False),
    which: Optional[str] = typer.Option(None, "--which", help="comma-separated tags (default: all)"),
    grid: Optional[int] = GridOption,
    lambda_grid: Optional[int] = LambdaGridOption,
    tol: Optional[float] = typer.Option(None, "--tol", min=0.0, help="relative slack tolerance override"),
    seed: Optional[int] = typer.Option(None, "--seed", min=0, help="seed for central unitaries"),
    pairs: Optional[str] = typer.Option(None, "--pairs", help="explicit pairs, e.g. 0:1,2:3"),
    fmt: OutputFormat = FormatOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Run theorem checks over the given elements; exit 1 if any check fails."""
    tags = [t.strip() for t in which.split(",") if t.strip()] if which else None
    pair_list = _parse_pairs(pairs)
    try:
        elements = [load_element(f) for f in files]
        result = run_suite(
            elements, tags, grid, tol, lambda_grid=lambda_grid, pairs=pair_list, seed=seed
        )
    except (NumradError, ValueError) as exc:
        _fail_usage(exc)
    _emit_report(result, fmt, out)
    if not result.ok:
        raise typer.Exit(code=1)


@app.command()
def parallel(
    file_x: Path = typer.Argument(..., exists=True, dir_okay=False),
    file_y: Path = typer.Argument(..., exists=True, dir_okay=False),
    kind: ParallelKind = typer.Option(ParallelKind.VRADIUS, "--kind", help="norm or vradius"),
    grid: Optional[int] = GridOption,
    lambda_grid: Optional[int] = LambdaGridOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Decide x ∥ y (norm) or x ∥_v y (vradius)."""
    decide = norm_parallel if kind is ParallelKind.NORM else vradius_parallel
    try:
        cert = decide(load_element(file_x), load_element(file_y), grid, lambda_grid=lambda_grid)
    except (NumradError, ValueError) as exc:
        _fail_usage(exc)
    _emit_json(cert.to_dict(), out)


@app.command()
def gen(
    family: EnsembleFamily = typer.Option(..., "--family"),
    dim: int = typer.Option(..., "--dim", min=1),
    count: int = typer.Option(1, "--count", min=1),
    seed: Optional[int] = typer.Option(None, "--seed", min=0),
    out: Path = typer.Option(..., "--out", file_okay=False, help="output directory"),
) -> None:
    """Generate a seeded random ensemble, one JSON document per element."""
    spec = EnsembleSpec(
        family=family, dim=dim, count=count, seed=settings.seed if seed is None else seed
    )
    try:
        elements = generate(spec)
    except NumradError as exc:
        _fail_usage(exc)
    width = max(4, len(str(count - 1)))
    paths = [
        save_element(x, out / f"{family.value}-{i:0{width}d}.json") for i, x in enumerate(elements)
    ]
    _emit_json({"spec": spec.model_dump(mode="json"), "files": [str(p) for p in paths]}, None)


@app.command()
def report(
    source: Path = typer.Argument(..., exists=True, dir_okay=False, help="saved JSON run report"),
    fmt: OutputFormat = FormatOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Re-render a saved run report; exit 1 if it records a failure."""
    try:
        loaded = RunReport.model_validate_json(source.read_bytes())
    except ValueError as exc:
        _fail_usage(exc)
    _emit_report(loaded, fmt, out)
    if not loaded.ok:
        raise typer.Exit(code=1)


@app.command()
def tags() -> None:
    """List the registered check tags."""
    _emit_json(describe_specs(), None)


if __name__ == "__main__":
    app()
