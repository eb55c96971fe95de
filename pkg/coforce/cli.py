from __future__ import annotations

import csv
import json
import logging
import sys
from collections.abc import Callable, Iterable, Iterator
from pathlib import Path
from typing import IO, Any, TypeVar

import click
from rich.console import Console
from rich.table import Table

from coforce import __version__
from coforce.config.models import Config, OutputFormat
from coforce.report.models import CSV_COLUMNS, Command, Report

logger = logging.getLogger(__name__)
console = Console()
err_console = Console(stderr=True)

EXIT_DISAGREE = 1
EXIT_NO_INPUT = 3

F = TypeVar("F", bound=Callable[..., Any])


def _config(ctx: click.Context) -> Config:
    cfg = ctx.find_object(Config)
    return cfg if cfg is not None else Config()


@click.group()
@click.version_option(version=__version__)
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="YAML configuration file",
)
@click.option("--log-level", help="Override the configured log level")
@click.pass_context
def main(ctx: click.Context, config_path: Path | None, log_level: str | None) -> None:
    """coforce - zero forcing numbers of graph complements."""
    from coforce.config.logs import setup_logging
    from coforce.config.models import load_config
    from coforce.errors import ArgumentError

    try:
        cfg = load_config(config_path)
    except (ArgumentError, ValueError) as e:
        raise click.UsageError(f"bad configuration: {e}") from e
    if log_level:
        cfg.logging.level = log_level
    try:
        setup_logging(cfg.logging)
    except ValueError as e:
        raise click.UsageError(str(e)) from e
    ctx.obj = cfg


def batch_options(func: F) -> F:
    """Options shared by every report-producing command."""
    options = [
        click.option(
            "--format",
            "fmt",
            type=click.Choice([f.value for f in OutputFormat]),
            help="Report format (default json lines)",
        ),
        click.option("--jobs", "-j", type=click.IntRange(min=1), help="Worker processes"),
        click.option("--budget", type=click.IntRange(min=1), help="Max candidate sets per graph"),
        click.option(
            "--timeout", type=click.FloatRange(min=0, min_open=True), help="Seconds per graph"
        ),
        click.option("--max-n", type=click.IntRange(1, 64), help="Largest n for exact solving"),
        click.option("--timings/--no-timings", default=None, help="Record elapsed_ms"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _apply_batch_flags(
    cfg: Config,
    fmt: str | None,
    jobs: int | None,
    budget: int | None,
    timeout: float | None,
    max_n: int | None,
    timings: bool | None,
) -> Config:
    cfg = cfg.model_copy(deep=True)
    if fmt:
        cfg.run.format = OutputFormat(fmt)
    if jobs:
        cfg.run.jobs = jobs
    if budget:
        cfg.solver.max_subsets = budget
    if timeout:
        cfg.solver.timeout = timeout
    if max_n:
        cfg.solver.max_n = max_n
    if timings is not None:
        cfg.run.timings = timings
    return cfg


def _read_lines(source: IO[str]) -> Iterator[tuple[int, str]]:
    for number, text in enumerate(source, start=1):
        if text.strip():
            yield number, text


def write_reports(reports: Iterable[Report], fmt: OutputFormat, out: IO[str]) -> list[Report]:
    """Stream reports to ``out`` as they arrive; returns them for exit-code checks."""
    seen: list[Report] = []
    writer = None
    if fmt is OutputFormat.CSV:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
    for report in reports:
        if writer is not None:
            writer.writerow(report.to_csv_row())
        else:
            out.write(json.dumps(report.to_dict()) + "\n")
        out.flush()
        seen.append(report)
    return seen


def _run(
    ctx: click.Context,
    command: Command,
    lines: Iterable[tuple[int, str]],
    cfg: Config,
) -> list[Report]:
    from coforce.report.pipeline import ReportTask, run_batch

    tasks = [
        ReportTask(
            line=number,
            text=text,
            command=command,
            max_subsets=cfg.solver.max_subsets,
            timeout=cfg.solver.timeout,
            max_n=cfg.solver.max_n,
            timings=cfg.run.timings,
        )
        for number, text in lines
    ]
    reports = write_reports(run_batch(tasks, cfg.run.jobs), cfg.run.format, sys.stdout)
    if not any(r.n is not None for r in reports):
        err_console.print("[red]No processable input lines.[/]")
        ctx.exit(EXIT_NO_INPUT)
    return reports


def _batch_command(command: Command, help_text: str) -> None:
    @main.command(name=command.value, help=help_text)
    @click.argument("source", type=click.File("r"), default="-")
    @batch_options
    @click.pass_context
    def run_command(
        ctx: click.Context,
        source: IO[str],
        fmt: str | None,
        jobs: int | None,
        budget: int | None,
        timeout: float | None,
        max_n: int | None,
        timings: bool | None,
    ) -> None:
        cfg = _apply_batch_flags(_config(ctx), fmt, jobs, budget, timeout, max_n, timings)
        _run(ctx, command, _read_lines(source), cfg)


_batch_command(Command.EXACT, "Exact zero forcing number of each graph6 line.")
_batch_command(Command.COMPLEMENT_EXACT, "Exact zero forcing number of each complement.")
_batch_command(Command.PREDICT, "Predicted Z(complement) from the graph's family.")
_batch_command(Command.BOUNDS, "K_{r,s}, min-degree and forbidden-subgraph bounds.")


def _parse_params(pairs: tuple[str, ...]) -> dict[str, float | int | bool]:
    params: dict[str, float | int | bool] = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise click.BadParameter(f"expected KEY=VALUE, got {pair!r}", param_hint="--param")
        if raw.lower() in ("true", "false"):
            params[key] = raw.lower() == "true"
            continue
        try:
            params[key] = int(raw)
        except ValueError:
            try:
                params[key] = float(raw)
            except ValueError as e:
                raise click.BadParameter(
                    f"{key} needs a number or boolean", param_hint="--param"
                ) from e
    return params


def _generated_lines(
    cfg: Config, family: str, n: int, count: int, seed: int, params: dict[str, float | int | bool]
) -> list[tuple[int, str]]:
    from coforce.errors import CoforceError
    from coforce.gen.enumerate import EnumFamily, enumerate_family
    from coforce.gen.generators import GenFamily, GenSpec, generate
    from coforce.graph.graph6 import to_graph6

    try:
        if family in {f.value for f in EnumFamily}:
            graphs = list(enumerate_family(EnumFamily(family), n))
        else:
            merged: dict[str, float | int | bool] = {
                "cycle_bias": cfg.gen.cycle_bias,
                "p": cfg.gen.edge_probability,
                "max_attempts": cfg.gen.max_attempts,
            }
            merged.update(params)
            graphs = [
                generate(GenSpec(family=GenFamily(family), n=n, params=merged, seed=seed + i))
                for i in range(count)
            ]
    except (CoforceError, ValueError) as e:
        raise click.UsageError(str(e)) from e
    return [(i + 1, to_graph6(g)) for i, g in enumerate(graphs)]


def _family_names() -> list[str]:
    from coforce.gen.enumerate import EnumFamily
    from coforce.gen.generators import GenFamily

    return [f.value for f in EnumFamily] + [f.value for f in GenFamily]


@main.command()
@click.argument("source", type=click.File("r"), required=False)
@click.option("--family", type=click.Choice(_family_names()), help="Check a generated family")
@click.option("--n", "n", type=click.IntRange(min=1), help="Size for --family")
@click.option("--count", default=1, type=click.IntRange(min=1), help="Samples of a random family")
@click.option("--seed", type=click.IntRange(min=0), help="Base seed; sample i uses seed + i")
@click.option("--param", "params", multiple=True, help="Generator option KEY=VALUE")
@batch_options
@click.pass_context
def verify(
    ctx: click.Context,
    source: IO[str] | None,
    family: str | None,
    n: int | None,
    count: int,
    seed: int | None,
    params: tuple[str, ...],
    fmt: str | None,
    jobs: int | None,
    budget: int | None,
    timeout: float | None,
    max_n: int | None,
    timings: bool | None,
) -> None:
    """Compare exact Z(complement) with the prediction; exit 1 on any mismatch."""
    cfg = _apply_batch_flags(_config(ctx), fmt, jobs, budget, timeout, max_n, timings)
    if family is not None:
        if source is not None:
            raise click.UsageError("give either SOURCE or --family, not both")
        if n is None:
            raise click.UsageError("--family needs --n")
        base = cfg.run.seed if seed is None else seed
        lines: Iterable[tuple[int, str]] = _generated_lines(
            cfg, family, n, count, base, _parse_params(params)
        )
    else:
        lines = _read_lines(source if source is not None else click.get_text_stream("stdin"))

    reports = _run(ctx, Command.VERIFY, lines, cfg)

    table = Table(title="Verification summary")
    table.add_column("Checked", justify="right")
    table.add_column("Agree", justify="right", style="green")
    table.add_column("Mismatch", justify="right", style="red")
    table.add_column("Budget", justify="right", style="yellow")
    table.add_column("Errors", justify="right")
    mismatches = [r for r in reports if r.failed_check]
    table.add_row(
        str(len(reports)),
        str(sum(1 for r in reports if r.agree or (r.agree is None and r.in_interval))),
        str(len(mismatches)),
        str(sum(1 for r in reports if r.budget_exhausted)),
        str(sum(1 for r in reports if r.error)),
    )
    err_console.print(table)
    for r in mismatches[:10]:
        err_console.print(f"[red]line {r.line}: {r.graph6}[/]")
    if mismatches:
        ctx.exit(EXIT_DISAGREE)


@main.command()
@click.argument("family", type=click.Choice(_family_names()))
@click.option("--n", "n", required=True, type=click.IntRange(min=1), help="Size parameter")
@click.option("--count", default=1, type=click.IntRange(min=1), help="Samples of a random family")
@click.option("--seed", type=click.IntRange(min=0), help="Base seed; sample i uses seed + i")
@click.option("--param", "params", multiple=True, help="Generator option KEY=VALUE")
@click.pass_context
def gen(
    ctx: click.Context,
    family: str,
    n: int,
    count: int,
    seed: int | None,
    params: tuple[str, ...],
) -> None:
    """Print graphs of a family as graph6 lines."""
    cfg = _config(ctx)
    base = cfg.run.seed if seed is None else seed
    for _, text in _generated_lines(cfg, family, n, count, base, _parse_params(params)):
        click.echo(text)


@main.group()
def config() -> None:
    """Inspect coforce configuration."""
    pass


@config.command(name="show")
@click.option(
    "--write",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also save the effective configuration as YAML",
)
@click.pass_context
def config_show(ctx: click.Context, write: Path | None) -> None:
    """Show the effective configuration."""
    cfg = _config(ctx)
    if write is not None:
        cfg.save(write)
        logger.info("wrote configuration to %s", write)
    console.print_json(json.dumps(cfg.model_dump(mode="json"), indent=2))


if __name__ == "__main__":
    main()
