"""Batch evaluation of graph6 lines, optionally across worker processes."""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor

from pydantic import BaseModel, ConfigDict, Field

from coforce.errors import CoforceError, GraphFormatError, SolverBudgetExceeded
from coforce.forcing.solver import zero_forcing_number
from coforce.graph.core import Graph, complement
from coforce.graph.graph6 import parse_graph6
from coforce.predict.rules import predict_complement_zf
from coforce.report.models import Bounds, Command, Report
from coforce.structure.subgraphs import forbidden_induced_test, krs_free_bound

logger = logging.getLogger(__name__)

_EXACT_COMMANDS = {Command.EXACT, Command.COMPLEMENT_EXACT, Command.VERIFY}


class ReportTask(BaseModel):
    """One input line plus the settings needed to evaluate it in a worker."""

    model_config = ConfigDict(frozen=True)

    line: int = Field(..., ge=1)
    text: str
    command: Command
    max_subsets: int | None = None
    timeout: float | None = None
    max_n: int = 16
    timings: bool = False


def compute_bounds(g: Graph) -> Bounds:
    comp = complement(g)
    krs = krs_free_bound(g)
    return Bounds(
        krs_bound=krs.bound,
        r=krs.r,
        s=krs.s,
        min_degree_bound=comp.min_degree,
        forbidden_test=forbidden_induced_test(comp) if g.n >= 3 else None,
    )


def _evaluate(task: ReportTask, g: Graph, report: Report) -> Report:
    deadline = None if task.timeout is None else time.monotonic() + task.timeout
    update: dict[str, object] = {}
    cmd = task.command
    if cmd in (Command.PREDICT, Command.VERIFY):
        try:
            update["prediction"] = predict_complement_zf(g)
        except CoforceError as exc:
            # verify still reports the exact value
            update["error"] = str(exc)
            if cmd is Command.PREDICT:
                return report.model_copy(update=update)
    try:
        if cmd in (Command.BOUNDS, Command.VERIFY):
            update["bounds"] = compute_bounds(g)
        if cmd is Command.EXACT:
            update["z_exact"] = zero_forcing_number(g, task.max_subsets, deadline).value
        elif cmd in (Command.COMPLEMENT_EXACT, Command.VERIFY):
            update["z_complement_exact"] = zero_forcing_number(
                complement(g), task.max_subsets, deadline
            ).value
    except SolverBudgetExceeded as exc:
        update["budget_exhausted"] = True
        update["interval"] = (exc.lower, exc.upper)
    except CoforceError as exc:
        update["error"] = str(exc)
    return report.model_copy(update=update)


def build_report(task: ReportTask) -> Report:
    """Evaluate one line; never raises for bad input or exhausted budgets."""
    start = time.perf_counter()
    text = task.text.strip()
    try:
        g = parse_graph6(text)
    except GraphFormatError as exc:
        logger.warning("line %d: %s", task.line, exc)
        return Report(line=task.line, graph6=text, error=f"parse error: {exc}")
    report = Report(line=task.line, graph6=text, n=g.n)
    if task.command in _EXACT_COMMANDS and g.n > task.max_n:
        report = report.model_copy(
            update={"error": f"n={g.n} exceeds the exact-solver guard max_n={task.max_n}"}
        )
    else:
        report = _evaluate(task, g, report)
    if task.timings:
        report = report.model_copy(
            update={"elapsed_ms": round((time.perf_counter() - start) * 1000, 3)}
        )
    return report.settle()


def run_batch(tasks: Iterable[ReportTask], jobs: int | None = None) -> Iterator[Report]:
    """Reports in input order; ``jobs == 1`` stays in this process."""
    pending = list(tasks)
    logger.info("evaluating %d lines with %s workers", len(pending), jobs or "all")
    if jobs == 1 or len(pending) <= 1:
        yield from map(build_report, pending)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(build_report, pending, chunksize=max(1, len(pending) // 64))
    logger.info("batch finished")
