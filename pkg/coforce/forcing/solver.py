"""Exact zero forcing number by size-ordered subset search."""

from __future__ import annotations

import logging
import time
from itertools import combinations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from coforce.errors import SolverBudgetExceeded
from coforce.forcing.closure import close_mask, greedy_zero_forcing_set
from coforce.graph.core import Graph, component_masks, induced, vertices_of

logger = logging.getLogger(__name__)

_DEADLINE_STRIDE = 1024


class ZfResult(BaseModel):
    """Z(G) with the lexicographically least minimum zero forcing set."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=0, description="Zero forcing number")
    witness: tuple[int, ...] = Field(..., description="Least minimum zero forcing set, ascending")
    sets_examined: int = Field(default=0, description="Candidate sets tested by closure")

    @model_validator(mode="after")
    def _check_witness(self) -> ZfResult:
        if len(self.witness) != self.value:
            raise ValueError("witness size must equal value")
        return self


class _Exhausted(Exception):
    def __init__(self, lower: int, upper: int) -> None:
        self.lower = lower
        self.upper = upper


class _Budget:
    def __init__(self, max_subsets: int | None, deadline: float | None) -> None:
        self.max_subsets = max_subsets
        self.deadline = deadline
        self.examined = 0

    def tick(self) -> bool:
        """Count one candidate; False once the budget is spent."""
        self.examined += 1
        if self.max_subsets is not None and self.examined > self.max_subsets:
            return False
        if (
            self.deadline is not None
            and self.examined % _DEADLINE_STRIDE == 0
            and time.monotonic() > self.deadline
        ):
            return False
        return True


def _solve_connected(g: Graph, budget: _Budget) -> tuple[int, tuple[int, ...]]:
    if g.n == 1:
        budget.examined += 1
        return 1, (0,)
    full = g.full_mask
    adj = g.adj
    bits = [1 << v for v in range(g.n)]
    lower = max(g.min_degree, 1)
    upper = len(greedy_zero_forcing_set(g))
    for k in range(lower, upper + 1):
        for combo in combinations(range(g.n), k):
            if not budget.tick():
                raise _Exhausted(k, upper)
            start = 0
            for v in combo:
                start |= bits[v]
            if close_mask(adj, start) == full:
                return k, combo
        logger.debug("n=%d: no zero forcing set of size %d", g.n, k)
    # the greedy set has size `upper`, so the loop always returns
    raise AssertionError("unreachable: greedy set is a zero forcing set")


def zero_forcing_number(
    g: Graph,
    max_subsets: int | None = None,
    deadline: float | None = None,
) -> ZfResult:
    """Exact Z(g), solved per component and summed.

    Candidate sizes run upward from max(min degree, 1); k-subsets are tried
    in lexicographic order, so the first success is the least minimum set.
    ``max_subsets`` caps candidates tested and ``deadline`` is a
    ``time.monotonic()`` instant; on exhaustion SolverBudgetExceeded carries
    the proven interval.
    """
    budget = _Budget(max_subsets, deadline)
    parts = component_masks(g)
    value = 0
    witness: list[int] = []
    for i, part in enumerate(parts):
        labels = vertices_of(part)
        sub = induced(g, labels)
        try:
            k, local = _solve_connected(sub, budget)
        except _Exhausted as stop:
            rest = [induced(g, vertices_of(p)) for p in parts[i + 1 :]]
            lower = value + stop.lower + sum(max(h.min_degree, 1) for h in rest)
            upper = value + stop.upper + sum(len(greedy_zero_forcing_set(h)) for h in rest)
            logger.debug("budget exhausted after %d sets", budget.examined)
            raise SolverBudgetExceeded(lower, upper, budget.examined) from None
        value += k
        witness.extend(labels[v] for v in local)
    return ZfResult(value=value, witness=tuple(sorted(witness)), sets_examined=budget.examined)
