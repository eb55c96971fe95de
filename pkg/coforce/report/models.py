"""Per-line report schema shared by every batch command."""

from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import BaseModel, Field

from coforce.predict.rules import Prediction


class Command(str, Enum):
    EXACT = "exact"
    COMPLEMENT_EXACT = "complement-exact"
    PREDICT = "predict"
    BOUNDS = "bounds"
    VERIFY = "verify"


class Bounds(BaseModel):
    """Lower-bound ingredients for Z(complement)."""

    krs_bound: int = Field(..., description="n - r - s + 1 for the best missing K_{r,s}")
    r: int = Field(..., description="Smaller side of that K_{r,s}")
    s: int = Field(..., description="Larger side of that K_{r,s}")
    min_degree_bound: int = Field(..., description="Minimum degree of the complement")
    forbidden_test: bool | None = Field(
        None, description="Complement has no forbidden induced subgraph (None when n < 3)"
    )


CSV_COLUMNS = (
    "line",
    "graph6",
    "n",
    "z_exact",
    "z_complement_exact",
    "lo",
    "hi",
    "rule",
    "notes",
    "krs_bound",
    "r",
    "s",
    "min_degree_bound",
    "forbidden_test",
    "agree",
    "in_interval",
    "budget_exhausted",
    "elapsed_ms",
    "error",
)


class Report(BaseModel):
    """Outcome for one input line."""

    line: int = Field(..., ge=1, description="1-based input line number")
    graph6: str = Field(..., description="Input graph6 text")
    n: int | None = Field(None, description="Vertex count, if the line parsed")
    z_exact: int | None = Field(None, description="Exact Z(G)")
    z_complement_exact: int | None = Field(None, description="Exact Z(complement of G)")
    prediction: Prediction | None = Field(None, description="Predicted Z(complement of G)")
    bounds: Bounds | None = Field(None, description="Bound ingredients")
    agree: bool | None = Field(None, description="Exact value equals an exact prediction")
    in_interval: bool | None = Field(None, description="Exact value lies in the prediction")
    budget_exhausted: bool = Field(default=False, description="Solver stopped on its budget")
    interval: tuple[int, int] | None = Field(None, description="Proven bounds when exhausted")
    elapsed_ms: float | None = Field(None, description="Wall time, with --timings only")
    error: str | None = Field(None, description="Why this line produced no values")

    def settle(self) -> Report:
        """Fill agree and in_interval from the exact value and the prediction."""
        p, z = self.prediction, self.z_complement_exact
        if p is None or z is None:
            return self
        agree = (z == p.lo == p.hi) if p.is_exact else None
        return self.model_copy(update={"agree": agree, "in_interval": p.lo <= z <= p.hi})

    @property
    def failed_check(self) -> bool:
        return self.agree is False or self.in_interval is False

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON output, in schema order."""
        return {
            "line": self.line,
            "graph6": self.graph6,
            "n": self.n,
            "z_exact": self.z_exact,
            "z_complement_exact": self.z_complement_exact,
            "prediction": None
            if self.prediction is None
            else {
                "lo": self.prediction.lo,
                "hi": self.prediction.hi,
                "rule": self.prediction.rule.value,
                "notes": self.prediction.notes,
            },
            "bounds": None if self.bounds is None else self.bounds.model_dump(),
            "agree": self.agree,
            "in_interval": self.in_interval,
            "budget_exhausted": self.budget_exhausted,
            "interval": None if self.interval is None else list(self.interval),
            "elapsed_ms": self.elapsed_ms,
            "error": self.error,
        }

    def to_csv_row(self) -> list[str]:
        flat = self.to_dict()
        flat.update(flat.pop("prediction") or dict.fromkeys(("lo", "hi", "rule", "notes")))
        bounds = flat.pop("bounds") or dict.fromkeys(
            ("krs_bound", "r", "s", "min_degree_bound", "forbidden_test")
        )
        flat.update(bounds)
        return [_csv_cell(flat[c]) for c in CSV_COLUMNS]


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
