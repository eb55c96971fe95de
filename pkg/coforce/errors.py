"""Exception types raised across coforce."""

from __future__ import annotations


class CoforceError(Exception):
    """Base class for coforce errors."""


class GraphFormatError(CoforceError, ValueError):
    """A graph6 line could not be decoded."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ArgumentError(CoforceError, ValueError):
    """An operation was called outside its precondition."""


class DisconnectedGraphError(ArgumentError):
    """The operation needs a connected graph."""


class ResourceLimitError(CoforceError):
    """A request is larger than the stated budget."""


class SolverBudgetExceeded(ResourceLimitError):
    """The exact solver ran out of budget before proving the minimum.

    Carries the interval proven so far; ``lower <= Z(G) <= upper``.
    """

    def __init__(self, lower: int, upper: int, sets_examined: int) -> None:
        super().__init__(
            f"solver budget exhausted after {sets_examined} sets: "
            f"{lower} <= Z <= {upper}"
        )
        self.lower = lower
        self.upper = upper
        self.sets_examined = sets_examined
