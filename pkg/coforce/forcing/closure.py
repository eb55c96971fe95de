"""Closure under the color change rule, forcing chains and reversals."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field

from coforce.errors import ArgumentError
from coforce.graph.core import Graph, mask_of, vertices_of


class Force(BaseModel):
    """One application of the color change rule."""

    model_config = ConfigDict(frozen=True)

    forcer: int = Field(..., description="Blue vertex performing the force")
    forced: int = Field(..., description="Its only white neighbour, turned blue")
    round: int = Field(..., ge=1, description="Simultaneous round in which it happened")


class ColorState(BaseModel):
    """Blue set and chronological force log of a closure run."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="Vertex count of the graph")
    blue: frozenset[int] = Field(..., description="Final blue vertices")
    round: int = Field(default=0, description="Number of rounds that forced something")
    log: tuple[Force, ...] = Field(default=(), description="Forces in round, then vertex order")

    @property
    def is_complete(self) -> bool:
        return len(self.blue) == self.n


class ForcingChains(BaseModel):
    """Vertex-disjoint chains, one per initially blue vertex."""

    model_config = ConfigDict(frozen=True)

    chains: tuple[tuple[int, ...], ...] = Field(..., description="Chains ordered by start vertex")


def _start_mask(g: Graph, start: Iterable[int]) -> int:
    mask = mask_of(start)
    if mask & ~g.full_mask:
        raise ArgumentError(f"start set has vertices outside 0..{g.n - 1}")
    return mask


def close_mask(adj: Sequence[int], blue: int) -> int:
    """Final blue mask reached from ``blue``.

    Sequential sweeps; the fixed point is the same as with simultaneous rounds.
    """
    live = blue
    progress = True
    while progress:
        progress = False
        pending = live
        while pending:
            low = pending & -pending
            pending ^= low
            white = adj[low.bit_length() - 1] & ~blue
            if not white:
                live ^= low
            elif not white & (white - 1):
                blue |= white
                live = (live ^ low) | white
                progress = True
    return blue


def closure(g: Graph, start: Iterable[int]) -> ColorState:
    """Apply the color change rule in simultaneous rounds until nothing changes.

    Within a round white vertices are claimed in ascending order, each by the
    least-index blue vertex that could force it.
    """
    blue = _start_mask(g, start)
    log: list[Force] = []
    rounds = 0
    while True:
        claimed: dict[int, int] = {}
        for b in vertices_of(blue):
            white = g.adj[b] & ~blue
            if white and not white & (white - 1):
                claimed.setdefault(white.bit_length() - 1, b)
        if not claimed:
            break
        rounds += 1
        for w in sorted(claimed):
            log.append(Force(forcer=claimed[w], forced=w, round=rounds))
            blue |= 1 << w
    return ColorState(n=g.n, blue=frozenset(vertices_of(blue)), round=rounds, log=tuple(log))


def is_zfs(g: Graph, start: Iterable[int]) -> bool:
    return close_mask(g.adj, _start_mask(g, start)) == g.full_mask


def chains(state: ColorState, start: Iterable[int]) -> ForcingChains:
    """Forcing chains recorded in a complete closure run from ``start``."""
    if not state.is_complete:
        raise ArgumentError("closure did not color every vertex; no chain cover exists")
    initial = sorted(set(start))
    forced = {f.forced for f in state.log}
    if set(initial) != state.blue - forced:
        raise ArgumentError("start set does not match the closure log")
    successor = {f.forcer: f.forced for f in state.log}
    out = []
    for v in initial:
        chain = [v]
        while chain[-1] in successor:
            chain.append(successor[chain[-1]])
        out.append(tuple(chain))
    return ForcingChains(chains=tuple(out))


def reverse_chains(c: ForcingChains) -> frozenset[int]:
    """Terminal vertices of each chain; again a zero forcing set."""
    return frozenset(chain[-1] for chain in c.chains)


def greedy_zero_forcing_set(g: Graph) -> frozenset[int]:
    """A minimal zero forcing set: drop vertices from the top while still forcing."""
    full = g.full_mask
    keep = full
    for v in reversed(range(g.n)):
        trial = keep & ~(1 << v)
        if close_mask(g.adj, trial) == full:
            keep = trial
    return frozenset(vertices_of(keep))
