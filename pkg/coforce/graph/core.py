"""Immutable simple graphs stored as fixed-width bit rows."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from coforce.errors import ArgumentError, DisconnectedGraphError

MAX_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with one bit set per vertex."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> list[int]:
    """Vertices of a bitmask in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph(BaseModel):
    """A simple undirected graph on the vertices 0..n-1.

    Row ``adj[v]`` is the bitmask of N(v). Instances are immutable and
    hashable, so they can be shared across threads and used as dict keys.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, le=MAX_VERTICES, description="Vertex count")
    adj: tuple[int, ...] = Field(..., description="Neighbourhood bit row per vertex")

    @model_validator(mode="after")
    def _check_rows(self) -> Graph:
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in vertices_of(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge list; duplicate edges are ignored."""
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ArgumentError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n=n, adj=tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n=n, adj=(0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in vertices_of(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.adj)

    @property
    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.adj)

    def is_connected(self) -> bool:
        return reach(self, 0) == self.full_mask

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges())
        return h


class BlockDecomposition(BaseModel):
    """Blocks (maximal 2-connected subgraphs or bridges) and cut vertices."""

    model_config = ConfigDict(frozen=True)

    blocks: tuple[frozenset[int], ...] = Field(..., description="Vertex set of each block")
    cut_vertices: frozenset[int] = Field(default_factory=frozenset)

    def cycle_blocks(self, g: Graph) -> list[frozenset[int]]:
        """Blocks that are cycles: at least 3 vertices and as many edges as vertices."""
        return [b for b in self.blocks if len(b) >= 3 and block_edge_count(g, b) == len(b)]

    def is_cactus_like(self, g: Graph) -> bool:
        """True when every block is a single edge or a cycle."""
        return all(len(b) == 2 or block_edge_count(g, b) == len(b) for b in self.blocks)


def reach(g: Graph, start: int, allowed: int | None = None) -> int:
    """Mask of vertices reachable from ``start`` inside ``allowed``."""
    allowed = g.full_mask if allowed is None else allowed
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in vertices_of(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def component_masks(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by least vertex."""
    remaining = g.full_mask
    parts = []
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        part = reach(g, v)
        parts.append(part)
        remaining &= ~part
    return parts


def components(g: Graph) -> list[frozenset[int]]:
    """Partition of V into maximal connected sets, ordered by least vertex."""
    return [frozenset(vertices_of(m)) for m in component_masks(g)]


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(n=g.n, adj=tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``; vertices relabelled 0.. in ascending order."""
    chosen = sorted(set(s))
    if not chosen:
        raise ArgumentError("induced subgraph needs a nonempty vertex set")
    if chosen[0] < 0 or chosen[-1] >= g.n:
        raise ArgumentError(f"vertex set {chosen} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(chosen)}
    rows = []
    for v in chosen:
        rows.append(mask_of(index[u] for u in vertices_of(g.adj[v]) if u in index))
    return Graph(n=len(chosen), adj=tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g followed by h, with h's vertices shifted by g.n."""
    if g.n + h.n > MAX_VERTICES:
        raise ArgumentError(f"union has {g.n + h.n} vertices, above {MAX_VERTICES}")
    return Graph(n=g.n + h.n, adj=g.adj + tuple(row << g.n for row in h.adj))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ArgumentError(f"{u}-{v} is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(n=g.n, adj=tuple(rows))


def is_bipartite(g: Graph) -> bool:
    return bool(nx.is_bipartite(g.to_networkx()))


def block_edge_count(g: Graph, block: frozenset[int]) -> int:
    inside = mask_of(block)
    return sum((g.adj[v] & inside).bit_count() for v in block) // 2


def blocks(g: Graph) -> BlockDecomposition:
    """Block decomposition of a connected graph.

    Raises DisconnectedGraphError for disconnected input; split with
    ``components`` first.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("blocks() needs a connected graph")
    h = g.to_networkx()
    found = sorted(
        (frozenset(b) for b in nx.biconnected_components(h)),
        key=lambda b: sorted(b),
    )
    return BlockDecomposition(
        blocks=tuple(found),
        cut_vertices=frozenset(nx.articulation_points(h)),
    )
