"""Named and seeded random graph families.

Random families draw from ``numpy.random.Generator(PCG64(seed))``, so a spec
yields the same graph on every platform.
"""

from __future__ import annotations

import heapq
import logging
from collections.abc import Sequence
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from coforce.errors import ArgumentError, ResourceLimitError
from coforce.graph.core import Graph, reach, vertices_of
from coforce.structure.families import Family

logger = logging.getLogger(__name__)

MAX_SEED = 2**64 - 1


class GenFamily(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    STAR_PLUS_EDGE = "star_plus_edge"
    SUNLET = "sunlet"
    PARTIAL_SUNLET = "partial_sunlet"
    BOOK = "book"
    WHEEL = "wheel"
    SEASHELL = "seashell"
    WINDMILL = "windmill"
    RANDOM_TREE = "random_tree"
    RANDOM_UNICYCLIC = "random_unicyclic"
    RANDOM_CACTUS = "random_cactus"
    RANDOM_GRAPH = "random_graph"


class GenSpec(BaseModel):
    """A generator request.

    ``n`` is the family's size parameter: the vertex count for most
    families, the cycle length for sunlet, partial_sunlet and windmill.
    """

    model_config = ConfigDict(frozen=True)

    family: GenFamily = Field(..., description="Generator family")
    n: int = Field(..., ge=1, description="Size parameter")
    params: dict[str, float | int | bool] = Field(
        default_factory=dict,
        description="Family options: pages, pendants, copies, girth, cycle_bias, min_cycles, "
        "p, connected, max_attempts",
    )
    seed: int = Field(default=0, ge=0, le=MAX_SEED, description="PCG64 seed")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ArgumentError(message)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    _need(n >= 2, "star needs n >= 2")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def star_plus_edge(n: int) -> Graph:
    """K_{1,n-1} plus the leaf edge 1-2."""
    _need(n >= 3, "star_plus_edge needs n >= 3")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)] + [(1, 2)])


def partial_sunlet(k: int, pendants: int) -> Graph:
    """C_k on 0..k-1 with pendant k+i on cycle vertex i for i < pendants."""
    _need(k >= 3, "base cycle needs length >= 3")
    _need(0 <= pendants <= k, f"pendants must lie in 0..{k}")
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k + i) for i in range(pendants)]
    return Graph.from_edges(k + pendants, edges)


def sunlet(k: int) -> Graph:
    return partial_sunlet(k, k)


def book(n: int, pages: int) -> Graph:
    """Hub 0 joined to all; leaves 2i+1, 2i+2 matched for each page i."""
    _need(pages >= 2, "book needs at least 2 pages")
    _need(n >= 1 + 2 * pages, f"book with {pages} pages needs n >= {1 + 2 * pages}")
    edges = [(0, i) for i in range(1, n)] + [(2 * i + 1, 2 * i + 2) for i in range(pages)]
    return Graph.from_edges(n, edges)


def wheel(n: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..n-1."""
    _need(n >= 4, "wheel needs n >= 4")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)] + [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph.from_edges(n, edges)


def seashell(n: int) -> Graph:
    """Hub 0 joined to the path 1..n-1."""
    _need(n >= 4, "seashell needs n >= 4")
    edges = [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)]
    return Graph.from_edges(n, edges)


def windmill(k: int, copies: int) -> Graph:
    """``copies`` cycles C_k sharing vertex 0; k = 3 gives the friendship graph."""
    _need(k >= 3, "windmill blades need cycle length >= 3")
    _need(copies >= 2, "windmill needs at least 2 copies")
    n = 1 + copies * (k - 1)
    edges: list[tuple[int, int]] = []
    for c in range(copies):
        ring = [0, *range(1 + c * (k - 1), 1 + (c + 1) * (k - 1))]
        edges.extend((ring[i], ring[(i + 1) % k]) for i in range(k))
    return Graph.from_edges(n, edges)


def prufer_decode(sequence: Sequence[int], n: int) -> Graph:
    """Labelled tree on n vertices encoded by a Prüfer sequence of length n - 2."""
    _need(n >= 2, "Prüfer decoding needs n >= 2")
    _need(len(sequence) == n - 2, f"sequence must have length {n - 2}")
    degree = [1] * n
    for x in sequence:
        _need(0 <= x < n, f"sequence entry {x} outside 0..{n - 1}")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges: list[tuple[int, int]] = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def _tree_from(rng: np.random.Generator, n: int) -> Graph:
    if n == 1:
        return Graph.empty(1)
    return prufer_decode([int(x) for x in rng.integers(0, n, size=n - 2)], n)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree via a random Prüfer sequence."""
    _need(n >= 1, "tree needs n >= 1")
    return _tree_from(_rng(seed), n)


def _tree_distance(t: Graph, u: int, v: int) -> int:
    dist, frontier, seen = 0, 1 << u, 1 << u
    while not frontier >> v & 1:
        nxt = 0
        for w in vertices_of(frontier):
            nxt |= t.adj[w]
        frontier = nxt & ~seen
        seen |= frontier
        dist += 1
    return dist


def random_unicyclic(
    n: int, seed: int, girth: int | None = None, max_attempts: int = 1000
) -> Graph:
    """Random labelled tree plus one random non-edge.

    With ``girth`` set, draws are rejected until the cycle has that length.
    """
    _need(n >= 3, "unicyclic graph needs n >= 3")
    if girth is not None:
        _need(3 <= girth <= n, f"girth must lie in 3..{n}")
    rng = _rng(seed)
    for _ in range(max_attempts):
        tree = _tree_from(rng, n)
        missing = [(u, v) for v in range(n) for u in range(v) if not tree.has_edge(u, v)]
        u, v = missing[int(rng.integers(len(missing)))]
        if girth is None or _tree_distance(tree, u, v) + 1 == girth:
            return Graph.from_edges(n, [*tree.edges(), (u, v)])
    raise ResourceLimitError(f"no unicyclic graph of girth {girth} in {max_attempts} attempts")


def random_cactus(
    n: int, seed: int, cycle_bias: float = 0.5, min_cycles: int = 1
) -> Graph:
    """Grow a cactus by hanging bridges or cycles of length 3 to 6 on random vertices.

    The first ``min_cycles`` attachments are cycles; afterwards each step picks
    a cycle with probability ``cycle_bias``. Labels are shuffled at the end.
    """
    _need(n >= 3, "cactus needs n >= 3")
    _need(0.0 <= cycle_bias <= 1.0, "cycle_bias must lie in [0, 1]")
    _need(min_cycles >= 0, "min_cycles must be non-negative")
    _need(n >= 1 + 2 * min_cycles, f"{min_cycles} cycles need n >= {1 + 2 * min_cycles}")
    rng = _rng(seed)
    edges: list[tuple[int, int]] = []
    count = 1
    cycles = 0
    while count < n:
        remaining = n - count
        anchor = int(rng.integers(count))
        forced = cycles < min_cycles
        if remaining >= 2 and (forced or rng.random() < cycle_bias):
            reserve = 2 * max(0, min_cycles - cycles - 1)
            longest = min(6, remaining + 1 - reserve)
            length = int(rng.integers(3, longest + 1))
            ring = [anchor, *range(count, count + length - 1)]
            edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
            count += length - 1
            cycles += 1
        else:
            edges.append((anchor, count))
            count += 1
    perm = [int(x) for x in rng.permutation(n)]
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_graph(
    n: int, seed: int, p: float = 0.5, connected: bool = False, max_attempts: int = 1000
) -> Graph:
    """G(n, p); with ``connected`` set, resampled until connected."""
    _need(n >= 1, "graph needs n >= 1")
    _need(0.0 <= p <= 1.0, "edge probability must lie in [0, 1]")
    rng = _rng(seed)
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for attempt in range(max_attempts):
        draws = rng.random(len(pairs))
        g = Graph.from_edges(n, [e for e, x in zip(pairs, draws, strict=True) if x < p])
        if not connected or reach(g, 0) == g.full_mask:
            if attempt:
                logger.debug("connected G(%d, %.2f) after %d resamples", n, p, attempt)
            return g
    raise ResourceLimitError(f"no connected G({n}, {p}) in {max_attempts} attempts")


def generate(spec: GenSpec) -> Graph:
    """Build the graph described by ``spec``."""
    n, params = spec.n, spec.params
    attempts = int(params.get("max_attempts", 1000))
    match spec.family:
        case GenFamily.PATH:
            return path(n)
        case GenFamily.CYCLE:
            return cycle(n)
        case GenFamily.STAR:
            return star(n)
        case GenFamily.COMPLETE:
            return complete(n)
        case GenFamily.STAR_PLUS_EDGE:
            return star_plus_edge(n)
        case GenFamily.SUNLET:
            return sunlet(n)
        case GenFamily.PARTIAL_SUNLET:
            return partial_sunlet(n, int(params.get("pendants", 0)))
        case GenFamily.BOOK:
            return book(n, int(params.get("pages", 2)))
        case GenFamily.WHEEL:
            return wheel(n)
        case GenFamily.SEASHELL:
            return seashell(n)
        case GenFamily.WINDMILL:
            return windmill(n, int(params.get("copies", 2)))
        case GenFamily.RANDOM_TREE:
            return random_tree(n, spec.seed)
        case GenFamily.RANDOM_UNICYCLIC:
            target = params.get("girth")
            return random_unicyclic(
                n, spec.seed, None if target is None else int(target), attempts
            )
        case GenFamily.RANDOM_CACTUS:
            return random_cactus(
                n,
                spec.seed,
                float(params.get("cycle_bias", 0.5)),
                int(params.get("min_cycles", 1)),
            )
        case GenFamily.RANDOM_GRAPH:
            return random_graph(
                n,
                spec.seed,
                float(params.get("p", 0.5)),
                bool(params.get("connected", False)),
                attempts,
            )
    raise ArgumentError(f"unknown family {spec.family}")


def expected_family(spec: GenSpec) -> Family | None:
    """Family ``classify`` reports for ``generate(spec)``; None when it varies."""
    match spec.family:
        case GenFamily.PATH | GenFamily.STAR | GenFamily.RANDOM_TREE:
            return Family.TREE
        case (
            GenFamily.CYCLE
            | GenFamily.STAR_PLUS_EDGE
            | GenFamily.SUNLET
            | GenFamily.PARTIAL_SUNLET
            | GenFamily.RANDOM_UNICYCLIC
        ):
            return Family.UNICYCLIC
        case GenFamily.BOOK | GenFamily.WINDMILL:
            return Family.CACTUS
        case GenFamily.WHEEL | GenFamily.SEASHELL:
            return Family.OTHER
        case GenFamily.COMPLETE:
            if spec.n <= 2:
                return Family.TREE
            return Family.UNICYCLIC if spec.n == 3 else Family.OTHER
        case GenFamily.RANDOM_CACTUS:
            return Family.CACTUS if int(spec.params.get("min_cycles", 1)) >= 2 else None
    return None
