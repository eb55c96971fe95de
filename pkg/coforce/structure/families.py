"""Family recognition: trees, unicyclic graphs, cacti and K_{2,2}-free bipartite graphs."""

from __future__ import annotations

from collections import deque
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from coforce.errors import ArgumentError
from coforce.graph.core import (
    Graph,
    blocks,
    component_masks,
    induced,
    is_bipartite,
    mask_of,
    reach,
    vertices_of,
)
from coforce.structure.subgraphs import contains_krs


class Family(str, Enum):
    """Graph families, in classification precedence order."""

    TREE = "tree"
    UNICYCLIC = "unicyclic"
    CACTUS = "cactus"
    BIPARTITE_K22_FREE = "bipartite_k22_free"
    OTHER = "other"


class UnicyclicDecomposition(BaseModel):
    """The unique cycle and the forest hanging off each of its vertices."""

    model_config = ConfigDict(frozen=True)

    cycle: tuple[int, ...] = Field(..., description="Cycle vertices in cyclic order")
    forests: dict[int, frozenset[int]] = Field(
        ..., description="Off-cycle vertices reachable from each cycle vertex"
    )

    @model_validator(mode="after")
    def _check(self) -> UnicyclicDecomposition:
        if len(self.cycle) < 3:
            raise ValueError("cycle needs at least 3 vertices")
        if set(self.forests) != set(self.cycle):
            raise ValueError("one forest per cycle vertex")
        seen: set[int] = set(self.cycle)
        for forest in self.forests.values():
            if forest & seen:
                raise ValueError("forests must be disjoint from each other and the cycle")
            seen |= forest
        return self

    @property
    def girth(self) -> int:
        return len(self.cycle)

    @property
    def m(self) -> tuple[int, ...]:
        """Forest sizes in cycle order."""
        return tuple(len(self.forests[c]) for c in self.cycle)

    @property
    def m_max(self) -> int:
        return max(self.m)

    @property
    def order(self) -> int:
        return len(self.cycle) + sum(self.m)


class C4Context(BaseModel):
    """Attachment pattern around one 4-cycle."""

    model_config = ConfigDict(frozen=True)

    cycle: tuple[int, int, int, int] = Field(..., description="Cycle vertices in cyclic order")
    off_cycle_neighbors: dict[int, frozenset[int]] = Field(
        ..., description="Neighbours of each cycle vertex that are not on this cycle"
    )
    degree2_count: int = Field(..., ge=0, le=4, description="Cycle vertices of degree 2 in G")
    adjacent_attached_pair: bool = Field(
        ..., description="Two consecutive cycle vertices both have off-cycle neighbours"
    )


class FamilyClassification(BaseModel):
    """Result of ``classify``; payload fields are set only for their family."""

    model_config = ConfigDict(frozen=True)

    family: Family
    n: int
    connected: bool = True
    contains_c4_subgraph: bool = False
    girth: int | None = Field(default=None, description="Shortest cycle length; None if acyclic")
    is_star: bool | None = Field(default=None, description="Tree only")
    unicyclic: UnicyclicDecomposition | None = Field(default=None, description="Unicyclic only")
    cycle_blocks: tuple[frozenset[int], ...] = Field(default=(), description="Cactus only")
    is_book: bool = Field(default=False, description="Cactus only")


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, by BFS from every vertex."""
    best: int | None = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in vertices_of(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_star_plus_edge(g: Graph) -> bool:
    """K_{1,n-1} plus one edge between two leaves."""
    return g.n >= 3 and g.edge_count == g.n and g.max_degree == g.n - 1 and g.is_connected()


def is_book(g: Graph) -> bool:
    """A hub adjacent to all, and the remaining edges a matching of size >= 2."""
    if g.n < 5:
        return False
    for hub in range(g.n):
        if g.degree(hub) != g.n - 1:
            continue
        rest = g.full_mask & ~(1 << hub)
        degrees = [(g.adj[v] & rest).bit_count() for v in vertices_of(rest)]
        if max(degrees) <= 1 and sum(degrees) // 2 >= 2:
            return True
    return False


def is_seashell(g: Graph) -> bool:
    """A hub adjacent to all, and the rest a spanning path (the fan K_1 join P_{n-1})."""
    if g.n < 4 or g.edge_count != 2 * g.n - 3:
        return False
    for hub in range(g.n):
        if g.degree(hub) != g.n - 1:
            continue
        rest = induced(g, (v for v in range(g.n) if v != hub))
        if rest.max_degree <= 2 and rest.is_connected():
            return True
    return False


def _cycle_order(g: Graph, cycle_mask: int) -> tuple[int, ...]:
    """Walk a cycle from its least vertex, first toward the smaller neighbour."""
    start = (cycle_mask & -cycle_mask).bit_length() - 1
    order = [start]
    prev, cur = -1, start
    while True:
        options = [u for u in vertices_of(g.adj[cur] & cycle_mask) if u != prev]
        nxt = options[0]
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > cycle_mask.bit_count():
            raise ArgumentError("vertex set does not induce a cycle")
    return tuple(order)


def unicyclic_decomposition(g: Graph) -> UnicyclicDecomposition:
    """Cycle found by stripping leaves; forests by search that avoids the cycle."""
    if g.edge_count != g.n or not g.is_connected():
        raise ArgumentError("graph is not unicyclic")
    degree = [g.degree(v) for v in range(g.n)]
    alive = g.full_mask
    stack = [v for v in range(g.n) if degree[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive >> v & 1:
            continue
        alive &= ~(1 << v)
        for u in vertices_of(g.adj[v] & alive):
            degree[u] -= 1
            if degree[u] == 1:
                stack.append(u)
    cycle = _cycle_order(g, alive)
    off = g.full_mask & ~alive
    forests = {c: frozenset(vertices_of(reach(g, c, off | 1 << c) & ~(1 << c))) for c in cycle}
    return UnicyclicDecomposition(cycle=cycle, forests=forests)


def _context(g: Graph, cycle: tuple[int, ...]) -> C4Context:
    inside = mask_of(cycle)
    off = {c: frozenset(vertices_of(g.adj[c] & ~inside)) for c in cycle}
    pair = any(off[cycle[i]] and off[cycle[(i + 1) % 4]] for i in range(4))
    return C4Context(
        cycle=(cycle[0], cycle[1], cycle[2], cycle[3]),
        off_cycle_neighbors=off,
        degree2_count=sum(1 for c in cycle if g.degree(c) == 2),
        adjacent_attached_pair=pair,
    )


def c4_contexts(g: Graph) -> list[C4Context]:
    """One context per 4-cycle block of a graph whose blocks are edges or cycles."""
    bd = blocks(g)
    if not bd.is_cactus_like(g):
        raise ArgumentError("c4_contexts needs a graph whose blocks are edges or cycles")
    return [_context(g, _cycle_order(g, mask_of(b))) for b in bd.cycle_blocks(g) if len(b) == 4]


def cactus_observations_check(g: Graph) -> bool:
    """Structural consequences of two cycles sharing at most one vertex.

    (a) no two vertex-disjoint edges join the same pair of cycles;
    (b) a cycle vertex sees at most one vertex of any cycle not through it;
    (c) two vertices of one cycle share no neighbour in an off-cycle tree;
    (d) a cycle vertex has at most one neighbour in each off-cycle tree.
    """
    bd = blocks(g)
    if not bd.is_cactus_like(g):
        raise ArgumentError("cactus_observations_check needs blocks that are edges or cycles")
    cycles = [mask_of(b) for b in bd.cycle_blocks(g)]
    on_cycle = 0
    for c in cycles:
        on_cycle |= c
    off = g.full_mask & ~on_cycle
    trees = [m & off for m in component_masks(_restrict(g, off)) if m & off]

    for i, ci in enumerate(cycles):
        for j, cj in enumerate(cycles):
            if i == j:
                continue
            cross = [
                (v, w) for v in vertices_of(ci) for w in vertices_of(g.adj[v] & cj) if v != w
            ]
            for v, w in cross:
                for x, y in cross:
                    if x not in (v, w) and y not in (v, w):
                        return False
            for v in vertices_of(ci & ~cj):
                if (g.adj[v] & cj).bit_count() > 1:
                    return False
        members = vertices_of(ci)
        for t in trees:
            if any((g.adj[v] & t).bit_count() > 1 for v in members):
                return False
            for a, u in enumerate(members):
                for v in members[a + 1 :]:
                    if g.adj[u] & g.adj[v] & t:
                        return False
    return True


def _restrict(g: Graph, keep: int) -> Graph:
    """Same vertex set with only the edges inside ``keep``."""
    rows = tuple(row & keep if keep >> v & 1 else 0 for v, row in enumerate(g.adj))
    return Graph(n=g.n, adj=rows)


def classify(g: Graph) -> FamilyClassification:
    """Family of ``g`` by precedence tree > unicyclic > cactus > K_{2,2}-free bipartite."""
    c4 = g.n >= 4 and contains_krs(g, 2, 2) is not None
    if not g.is_connected():
        return FamilyClassification(
            family=Family.OTHER, n=g.n, connected=False, contains_c4_subgraph=c4, girth=girth(g)
        )
    m = g.edge_count
    if m == g.n - 1:
        return FamilyClassification(
            family=Family.TREE, n=g.n, contains_c4_subgraph=False,
            is_star=g.n <= 2 or g.max_degree == g.n - 1,
        )
    if m == g.n:
        d = unicyclic_decomposition(g)
        return FamilyClassification(
            family=Family.UNICYCLIC, n=g.n, contains_c4_subgraph=c4, girth=d.girth, unicyclic=d
        )
    bd = blocks(g)
    if bd.is_cactus_like(g):
        cyc = tuple(bd.cycle_blocks(g))
        return FamilyClassification(
            family=Family.CACTUS, n=g.n, contains_c4_subgraph=c4,
            girth=min(len(b) for b in cyc), cycle_blocks=cyc, is_book=is_book(g),
        )
    g_len = girth(g)
    if is_bipartite(g) and not c4:
        return FamilyClassification(
            family=Family.BIPARTITE_K22_FREE, n=g.n, contains_c4_subgraph=False, girth=g_len
        )
    return FamilyClassification(family=Family.OTHER, n=g.n, contains_c4_subgraph=c4, girth=g_len)
