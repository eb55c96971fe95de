"""K_{r,s} subgraph detection and the small forbidden induced subgraph list."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from coforce.errors import ArgumentError
from coforce.graph.core import Graph, vertices_of


class KrsWitness(BaseModel):
    """Two disjoint sides with every cross pair an edge (sides need not be independent)."""

    model_config = ConfigDict(frozen=True)

    r_side: frozenset[int] = Field(..., description="Side of size r")
    s_side: frozenset[int] = Field(..., description="Side of size s")

    @model_validator(mode="after")
    def _check_disjoint(self) -> KrsWitness:
        if self.r_side & self.s_side:
            raise ValueError("sides must be disjoint")
        return self


class KrsBound(BaseModel):
    """Lower bound n - r - s + 1 on Z(complement) from a missing K_{r,s}."""

    model_config = ConfigDict(frozen=True)

    bound: int = Field(..., description="Lower bound on Z of the complement")
    r: int = Field(..., description="Smaller side of the missing K_{r,s}; 0 when none is missing")
    s: int = Field(..., description="Larger side of the missing K_{r,s}; 0 when none is missing")


def contains_krs(g: Graph, r: int, s: int) -> KrsWitness | None:
    """A K_{r,s} subgraph of ``g`` if one exists.

    An r-set spans K_{r,s} exactly when its common neighbourhood has at least
    s vertices, so r-subsets are grown in ascending order while that
    neighbourhood stays large enough.
    """
    if not 1 <= r <= s:
        raise ArgumentError(f"need 1 <= r <= s, got r={r}, s={s}")
    if r + s > g.n:
        raise ArgumentError(f"r + s = {r + s} exceeds n = {g.n}")

    if r == 1:
        for v in range(g.n):
            if g.degree(v) >= s:
                leaves = frozenset(vertices_of(g.adj[v])[:s])
                return KrsWitness(r_side=frozenset([v]), s_side=leaves)
        return None

    eligible = [v for v in range(g.n) if g.degree(v) >= s]

    def grow(chosen: list[int], common: int, first: int) -> KrsWitness | None:
        if len(chosen) == r:
            return KrsWitness(r_side=frozenset(chosen), s_side=frozenset(vertices_of(common)[:s]))
        for i in range(first, len(eligible)):
            v = eligible[i]
            narrowed = common & g.adj[v]
            if narrowed.bit_count() < s:
                continue
            chosen.append(v)
            found = grow(chosen, narrowed, i + 1)
            if found:
                return found
            chosen.pop()
        return None

    return grow([], g.full_mask, 0)


def krs_free_bound(g: Graph) -> KrsBound:
    """Best bound n - r - s + 1 over K_{r,s} missing from ``g``.

    Sizes t = r + s are scanned upward and the first t with a missing K_{r,s}
    wins; within one t the more balanced pair is reported first.
    """
    if g.n < 2:
        raise ArgumentError("krs_free_bound needs at least 2 vertices")
    for t in range(2, g.n + 1):
        for r in range(t // 2, 0, -1):
            if contains_krs(g, r, t - r) is None:
                return KrsBound(bound=g.n - t + 1, r=r, s=t - r)
    return KrsBound(bound=1, r=0, s=0)


# Induced-minimal graphs H with Z(H) < |H| - 2. The list is re-derived in the
# test suite by enumerating all graphs on at most 6 vertices against the exact
# solver; "ltimes" is K_{1,4} plus one leaf-leaf edge, "dart" is a diamond with
# a pendant on a degree-3 vertex.
FORBIDDEN_PATTERNS: dict[str, Graph] = {
    "P4": Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]),
    "P3+P2": Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)]),
    "ltimes": Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]),
    "dart": Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)]),
    "3P2": Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)]),
}


def has_induced(g: Graph, pattern: Graph) -> bool:
    """Whether ``pattern`` occurs as an induced subgraph of ``g``."""
    k = pattern.n
    if k > g.n:
        return False
    order = sorted(range(k), key=lambda p: -pattern.degree(p))
    # earlier[i]: positions j < i whose pattern vertices are adjacent to order[i]
    earlier = [
        [j for j in range(i) if pattern.has_edge(order[i], order[j])] for i in range(k)
    ]
    need = [pattern.degree(p) for p in order]
    images = [0] * k

    def extend(i: int, placed: int) -> bool:
        if i == k:
            return True
        want = 0
        for j in earlier[i]:
            want |= 1 << images[j]
        for v in range(g.n):
            if placed >> v & 1 or g.degree(v) < need[i]:
                continue
            if g.adj[v] & placed != want:
                continue
            images[i] = v
            if extend(i + 1, placed | 1 << v):
                return True
        return False

    return extend(0, 0)


def forbidden_induced_test(g: Graph) -> bool:
    """True iff ``g`` has none of the forbidden patterns, i.e. Z(g) >= n - 2."""
    if g.n < 3:
        raise ArgumentError("forbidden_induced_test needs at least 3 vertices")
    return not any(has_induced(g, p) for p in FORBIDDEN_PATTERNS.values())
