"""Exhaustive labelled enumerations for small n."""

from __future__ import annotations

from collections.abc import Iterator
from enum import Enum
from itertools import product

from coforce.errors import ArgumentError, ResourceLimitError
from coforce.gen.generators import prufer_decode
from coforce.graph.core import Graph


class EnumFamily(str, Enum):
    TREES = "trees"
    UNICYCLIC = "unicyclic"
    ALL_GRAPHS = "all_graphs"
    CONNECTED_GRAPHS = "connected_graphs"


BUDGETS: dict[EnumFamily, int] = {
    EnumFamily.TREES: 9,
    EnumFamily.UNICYCLIC: 8,
    EnumFamily.ALL_GRAPHS: 7,
    EnumFamily.CONNECTED_GRAPHS: 7,
}


def _trees(n: int) -> Iterator[Graph]:
    if n == 1:
        yield Graph.empty(1)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def _tree_path_edges(t: Graph, u: int, v: int) -> list[tuple[int, int]]:
    parent = {u: u}
    stack = [u]
    while stack:
        w = stack.pop()
        row = t.adj[w]
        for x in range(t.n):
            if row >> x & 1 and x not in parent:
                parent[x] = w
                stack.append(x)
    out = []
    while v != u:
        p = parent[v]
        out.append((min(p, v), max(p, v)))
        v = p
    return out


def _unicyclic(n: int) -> Iterator[Graph]:
    # each unicyclic graph is kept from the one (tree, e) pair where e is the
    # largest edge on the cycle
    for tree in _trees(n):
        rows = list(tree.adj)
        for v in range(n):
            for u in range(v):
                if tree.has_edge(u, v):
                    continue
                if max(_tree_path_edges(tree, u, v)) > (u, v):
                    continue
                extra = rows.copy()
                extra[u] |= 1 << v
                extra[v] |= 1 << u
                yield Graph(n=n, adj=tuple(extra))


def _all_graphs(n: int) -> Iterator[Graph]:
    """Edge mask bit i selects the i-th pair in graph6 order (0,1), (0,2), (1,2), ..."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n=n, adj=tuple(rows))


def enumerate_family(family: EnumFamily, n: int) -> Iterator[Graph]:
    """Every labelled graph of ``family`` on n vertices, each exactly once.

    Raises ResourceLimitError when n is above the family's budget.
    """
    if n < 1:
        raise ArgumentError("n must be at least 1")
    budget = BUDGETS[family]
    if n > budget:
        raise ResourceLimitError(f"{family.value} enumeration is limited to n <= {budget}")
    if family is EnumFamily.TREES:
        return _trees(n)
    if family is EnumFamily.UNICYCLIC:
        return _unicyclic(n) if n >= 3 else iter(())
    if family is EnumFamily.ALL_GRAPHS:
        return _all_graphs(n)
    return (g for g in _all_graphs(n) if g.is_connected())
