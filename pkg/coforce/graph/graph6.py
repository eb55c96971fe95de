"""graph6 codec for graphs with at most 64 vertices.

networkx does the bit packing; this module validates each line first so a
bad byte is reported with its offset.
"""

from __future__ import annotations

import networkx as nx

from coforce.errors import GraphFormatError
from coforce.graph.core import MAX_VERTICES, Graph

HEADER = ">>graph6<<"
_BIAS = 63
_LONG = 126


def to_graph6(g: Graph) -> str:
    """Canonical graph6 encoding of ``g`` (no header, no newline)."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").rstrip("\n")


def _check(data: bytes, base: int) -> int:
    """Vertex count of a well-formed graph6 body; raises with byte offsets otherwise."""
    if not data:
        raise GraphFormatError("empty graph6 string", base)
    if data[0] < _LONG:
        n, pos = data[0] - _BIAS, 1
    elif len(data) >= 2 and data[1] == _LONG:
        raise GraphFormatError(f"8-byte size header: more than {MAX_VERTICES} vertices", base)
    elif len(data) >= 4:
        n = (data[1] - _BIAS) << 12 | (data[2] - _BIAS) << 6 | (data[3] - _BIAS)
        pos = 4
    else:
        raise GraphFormatError("truncated size header", base + len(data))

    if n < 1:
        raise GraphFormatError("graph6 string encodes no vertices", base)
    if n > MAX_VERTICES:
        raise GraphFormatError(f"{n} vertices exceeds the limit of {MAX_VERTICES}", base)

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != expected:
        raise GraphFormatError(
            f"expected {expected} data bytes for n={n}, got {len(body)}",
            base + pos + min(len(body), expected),
        )
    pad = expected * 6 - nbits
    if pad and (body[-1] - _BIAS) & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", base + pos + expected - 1)
    return n


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; offsets in errors count from the line start."""
    line = text.rstrip()
    base = len(HEADER) if line.startswith(HEADER) else 0
    for i, ch in enumerate(line[base:]):
        if not _BIAS <= ord(ch) <= _LONG:
            raise GraphFormatError(f"character {ch!r} outside the graph6 range 63..126", base + i)
    data = line[base:].encode("ascii")
    n = _check(data, base)
    h = nx.from_graph6_bytes(data)
    return Graph.from_edges(n, h.edges())
