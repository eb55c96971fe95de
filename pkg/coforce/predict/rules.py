"""Closed forms and bounds for the zero forcing number of a graph's complement."""

from __future__ import annotations

from enum import Enum

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from coforce.errors import ArgumentError, DisconnectedGraphError
from coforce.forcing.solver import zero_forcing_number
from coforce.graph.core import (
    Graph,
    complement,
    component_masks,
    induced,
    is_bipartite,
    vertices_of,
)
from coforce.structure.families import (
    C4Context,
    Family,
    FamilyClassification,
    UnicyclicDecomposition,
    c4_contexts,
    classify,
    is_seashell,
    is_star_plus_edge,
)
from coforce.structure.subgraphs import forbidden_induced_test, krs_free_bound


class Rule(str, Enum):
    """Identifier of the rule that produced a prediction (stable report strings)."""

    TREE = "TREE"
    STAR = "STAR"
    BIPARTITE_K22FREE = "BIPARTITE_K22FREE"
    UNI_N2 = "UNI_N2"
    UNI_GIRTH_NOT4 = "UNI_GIRTH_NOT4"
    UNI_C4_CASE1 = "UNI_C4_CASE1"
    UNI_C4_CASE2A = "UNI_C4_CASE2A"
    UNI_C4_CASE2B = "UNI_C4_CASE2B"
    UNI_C4_CASE3 = "UNI_C4_CASE3"
    UNI_SMALL_N = "UNI_SMALL_N"
    CACTUS_BOOK = "CACTUS_BOOK"
    CACTUS_C4_ADJ = "CACTUS_C4_ADJ"
    CACTUS_DEFAULT = "CACTUS_DEFAULT"
    SEASHELL = "SEASHELL"
    GENERIC_BOUNDS = "GENERIC_BOUNDS"


class Prediction(BaseModel):
    """Interval [lo, hi] for Z(complement); a point unless the rule is GENERIC_BOUNDS."""

    model_config = ConfigDict(frozen=True)

    lo: int = Field(..., ge=0, description="Lower end of the interval")
    hi: int = Field(..., ge=0, description="Upper end of the interval")
    rule: Rule = Field(..., description="Rule that fired")
    notes: str = Field(default="", description="Short human-readable justification")

    @model_validator(mode="after")
    def _check_interval(self) -> Prediction:
        if self.lo > self.hi:
            raise ValueError(f"lo={self.lo} exceeds hi={self.hi}")
        if self.rule is not Rule.GENERIC_BOUNDS and self.lo != self.hi:
            raise ValueError(f"rule {self.rule.value} must give an exact value")
        return self

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @classmethod
    def exact(cls, value: int, rule: Rule, notes: str) -> Prediction:
        return cls(lo=value, hi=value, rule=rule, notes=notes)


class SelfEqualityClause(str, Enum):
    """Which condition decided ``unicyclic_self_equality``."""

    ORDER_FOUR = "order_four"
    ORDER_FIVE = "order_five"
    C4_ADJACENT_PENDANTS = "c4_adjacent_pendants"
    EXACT_N_MINUS_3 = "exact_n_minus_3"
    NONE = "none"


class SelfEquality(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool = Field(..., description="Whether Z(U) = Z(complement U)")
    clause: SelfEqualityClause = Field(..., description="Condition that decided the answer")
    z: int = Field(..., description="Exact Z(U)")
    z_complement: int = Field(..., description="Predicted Z(complement U)")


def _tree(g: Graph, c: FamilyClassification) -> Prediction:
    n = g.n
    if c.is_star:
        return Prediction.exact(n - 1, Rule.STAR, "star: complement is K_{n-1} plus K_1")
    return Prediction.exact(n - 3, Rule.TREE, "non-star tree")


def _degree2_adjacent(g: Graph, ctx: C4Context) -> bool:
    cyc = ctx.cycle
    return any(g.degree(cyc[i]) == 2 and g.degree(cyc[(i + 1) % 4]) == 2 for i in range(4))


def _unicyclic(g: Graph, c: FamilyClassification) -> Prediction:
    n = g.n
    if n == 3:
        return Prediction.exact(3, Rule.UNI_SMALL_N, "C3: complement has no edges")
    if n == 4:
        return Prediction.exact(2, Rule.UNI_SMALL_N, "order 4: complement is 2K2 or P3 plus K1")
    if is_star_plus_edge(g):
        return Prediction.exact(n - 2, Rule.UNI_N2, "K_{1,n-1}+e")
    if c.girth != 4:
        return Prediction.exact(n - 3, Rule.UNI_GIRTH_NOT4, f"unicyclic with girth {c.girth}")
    (ctx,) = c4_contexts(g)
    count = ctx.degree2_count
    if count <= 1:
        return Prediction.exact(
            n - 4, Rule.UNI_C4_CASE1, f"C4 with {count} cycle vertices of degree 2"
        )
    if count == 2:
        if _degree2_adjacent(g, ctx):
            return Prediction.exact(
                n - 4, Rule.UNI_C4_CASE2A, "C4 whose two degree-2 vertices are adjacent"
            )
        return Prediction.exact(
            n - 3, Rule.UNI_C4_CASE2B, "C4 whose two degree-2 vertices are opposite"
        )
    return Prediction.exact(n - 3, Rule.UNI_C4_CASE3, "C4 with three degree-2 vertices")


def _cactus(g: Graph, c: FamilyClassification) -> Prediction:
    n = g.n
    if c.is_book:
        return Prediction.exact(n - 2, Rule.CACTUS_BOOK, "book: triangles sharing one hub")
    if any(ctx.adjacent_attached_pair for ctx in c4_contexts(g)):
        return Prediction.exact(
            n - 4, Rule.CACTUS_C4_ADJ, "cactus with adjacent attached vertices on a C4"
        )
    return Prediction.exact(n - 3, Rule.CACTUS_DEFAULT, f"cactus with {len(c.cycle_blocks)} cycles")


def _component_upper(h: Graph) -> int:
    """Z upper bound per component: 1, |C| - 1 if complete, else |C| - 2."""
    total = 0
    for part in component_masks(h):
        size = part.bit_count()
        if size == 1:
            total += 1
            continue
        sub = induced(h, vertices_of(part))
        total += size - 1 if sub.edge_count == size * (size - 1) // 2 else size - 2
    return total


def generic_bounds(g: Graph) -> Prediction:
    """Interval from the missing K_{r,s}, the complement's degrees and the forbidden list.

    A connected bipartite g with sides X and Y leaves both sides as cliques of
    the complement, so Z(complement) >= max(|X|, |Y|) - 1.
    """
    n = g.n
    comp = complement(g)
    krs = krs_free_bound(g)
    lo = max(krs.bound, comp.min_degree)
    hi = _component_upper(comp)
    notes = [f"K_{{{krs.r},{krs.s}}}-free bound {krs.bound}", f"min degree {comp.min_degree}"]
    if g.is_connected() and is_bipartite(g):
        side = max(len(part) for part in nx.bipartite.sets(g.to_networkx()))
        lo = max(lo, side - 1)
        notes.append(f"bipartition side {side}")
    if comp.is_connected():
        hi = min(hi, n - 3)
        notes.append("complement connected")
    if forbidden_induced_test(comp):
        lo = max(lo, n - 2)
        notes.append("complement has no forbidden induced subgraph")
    else:
        hi = min(hi, n - 3)
        notes.append("complement has a forbidden induced subgraph")
    return Prediction(lo=lo, hi=hi, rule=Rule.GENERIC_BOUNDS, notes="; ".join(notes))


def predict_complement_zf(g: Graph) -> Prediction:
    """Predicted Z(complement of g) from the family of a connected ``g``."""
    if not g.is_connected():
        raise DisconnectedGraphError(
            "prediction needs a connected graph; solve components with zero_forcing_number"
        )
    if g.n < 3:
        raise ArgumentError("prediction needs at least 3 vertices")
    c = classify(g)
    if c.family is Family.TREE:
        return _tree(g, c)
    if c.family is Family.UNICYCLIC:
        return _unicyclic(g, c)
    if c.family is Family.CACTUS:
        return _cactus(g, c)
    if c.family is Family.BIPARTITE_K22_FREE:
        return Prediction.exact(g.n - 3, Rule.BIPARTITE_K22FREE, "connected bipartite, no C4")
    if is_seashell(g):
        return Prediction.exact(seashell_prediction(g.n), Rule.SEASHELL, "hub joined to a path")
    return generic_bounds(g)


def unicyclic_forest_bound(d: UnicyclicDecomposition) -> int:
    """|G| - m_max - 3, a lower bound on Z(complement)."""
    return d.order - d.m_max - 3


def sunlet_prediction(n: int) -> int:
    """Z of the complement of C_n with a pendant on every cycle vertex."""
    if n < 3:
        raise ArgumentError("sunlet needs a base cycle of length at least 3")
    return 2 * n - 4 if n == 4 else 2 * n - 3


def partial_sunlet_prediction(k: int, m: int) -> int:
    """Z of the complement of C_k with pendants on m consecutive cycle vertices."""
    if k < 3:
        raise ArgumentError("cycle length must be at least 3")
    if not 0 <= m <= k:
        raise ArgumentError(f"pendant count {m} outside 0..{k}")
    if k >= 5:
        return k + m - 3
    if m >= 2:
        return m
    small = {3: (3, 2), 4: (2, 2)}
    return small[k][m]


def wheel_prediction(n: int) -> int:
    """Z of the complement of the wheel on n vertices (hub plus C_{n-1} rim).

    The complement is an isolated hub next to the complement of the rim.
    """
    if n < 4:
        raise ArgumentError("wheel needs at least 4 vertices")
    if n == 4:
        return 4
    if n == 5:
        return 3
    return n - 3


def seashell_prediction(n: int) -> int:
    """Z of the complement of the seashell on n vertices (hub joined to P_{n-1})."""
    if n < 4:
        raise ArgumentError("seashell needs at least 4 vertices")
    return 3 if n == 4 else n - 3


def windmill_prediction(k: int, copies: int) -> int:
    """Z of the complement of ``copies`` cycles C_k sharing one vertex.

    k = 3 is a book on 2 * copies + 1 vertices; longer blades fall under the
    cactus default.
    """
    if k < 3:
        raise ArgumentError("windmill blades need cycle length at least 3")
    if copies < 2:
        raise ArgumentError("windmill needs at least 2 copies")
    if k == 3:
        return 2 * copies - 1
    return k * copies - copies - 2


def unicyclic_self_equality(g: Graph, max_subsets: int | None = None) -> SelfEquality:
    """Decide Z(U) = Z(complement U) for a unicyclic U on at least 4 vertices."""
    c = classify(g)
    if c.family is not Family.UNICYCLIC:
        raise ArgumentError("unicyclic_self_equality needs a unicyclic graph")
    n = g.n
    if n < 4:
        raise ArgumentError("unicyclic_self_equality needs at least 4 vertices")
    z = zero_forcing_number(g, max_subsets=max_subsets).value
    zc = predict_complement_zf(g).lo

    def result(holds: bool, clause: SelfEqualityClause) -> SelfEquality:
        return SelfEquality(holds=holds, clause=clause, z=z, z_complement=zc)

    if n == 4:
        return result(True, SelfEqualityClause.ORDER_FOUR)
    if n == 5:
        return result(not is_star_plus_edge(g), SelfEqualityClause.ORDER_FIVE)
    if n == 6 and c.girth == 4 and c4_contexts(g)[0].adjacent_attached_pair:
        return result(True, SelfEqualityClause.C4_ADJACENT_PENDANTS)
    holds = complement(g).is_connected() and zc == n - 3 and z == n - 3
    return result(holds, SelfEqualityClause.EXACT_N_MINUS_3 if holds else SelfEqualityClause.NONE)
