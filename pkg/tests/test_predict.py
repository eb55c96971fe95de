import pytest
from pydantic import ValidationError

from coforce.errors import ArgumentError, DisconnectedGraphError
from coforce.forcing.solver import zero_forcing_number
from coforce.gen.enumerate import EnumFamily, enumerate_family
from coforce.gen.generators import (
    book,
    complete,
    cycle,
    partial_sunlet,
    path,
    random_graph,
    seashell,
    star,
    star_plus_edge,
    sunlet,
    wheel,
    windmill,
)
from coforce.graph.core import Graph, complement
from coforce.predict.rules import (
    Prediction,
    Rule,
    SelfEqualityClause,
    generic_bounds,
    partial_sunlet_prediction,
    predict_complement_zf,
    sunlet_prediction,
    unicyclic_forest_bound,
    unicyclic_self_equality,
    seashell_prediction,
    wheel_prediction,
    windmill_prediction,
)
from coforce.structure.families import Family, classify, unicyclic_decomposition


def c4_with_pendants(at: list[int]) -> Graph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)] + [(v, 4 + i) for i, v in enumerate(at)]
    return Graph.from_edges(4 + len(at), edges)


def z_complement(g: Graph) -> int:
    return zero_forcing_number(complement(g)).value


BULL = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
C4_TRIANGLE_PENDANT = Graph.from_edges(
    7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5), (4, 5), (1, 6)]
)
TRIANGLE_CHAIN = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


class TestPrediction:
    def test_interval_order(self):
        with pytest.raises(ValidationError):
            Prediction(lo=3, hi=2, rule=Rule.GENERIC_BOUNDS)

    def test_closed_form_rules_are_exact(self):
        with pytest.raises(ValidationError):
            Prediction(lo=2, hi=3, rule=Rule.TREE)
        assert Prediction(lo=2, hi=3, rule=Rule.GENERIC_BOUNDS).lo == 2

    def test_rule_strings(self):
        assert Rule.UNI_C4_CASE2A.value == "UNI_C4_CASE2A"
        assert len(Rule) == 15


class TestPredictComplement:
    @pytest.mark.parametrize(
        "graph,value,rule",
        [
            (path(5), 2, Rule.TREE),
            (star(6), 5, Rule.STAR),
            (path(3), 2, Rule.STAR),
            (star_plus_edge(6), 4, Rule.UNI_N2),
            (cycle(7), 4, Rule.UNI_GIRTH_NOT4),
            (c4_with_pendants([0, 1, 2, 3]), 4, Rule.UNI_C4_CASE1),
            (c4_with_pendants([0, 1]), 2, Rule.UNI_C4_CASE2A),
            (c4_with_pendants([0, 2]), 3, Rule.UNI_C4_CASE2B),
            (c4_with_pendants([0]), 2, Rule.UNI_C4_CASE3),
            (cycle(3), 3, Rule.UNI_SMALL_N),
            (cycle(4), 2, Rule.UNI_SMALL_N),
            (book(5, 2), 3, Rule.CACTUS_BOOK),
            (C4_TRIANGLE_PENDANT, 3, Rule.CACTUS_C4_ADJ),
            (TRIANGLE_CHAIN, 3, Rule.CACTUS_DEFAULT),
            (seashell(6), 3, Rule.SEASHELL),
            (seashell(4), 3, Rule.SEASHELL),
        ],
    )
    def test_rules(self, graph, value, rule):
        p = predict_complement_zf(graph)

        assert p.rule is rule
        assert p.lo == p.hi == value
        assert z_complement(graph) == value

    def test_bipartite_k22_free(self):
        edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (6, 7), (7, 8), (8, 9), (9, 1)]
        g = Graph.from_edges(10, edges)
        p = predict_complement_zf(g)

        assert p.rule is Rule.BIPARTITE_K22FREE
        assert p.lo == 7
        assert z_complement(g) == 7

    def test_tree_and_bipartite_rules_agree(self):
        # a non-star tree is also K_{2,2}-free bipartite; both give n - 3
        assert predict_complement_zf(path(6)).lo == 6 - 3

    def test_bipartition_bound(self):
        # K_{2,3} with three leaves on vertex 0; sides {0, 1} and six others
        edges = [(u, v) for u in (0, 1) for v in (2, 3, 4)] + [(0, 5), (0, 6), (0, 7)]
        g = Graph.from_edges(8, edges)
        p = predict_complement_zf(g)

        assert classify(g).family is Family.OTHER
        assert p.rule is Rule.GENERIC_BOUNDS
        assert p.lo == p.hi == 5
        assert "bipartition side 6" in p.notes
        assert z_complement(g) == 5

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            predict_complement_zf(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_too_small(self):
        with pytest.raises(ArgumentError):
            predict_complement_zf(path(2))

    def test_generic_bounds_complete(self):
        p = predict_complement_zf(complete(4))
        assert p.rule is Rule.GENERIC_BOUNDS
        assert p.lo <= 4 <= p.hi

    def test_generic_bounds_sandwich(self):
        checked = 0
        for seed in range(80):
            g = random_graph(4 + seed % 5, seed, connected=True)
            p = generic_bounds(g)
            exact = z_complement(g)
            assert p.lo <= exact <= p.hi, sorted(g.edges())
            assert p.lo <= predict_complement_zf(g).lo
            checked += 1
        assert checked == 80

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_unicyclic_enumeration(self, n):
        for g in enumerate_family(EnumFamily.UNICYCLIC, n):
            p = predict_complement_zf(g)
            assert p.lo == z_complement(g), sorted(g.edges())
            assert n - 4 <= p.lo <= n - 2
            assert unicyclic_forest_bound(unicyclic_decomposition(g)) <= p.lo
            if p.lo == n - 4:
                assert classify(g).girth == 4

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_tree_enumeration(self, n):
        for g in enumerate_family(EnumFamily.TREES, n):
            expected = n - 1 if g.max_degree == n - 1 else n - 3
            assert predict_complement_zf(g).lo == expected
            assert z_complement(g) == expected


class TestClosedForms:
    @pytest.mark.parametrize("n,value", [(3, 3), (4, 4), (5, 7), (6, 9)])
    def test_sunlet(self, n, value):
        assert sunlet_prediction(n) == value
        assert z_complement(sunlet(n)) == value

    def test_sunlet_too_small(self):
        with pytest.raises(ArgumentError):
            sunlet_prediction(2)

    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    def test_partial_sunlet(self, k):
        for m in range(k + 1):
            assert partial_sunlet_prediction(k, m) == z_complement(partial_sunlet(k, m)), (k, m)
        assert partial_sunlet_prediction(k, k) == sunlet_prediction(k)

    def test_partial_sunlet_range(self):
        with pytest.raises(ArgumentError):
            partial_sunlet_prediction(5, 6)

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_wheel(self, n):
        assert wheel_prediction(n) == z_complement(wheel(n))

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_seashell(self, n):
        assert seashell_prediction(n) == z_complement(seashell(n))
        assert predict_complement_zf(seashell(n)).lo == seashell_prediction(n)

    def test_seashell_too_small(self):
        with pytest.raises(ArgumentError):
            seashell_prediction(3)

    @pytest.mark.parametrize("k,copies", [(3, 2), (3, 3), (4, 2), (5, 2), (4, 3)])
    def test_windmill(self, k, copies):
        g = windmill(k, copies)
        assert windmill_prediction(k, copies) == z_complement(g)
        assert predict_complement_zf(g).lo == windmill_prediction(k, copies)

    def test_friendship_is_book(self):
        assert windmill(3, 3) == book(7, 3)
        assert windmill_prediction(3, 3) == 5

    def test_windmill_needs_two_copies(self):
        with pytest.raises(ArgumentError):
            windmill_prediction(4, 1)

    def test_forest_bound(self):
        assert unicyclic_forest_bound(unicyclic_decomposition(cycle(5))) == 2
        assert unicyclic_forest_bound(unicyclic_decomposition(sunlet(5))) == 6
        paw_tail = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5)])
        assert unicyclic_forest_bound(unicyclic_decomposition(paw_tail)) == 0


class TestSelfEquality:
    def test_order_four(self):
        r = unicyclic_self_equality(cycle(4))
        assert r.holds
        assert r.clause is SelfEqualityClause.ORDER_FOUR
        assert r.z == r.z_complement == 2

    def test_order_five(self):
        assert unicyclic_self_equality(BULL).holds
        assert unicyclic_self_equality(cycle(5)).holds
        r = unicyclic_self_equality(star_plus_edge(5))
        assert not r.holds
        assert r.clause is SelfEqualityClause.ORDER_FIVE

    def test_c4_adjacent_pendants(self):
        r = unicyclic_self_equality(c4_with_pendants([0, 1]))
        assert r.holds
        assert r.clause is SelfEqualityClause.C4_ADJACENT_PENDANTS

    def test_c6(self):
        r = unicyclic_self_equality(cycle(6))
        assert not r.holds
        assert r.clause is SelfEqualityClause.NONE
        assert (r.z, r.z_complement) == (2, 3)

    def test_rejects_non_unicyclic(self):
        with pytest.raises(ArgumentError):
            unicyclic_self_equality(path(5))

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_matches_exact_values(self, n):
        for g in enumerate_family(EnumFamily.UNICYCLIC, n):
            r = unicyclic_self_equality(g)
            expected = zero_forcing_number(g).value == z_complement(g)
            assert r.holds == expected, sorted(g.edges())
