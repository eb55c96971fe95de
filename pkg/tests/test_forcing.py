import numpy as np
import pytest

from coforce.errors import ArgumentError
from coforce.forcing.closure import (
    ColorState,
    Force,
    chains,
    closure,
    greedy_zero_forcing_set,
    is_zfs,
    reverse_chains,
)
from coforce.forcing.solver import zero_forcing_number
from coforce.gen.generators import complete, cycle, path, random_graph, star
from coforce.graph.core import Graph


def nested_sets(n: int, seed: int) -> tuple[set[int], set[int]]:
    """Random S and a random superset T of S."""
    rng = np.random.Generator(np.random.PCG64(seed))
    order = [int(v) for v in rng.permutation(n)]
    k = int(rng.integers(0, n + 1))
    extra = int(rng.integers(0, n - k + 1))
    return set(order[:k]), set(order[: k + extra])


class TestClosure:
    def test_star_from_leaf(self):
        state = closure(star(4), {1})

        assert state.blue == frozenset({0, 1})
        assert state.log == (Force(forcer=1, forced=0, round=1),)
        assert not state.is_complete

    def test_star_from_centre_is_stuck(self):
        state = closure(star(4), {0})
        assert state.blue == frozenset({0})
        assert state.round == 0

    def test_path_from_endpoint(self):
        state = closure(path(5), {0})

        assert state.is_complete
        assert state.round == 4
        assert [f.forced for f in state.log] == [1, 2, 3, 4]

    def test_simultaneous_rounds(self):
        # both ends of P5 force inward in the same round
        state = closure(path(5), {0, 4})
        assert state.round == 2
        assert [(f.forced, f.round) for f in state.log] == [(1, 1), (3, 1), (2, 2)]

    def test_least_forcer_claims(self):
        # 0 and 1 both see only vertex 2 as white
        g = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
        state = closure(g, {0, 1})
        assert state.log == (Force(forcer=0, forced=2, round=1),)

    def test_out_of_range_start(self):
        with pytest.raises(ArgumentError):
            closure(path(3), {3})

    def test_c5(self):
        assert is_zfs(cycle(5), {0, 1})
        assert not is_zfs(cycle(5), {0, 2})

    def test_complete_graph(self):
        assert is_zfs(complete(5), {0, 1, 2, 3})
        assert not is_zfs(complete(5), {0, 1, 2})

    def test_superset_monotone(self):
        for seed in range(30):
            g = random_graph(8, seed)
            base = closure(g, {0, 1}).blue
            assert base <= closure(g, {0, 1, 2}).blue

    def test_zero_forcing_is_upward_closed(self):
        forcing = 0
        for seed in range(200):
            g = random_graph(3 + seed % 8, seed, p=0.35)
            s, t = nested_sets(g.n, seed)
            assert closure(g, s).blue <= closure(g, t).blue
            if is_zfs(g, s):
                assert is_zfs(g, t), (seed, s, t)
                forcing += 1
        assert forcing > 0


class TestChains:
    def test_path_chain(self):
        state = closure(path(4), {0})
        c = chains(state, {0})

        assert c.chains == ((0, 1, 2, 3),)
        assert reverse_chains(c) == frozenset({3})

    def test_chains_cover_every_vertex(self):
        g = cycle(6)
        state = closure(g, {0, 1})
        c = chains(state, {0, 1})
        covered = [v for chain in c.chains for v in chain]
        assert sorted(covered) == list(range(6))

    def test_incomplete_state_rejected(self):
        with pytest.raises(ArgumentError):
            chains(closure(star(4), {1}), {1})

    def test_mismatched_start_rejected(self):
        state = closure(path(4), {0})
        with pytest.raises(ArgumentError):
            chains(state, {0, 1})

    def test_start_must_be_the_unforced_vertices(self):
        state = closure(path(3), {0})
        with pytest.raises(ArgumentError):
            chains(state, {5})
        with pytest.raises(ArgumentError):
            chains(state, {2})

    def test_reversal_is_zero_forcing(self):
        checked = 0
        for seed in range(60):
            g = random_graph(8, seed, p=0.35)
            start = greedy_zero_forcing_set(g)
            state = closure(g, start)
            assert state.is_complete
            ends = reverse_chains(chains(state, start))
            assert len(ends) == len(start)
            assert is_zfs(g, ends)
            checked += 1
        assert checked == 60

    def test_reversal_of_minimum_witness(self):
        for seed in range(150):
            g = random_graph(2 + seed % 8, seed, p=0.4)
            result = zero_forcing_number(g)
            state = closure(g, result.witness)
            ends = reverse_chains(chains(state, result.witness))
            assert len(ends) == result.value
            assert is_zfs(g, ends), sorted(g.edges())

    def test_colorstate_model(self):
        state = ColorState(n=2, blue=frozenset({0, 1}))
        assert state.is_complete


class TestGreedy:
    def test_greedy_is_minimal(self):
        for seed in range(30):
            g = random_graph(9, seed, p=0.3)
            s = greedy_zero_forcing_set(g)
            assert is_zfs(g, s)
            for v in s:
                assert not is_zfs(g, s - {v})

    def test_greedy_on_path(self):
        assert greedy_zero_forcing_set(path(6)) == frozenset({0})
