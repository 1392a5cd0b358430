from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from helpers import brute_proper_colorings, isomorphic, oracle_bridgeless, to_nx
from hypothesis import given
from hypothesis import strategies as st

from normalcol import generators as gen
from normalcol.graph import (
    Multigraph,
    PreconditionError,
    components,
    girth,
    is_bridgeless,
    is_claw_free,
    is_cubic,
    is_perfect_matching,
)


def three_colorable(g) -> bool:
    return next(brute_proper_colorings(g, 3), None) is not None


class TestFixedGraphs:
    def test_petersen_counts(self):
        p = gen.petersen()
        assert (p.n, p.m) == (10, 15)
        assert nx.is_isomorphic(nx.Graph(to_nx(p)), nx.petersen_graph())

    @pytest.mark.parametrize("make,expected", [
        (gen.k4, nx.complete_graph(4)),
        (gen.k33, nx.complete_bipartite_graph(3, 3)),
        (lambda: gen.prism(3), nx.circular_ladder_graph(3)),
        (lambda: gen.prism(5), nx.circular_ladder_graph(5)),
        (gen.mobius_kantor, nx.LCF_graph(16, [5, -5], 8)),
        (lambda: gen.generalized_petersen(5, 2), nx.petersen_graph()),
    ])
    def test_against_networkx_builders(self, make, expected):
        assert nx.is_isomorphic(nx.Graph(to_nx(make())), expected)

    def test_theta(self):
        t = gen.theta()
        assert (t.n, t.m) == (2, 3) and is_cubic(t)


class TestFiveZone:
    def test_counts(self):
        z = gen.five_zone()
        assert len(gen.FIVE_ZONE_VERTICES) == 11
        assert len(gen.FIVE_ZONE_STUBS) == 5
        assert z is not None

    def test_close_with_open_stubs_fails(self):
        with pytest.raises(PreconditionError):
            gen.five_zone().close()


class TestTreelike:
    def test_three_leaf_counts(self):
        ts = gen.treelike_snark(gen.halin_spec(gen.caterpillar_tree(3)))
        assert (ts.graph.n, ts.graph.m) == (34, 51)
        assert is_cubic(ts.graph) and is_bridgeless(ts.graph)
        assert not is_claw_free(ts.graph)

    def test_three_leaf_not_three_colorable_brute_force(self):
        ts = gen.treelike_snark(gen.halin_spec(gen.caterpillar_tree(3)))
        assert not three_colorable(ts.graph)

    @pytest.mark.parametrize("leaves", range(3, 9))
    def test_vertex_count(self, leaves):
        ts = gen.treelike_snark(gen.halin_spec(gen.caterpillar_tree(leaves)))
        assert ts.graph.n == 12 * leaves - 2
        assert ts.graph.m == 18 * leaves - 3
        assert oracle_bridgeless(ts.graph)

    @given(st.integers(3, 9), st.integers(0, 10**6))
    def test_random_trees_are_cubic_trees(self, leaves, seed):
        t = gen.random_cubic_tree(leaves, seed)
        G = to_nx(t)
        assert nx.is_tree(G)
        assert sorted(d for _, d in G.degree()) == [1] * leaves + [3] * (leaves - 2)

    def test_leaf_order_is_a_permutation(self):
        t = gen.random_cubic_tree(7, 4)
        spec = gen.halin_spec(t)
        assert sorted(spec.leaf_order) == sorted(v for v in range(t.n) if t.degree(v) == 1)

    def test_too_few_leaves(self):
        with pytest.raises(PreconditionError):
            gen.caterpillar_tree(2)


class TestTriangleExpansion:
    def test_k4(self):
        exp = gen.triangle_expand(gen.k4())
        assert (exp.graph.n, exp.graph.m) == (12, 18)
        assert is_claw_free(exp.graph)

    def test_theta(self):
        exp = gen.triangle_expand(gen.theta())
        assert (exp.graph.n, exp.graph.m) == (6, 9)
        assert nx.is_isomorphic(nx.Graph(to_nx(exp.graph)), nx.circular_ladder_graph(3))

    def test_corner_bookkeeping(self):
        h = gen.petersen()
        exp = gen.triangle_expand(h)
        for e, (a, b) in enumerate(h.edges):
            ge = exp.edge_map[e]
            assert set(exp.graph.edges[ge]) == {exp.corner[(a, e)], exp.corner[(b, e)]}
        for x, tri in enumerate(exp.triangle_edges):
            ends = {v for t in tri for v in exp.graph.edges[t]}
            assert ends == set(exp.triangles[x])


class TestDiamonds:
    def test_single_string(self):
        g = gen.petersen()
        d = gen.replace_edge_with_diamond_string(g, 0, 1)
        # 5 diamond edges plus 2 joins minus the removed edge
        assert (d.n, d.m) == (g.n + 4, g.m + 6)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_string_keeps_cubic_bridgeless(self, k):
        d = gen.replace_edge_with_diamond_string(gen.triangle_expand(gen.k4()).graph, 0, k)
        assert is_cubic(d) and oracle_bridgeless(d) and is_claw_free(d)

    def test_ring_counts(self):
        r = gen.ring_of_diamonds(2)
        assert (r.n, r.m) == (8, 12)
        assert is_claw_free(r)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_ring_three_colorable(self, k):
        assert three_colorable(gen.ring_of_diamonds(k))

    def test_ring_too_small(self):
        with pytest.raises(PreconditionError):
            gen.ring_of_diamonds(1)

    def test_digon(self):
        g = gen.insert_digon(gen.k4(), 0)
        assert is_cubic(g) and oracle_bridgeless(g) and g.n == 6


class TestCyclePermutation:
    def test_petersen_spec(self):
        g = gen.cycle_permutation(gen.CyclePermSpec(5, gen.PETERSEN_PERMUTATION)).graph
        assert (g.n, g.m) == (10, 15)
        assert isomorphic(g, gen.petersen())
        assert girth(g) == 5 and not three_colorable(g)

    def test_only_pentagram_permutations_give_petersen(self):
        hits = []
        for rest in itertools.permutations(range(1, 5)):
            p = (0, *rest)
            if isomorphic(gen.cycle_permutation(gen.CyclePermSpec(5, p)).graph, gen.petersen()):
                hits.append(p)
        assert hits == [(0, 2, 4, 1, 3), (0, 3, 1, 4, 2)]

    def test_even_identity_is_three_colorable(self):
        g = gen.cycle_permutation(gen.CyclePermSpec(6, tuple(range(6)))).graph
        assert three_colorable(g)

    @given(st.integers(3, 15), st.integers(0, 10**6))
    def test_matching_is_perfect(self, n, seed):
        spec = gen.random_permutation_spec(n, random.Random(seed))
        cp = gen.cycle_permutation(spec)
        assert is_perfect_matching(cp.graph, cp.matching)
        for j in range(n):
            assert set(cp.graph.edges[cp.matching_edge(j)]) == {cp.v(j), cp.u(spec.p[j])}

    def test_bad_permutation(self):
        with pytest.raises(PreconditionError):
            gen.CyclePermSpec(4, (0, 1, 1, 2))
        with pytest.raises(PreconditionError):
            gen.CyclePermSpec(3, (1, 0, 2))


class TestRandom:
    @given(st.sampled_from([2, 4, 6, 8, 12, 20]), st.integers(0, 10**6))
    def test_bridgeless_cubic_connected(self, n, seed):
        g = gen.random_bridgeless_cubic(n, seed)
        assert g.n == n and is_cubic(g)
        assert oracle_bridgeless(g) and len(components(g)) == 1

    def test_deterministic(self):
        assert gen.random_bridgeless_cubic(10, 7).edges == gen.random_bridgeless_cubic(10, 7).edges

    def test_four_vertices(self):
        # K4 or a 4-cycle with two opposite edges doubled
        doubled = Multigraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)])
        for s in range(30):
            g = gen.random_bridgeless_cubic(4, s)
            assert isomorphic(g, gen.k4()) or isomorphic(g, doubled)

    def test_odd_rejected(self):
        with pytest.raises(PreconditionError):
            gen.random_bridgeless_cubic(5, 0)

    def test_join_makes_a_two_cut(self):
        j = gen.join_by_2cut(gen.petersen(), 0, gen.k4(), 1)
        assert is_cubic(j) and oracle_bridgeless(j)
        G = nx.MultiGraph(to_nx(j))
        G.remove_edges_from([j.edges[0], j.edges[15 + 1]])
        assert nx.number_connected_components(G) == 2
        assert gen.is_connected_bridgeless_cubic(j)
