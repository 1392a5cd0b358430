"""Shared corpora and independent oracles for the test suite.

The oracles here deliberately avoid normalcol's own algorithms: they work
from raw edge lists, networkx, or plain brute force.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import networkx as nx

from normalcol import generators as gen
from normalcol.graph import Multigraph

# criterion number -> (passed, detail); filled by test_acceptance, printed by conftest
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


# ---------------------------------------------------------------------------
# oracles


def to_nx(g: Multigraph) -> nx.MultiGraph:
    G = nx.MultiGraph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def isomorphic(a: Multigraph, b: Multigraph) -> bool:
    return nx.is_isomorphic(to_nx(a), to_nx(b))


def oracle_union_size(edges: list[tuple[int, int]], colors, e: int) -> int:
    """|S(u) ∪ S(v)| for edge e straight from the edge list."""
    u, v = edges[e]
    seen = set()
    for i, (a, b) in enumerate(edges):
        if u in (a, b) or v in (a, b):
            seen.add(colors[i])
    return len(seen)


def oracle_proper(edges, colors) -> bool:
    for i, j in itertools.combinations(range(len(edges)), 2):
        if colors[i] == colors[j] and set(edges[i]) & set(edges[j]):
            return False
    return True


def oracle_all_normal(edges, colors) -> bool:
    return oracle_proper(edges, colors) and all(
        oracle_union_size(edges, colors, e) in (3, 5) for e in range(len(edges)))


def oracle_bridgeless(g: Multigraph) -> bool:
    """No edge whose removal separates its ends (nx.edge_connectivity is unreliable on multigraphs)."""
    G = to_nx(g)
    for u, v, key in list(G.edges(keys=True)):
        G.remove_edge(u, v, key)
        cut = not nx.has_path(G, u, v)
        G.add_edge(u, v, key)
        if cut:
            return False
    return True


def brute_proper_colorings(g: Multigraph, k: int):
    """Every proper k-edge-coloring, edge by edge, no symmetry breaking."""
    inc = [[] for _ in range(g.n)]
    for i, (a, b) in enumerate(g.edges):
        inc[a].append(i)
        inc[b].append(i)
    col = [0] * g.m

    def rec(i):
        if i == g.m:
            yield tuple(col)
            return
        a, b = g.edges[i]
        used = {col[e] for e in inc[a] + inc[b] if e < i}
        for c in range(1, k + 1):
            if c not in used:
                col[i] = c
                yield from rec(i + 1)
        col[i] = 0

    yield from rec(0)


def flow_polynomial(g: Multigraph, q: int) -> int:
    """Nowhere-zero Z_q-flow count by inclusion-exclusion over edge subsets."""
    total = 0
    for mask in range(1 << g.m):
        sub = [g.edges[i] for i in range(g.m) if mask >> i & 1]
        G = nx.MultiGraph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(sub)
        rank_gap = len(sub) - g.n + nx.number_connected_components(G)
        total += (-1) ** (g.m - len(sub)) * q ** rank_gap
    return total


def random_proper_coloring(g: Multigraph, k: int, rng: random.Random) -> list[int]:
    """Random greedy proper coloring; k >= 5 never gets stuck on a cubic graph."""
    order = list(range(g.m))
    rng.shuffle(order)
    col = [0] * g.m
    for e in order:
        a, b = g.edges[e]
        used = {col[f] for f in range(g.m) if f != e and set(g.edges[f]) & {a, b}}
        col[e] = rng.choice([c for c in range(1, k + 1) if c not in used])
    return col


# ---------------------------------------------------------------------------
# corpora


def _dedupe(graphs: list[tuple[str, Multigraph]]) -> list[tuple[str, Multigraph]]:
    kept: list[tuple[str, Multigraph]] = []
    for name, g in graphs:
        if not any(h.n == g.n and h.m == g.m and isomorphic(g, h) for _, h in kept):
            kept.append((name, g))
    return kept


@lru_cache(maxsize=None)
def claw_free_bases() -> tuple[tuple[str, Multigraph], ...]:
    """Connected bridgeless cubic H on 4 to 10 vertices, plus theta."""
    fixed = [("theta", gen.theta()), ("k4", gen.k4()), ("prism3", gen.prism(3)), ("k33", gen.k33()),
             ("prism4", gen.prism(4)), ("petersen", gen.petersen()), ("prism5", gen.prism(5))]
    rand = [(f"random{n}-{s}", gen.random_bridgeless_cubic(n, s)) for n in (4, 6, 8, 10) for s in range(12)]
    return tuple(_dedupe(fixed + rand))


@lru_cache(maxsize=None)
def bound79_corpus() -> tuple[tuple[str, Multigraph], ...]:
    p = gen.petersen()
    out = [
        ("theta", gen.theta()), ("k4", gen.k4()), ("k33", gen.k33()), ("petersen", p),
        ("prism3", gen.prism(3)), ("prism6", gen.prism(6)), ("mobius-kantor", gen.mobius_kantor()),
        ("gp7-2", gen.generalized_petersen(7, 2)), ("gp8-3", gen.generalized_petersen(8, 3)),
        ("treelike3", gen.treelike_snark(gen.halin_spec(gen.caterpillar_tree(3))).graph),
        ("cycleperm9", gen.cycle_permutation(gen.random_permutation_spec(9, random.Random(3))).graph),
        ("expanded-k4", gen.triangle_expand(gen.k4()).graph),
        ("expanded-petersen", gen.triangle_expand(p).graph),
        ("diamonds4", gen.ring_of_diamonds(4)),
        # 2-cut assemblies
        ("join-p-p", gen.join_by_2cut(p, 0, p, 7)),
        ("join-p-k4", gen.join_by_2cut(p, 3, gen.k4(), 0)),
        ("join-theta-p", gen.join_by_2cut(gen.theta(), 0, p, 5)),
        ("join-p-p-k4", gen.join_by_2cut(gen.join_by_2cut(p, 0, p, 0), 20, gen.k4(), 2)),
        ("join-k33-k33-k33", gen.join_by_2cut(gen.join_by_2cut(gen.k33(), 1, gen.k33(), 4), 2, gen.k33(), 0)),
        ("digon-petersen", gen.insert_digon(p, 4)),
        ("digon-digon-petersen", gen.insert_digon(gen.insert_digon(p, 4), 9)),
        ("diamond-string-petersen", gen.replace_edge_with_diamond_string(p, 0, 2)),
    ]
    out += [(f"random{n}-{s}", gen.random_bridgeless_cubic(n, s)) for n in (6, 10, 14, 20, 28, 40) for s in range(2)]
    return tuple(out)
