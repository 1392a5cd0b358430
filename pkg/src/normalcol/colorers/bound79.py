"""6-edge-colorings of bridgeless cubic graphs with at least 7/9 of the edges normal."""

from __future__ import annotations

from itertools import permutations

from ..coloring import EdgeColoring, color_set, report
from ..flows import extend_matching_flow, quotient_flow
from ..graph import (
    Multigraph,
    PreconditionError,
    check_cubic,
    components,
    enumerate_small_cuts,
    is_bridgeless,
    matching_meeting_3cuts,
)
from .certificate import Certificate, GuaranteeViolation, ceil_fraction, certify


def _side_graph(g: Multigraph, side: list[int], ends: tuple[int, int]):
    """Induced subgraph on ``side`` plus the edge joining the two cut ends; returns (G_i, edge map)."""
    sub, vmap, emap = g.induced(side)
    pos = {old: new for new, old in enumerate(vmap)}
    edges = list(sub.edges) + [(pos[ends[0]], pos[ends[1]])]
    return Multigraph(sub.n, edges), emap


def _splice_renaming(f1, g1, f2, g2) -> dict[int, int]:
    """Renaming of G2's colors that matches h2 to h1 and the color pairs at the e1 ends.

    Among the twelve such renamings the first (lexicographic) one that makes
    e2 normal is used; it exists whenever h1 or h2 is normal.
    """
    h = f1[-1]
    x1, x2 = g1.edges[-1]
    y1, y2 = g2.edges[-1]
    p = sorted(color_set(g1, f1, x1) - {h})
    p2 = color_set(g1, f1, x2) - {h}
    r = sorted(color_set(g2, f2, y1) - {f2[-1]})
    r2 = color_set(g2, f2, y2) - {f2[-1]}
    src = [f2[-1], *r]
    rest_src = [c for c in range(1, 7) if c not in src]
    rest_dst = [c for c in range(1, 7) if c not in {h, *p}]
    fallback = None
    for pq in (p, p[::-1]):
        for tail in permutations(rest_dst):
            perm = dict(zip(src + rest_src, [h, *pq, *tail]))
            fallback = fallback or perm
            union = {h} | p2 | {perm[c] for c in r2}
            if len(union) in (3, 5):
                return perm
    return fallback


def _b79(g: Multigraph, steps: list) -> list[int]:
    comps = components(g)
    if len(comps) > 1:
        col = [0] * g.m
        for comp in comps:
            sub, _, emap = g.induced(comp)
            for i, c in enumerate(_b79(sub, steps)):
                col[emap[i]] = c
        return col

    cuts = enumerate_small_cuts(g, 2) if g.n > 2 else []
    if cuts:
        cut = cuts[0]
        e1, e2 = cut.edges
        side = sorted(cut.side)
        other = sorted(set(range(g.n)) - cut.side)
        (x1,) = [x for x in g.edges[e1] if x in cut.side]
        (x2,) = [x for x in g.edges[e2] if x in cut.side]
        y1, y2 = g.other(e1, x1), g.other(e2, x2)
        g1, map1 = _side_graph(g, side, (x1, x2))
        g2, map2 = _side_graph(g, other, (y1, y2))
        f1 = _b79(g1, steps)
        f2 = _b79(g2, steps)
        perm = _splice_renaming(f1, g1, f2, g2)
        f2 = [perm[c] for c in f2]
        col = [0] * g.m
        for i, c in enumerate(f1[:-1]):
            col[map1[i]] = c
        for i, c in enumerate(f2[:-1]):
            col[map2[i]] = c
        col[e1] = col[e2] = f1[-1]
        n1, n2 = report(g1, f1).normal_count, report(g2, f2).normal_count
        got = report(g, col).normal_count
        if got < n1 + n2:
            raise GuaranteeViolation(f"2-cut splice lost normal edges: {got} < {n1} + {n2}")
        steps.append({"kind": "2-cut", "cut": [e1, e2], "sizes": [g1.m, g2.m], "normal": [n1, n2, got]})
        return col

    matching = matching_meeting_3cuts(g)
    theta = quotient_flow(g, matching)
    if theta is None:
        raise GuaranteeViolation("contracted graph has no nowhere-zero Z_2^2 flow")
    mu = extend_matching_flow(g, matching, theta)
    sizes = {x: sum(1 for h in matching if theta[h] == x) for x in (1, 2, 3)}
    beta = min((1, 2, 3), key=lambda x: (sizes[x], x))
    rest = [x for x in (1, 2, 3) if x != beta]
    mate = {}
    for h in matching:
        for v in g.edges[h]:
            mate[v] = h

    def count(x: int) -> int:
        n = 0
        for e, (u, v) in enumerate(g.edges):
            if e in matching:
                continue
            pair = {theta[mate[u]], theta[mate[v]]}
            if pair == {beta, x}:
                n += 1
        return n

    n_rest = {x: count(x) for x in rest}
    alpha = min(rest, key=lambda x: (n_rest[x], x))
    # matching edges carry (0, theta), i.e. the integer theta itself
    col = [alpha if e in matching and theta[e] == beta else mu[e] for e in range(g.m)]
    col = list(EdgeColoring(col, 7).compact().colors)
    steps.append({"kind": "flow", "m": g.m, "beta": beta, "alpha": alpha,
                  "n_alpha": n_rest[alpha], "n_gamma": n_rest[[x for x in rest if x != alpha][0]]})
    return col


def color_bound_79(g: Multigraph) -> Certificate:
    check_cubic(g)
    if not is_bridgeless(g):
        raise PreconditionError("is_bridgeless failed: graph has a bridge")
    steps: list = []
    col = _b79(g, steps)
    need = ceil_fraction(7, g.m, 9)
    return certify(g, EdgeColoring(col, 6), "bound79", {"steps": steps, "required": need},
                   all_normal=False, min_normal=need)
