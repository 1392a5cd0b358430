"""Normal 6-edge-colorings of cycle permutation graphs C(n, p)."""

from __future__ import annotations

from itertools import combinations

from ..coloring import EdgeColoring
from ..exact import exists_normal_k
from ..flows import extend_matching_flow, flow_to_coloring, fmt
from ..generators import CyclePermGraph, CyclePermSpec, cycle_permutation
from ..graph import complementary_two_factor
from .certificate import Certificate, GuaranteeViolation, certify


def find_independent_chord_pair(spec: CyclePermSpec | CyclePermGraph):
    """First pair of matching edges (f, g) whose ends are pairwise non-adjacent.

    With f = u_i v_j and g = u_h v_k this asks that neither u_i u_h nor
    v_j v_k is an edge. Pairs are scanned in lexicographic order of the
    matching edge indices; ``None`` if no pair qualifies.
    """
    cp = spec if isinstance(spec, CyclePermGraph) else cycle_permutation(spec)
    g = cp.graph
    for f, h in combinations(sorted(cp.matching), 2):
        (vj, ui), (vk, uh) = g.edges[f], g.edges[h]
        if not g.adjacent(ui, uh) and not g.adjacent(vj, vk):
            return f, h
    return None


def color_cycle_permutation(spec: CyclePermSpec) -> Certificate:
    cp = cycle_permutation(spec)
    g, n = cp.graph, spec.n
    if n % 2 == 0:
        col = [0] * g.m
        for i in range(n):
            col[cp.outer_edge(i)] = col[cp.inner_edge(i)] = 1 + i % 2
        for e in cp.matching:
            col[e] = 3
        return certify(g, EdgeColoring(col, 3), "cycle-perm", {"route": "even"}, max_colors=3)
    if n <= 5:
        for k in range(3, 6):
            c = exists_normal_k(g, k)
            if c is not None:
                return certify(g, c, "cycle-perm", {"route": "exact", "k": k}, max_colors=5)
        raise GuaranteeViolation("no normal coloring with at most 5 colors for n <= 5")

    pair = find_independent_chord_pair(cp)
    if pair is None:
        raise GuaranteeViolation("no independent chord pair although n > 5")
    f, h = pair
    theta = {e: 0b11 for e in cp.matching}
    theta[f], theta[h] = 0b01, 0b10
    tf = complementary_two_factor(g, cp.matching)
    starts = {}
    for ci, cyc in enumerate(tf.cycles):
        for e in (cp.outer_edge(0), cp.inner_edge(0)):
            if e in cyc.edges:
                starts[ci] = e
    phi = extend_matching_flow(g, cp.matching, theta, seed=0b100, start_edges=starts)
    seven = flow_to_coloring(g, phi)
    col = list(seven.colors)
    col[h] = col[f]
    trace = {"route": "flow", "f": f, "g": h, "flow": [fmt(x) for x in phi.values]}
    cert = certify(g, EdgeColoring(col, 7), "cycle-perm", trace)
    if 0b010 in cert.coloring.used:
        raise GuaranteeViolation("color class 010 should be empty after merging")
    return cert
