"""Normal 6-edge-colorings of claw-free bridgeless cubic graphs.

The recursion removes parallel pairs and diamonds one at a time, bottoms out
at K4 / rings of diamonds (3-edge-colorable) or at a triangle expansion, and
splices colors back on the way up.
"""

from __future__ import annotations

from ..coloring import EdgeColoring, color_set
from ..exact import three_edge_coloring
from ..generators import Expansion, triangle_expand
from ..graph import (
    Multigraph,
    PreconditionError,
    check_cubic,
    complementary_two_factor,
    components,
    contract,
    find_triangles_and_diamonds,
    is_bridgeless,
    is_claw_free,
    is_perfect_matching,
    perfect_matchings,
)
from .certificate import Certificate, GuaranteeViolation, certify

EVEN_PATTERN = (2, 5, 2, 3, 6, 3)
ODD_PREFIX = (2, 5, 3, 2, 4, 3, 2, 6, 3)


def _opposite(exp: Expansion, x: int, e: int) -> int:
    """The triangle edge of ``x`` not touching the corner that carries ``e``."""
    p = exp.corner[(x, e)]
    for t in exp.triangle_edges[x]:
        if p not in exp.graph.edges[t]:
            return t
    raise AssertionError("triangle has no edge opposite its corner")


def color_triangle_expansion(h: Multigraph, matching, expansion: Expansion | None = None) -> Certificate:
    """Normal 6-coloring of the triangle expansion of ``h`` from a perfect matching F of ``h``.

    F gets color 1 and each cycle of the complementary 2-factor of h lifts to a
    cycle of length 3L in the expansion, colored with the repeating patterns
    above so that triangle edges only see colors 2 and 3.
    """
    check_cubic(h)
    matching = frozenset(matching)
    if not is_perfect_matching(h, matching):
        raise PreconditionError("F is not a perfect matching of h")
    exp = expansion if expansion is not None else triangle_expand(h)
    g = exp.graph
    col = [0] * g.m
    f_edges = {exp.edge_map[e] for e in matching}
    for e in f_edges:
        col[e] = 1
    f_prime: dict[int, int] = {}
    for e in matching:
        for x in h.edges[e]:
            f_prime[_opposite(exp, x, e)] = x
    h_image = set(exp.edge_map.values())
    tri = {t for ts in exp.triangle_edges for t in ts}

    lifted = complementary_two_factor(g, f_edges | set(f_prime))
    trace = {"cycles": []}
    for cyc in lifted.cycles:
        length = len(cyc)
        if length % 3:
            raise AssertionError("lifted cycle length is not a multiple of 3")
        L = length // 3
        es = list(cyc.edges)
        i0 = min(range(length), key=lambda i: es[i] if es[i] in tri else g.m + es[i])
        if es[(i0 + 1) % length] in h_image:
            order = [es[(i0 + j) % length] for j in range(length)]
        else:
            order = [es[(i0 - j) % length] for j in range(length)]
        if L % 2 == 0:
            pattern = EVEN_PATTERN * (L // 2)
        else:
            pattern = ODD_PREFIX + EVEN_PATTERN * ((L - 3) // 2)
        for e, c in zip(order, pattern):
            col[e] = c
            if (e in tri) != (c in (2, 3)):
                raise GuaranteeViolation("triangle-expansion phase is off: triangle edge outside {2,3}")
        trace["cycles"].append({"length": length, "parity": "even" if L % 2 == 0 else "odd", "start": order[0]})
        parity_even = L % 2 == 0
        for t in (t for t in f_prime if set(g.edges[t]) <= set(cyc.vertices)):
            if parity_even:
                col[t] = 4
            else:
                seen = {col[x] for x in g.edge_neighbors(t)}
                options = [c for c in (4, 5, 6) if c not in seen]
                if len(options) != 1:
                    raise GuaranteeViolation(f"F' edge {t} has {len(options)} admissible colors, expected one")
                col[t] = options[0]
    if 0 in col:
        raise AssertionError("triangle-expansion coloring left an edge uncolored")
    return certify(g, EdgeColoring(col, 6), "triangle-expansion", trace)


def expansion_from_triangles(g: Multigraph, triangles) -> Expansion:
    """Recover ``g`` as the triangle expansion of the graph obtained by contracting ``triangles``."""
    h, emap, vmap = contract(g, triangles)
    check_cubic(h)
    edge_map = {new: old for old, new in emap.items()}
    by_vertex: list[list[int]] = [[] for _ in range(h.n)]
    for v in range(g.n):
        by_vertex[vmap[v]].append(v)
    tris = tuple(tuple(vs) for vs in by_vertex)
    if any(len(t) != 3 for t in tris):
        raise PreconditionError("triangles do not cover every vertex exactly once")
    corner = {}
    for e, (a, b) in enumerate(h.edges):
        u, v = g.edges[edge_map[e]]
        corner[(vmap[u], e)] = u
        corner[(vmap[v], e)] = v
    tri_edges = tuple(
        tuple(i for i, (u, v) in enumerate(g.edges) if vmap[u] == x and vmap[v] == x) for x in range(h.n)
    )
    return Expansion(g, h, tris, corner, edge_map, tri_edges)


# ---------------------------------------------------------------------------
# the reduction recursion


def _remove(g: Multigraph, drop: set[int], new_edge: tuple[int, int]):
    """Delete vertices ``drop`` and add one edge; returns (G', edge map G'->G, vertex map G->G')."""
    keep = [v for v in range(g.n) if v not in drop]
    pos = {v: i for i, v in enumerate(keep)}
    edges, emap = [], []
    for i, (u, v) in enumerate(g.edges):
        if u in drop or v in drop:
            continue
        edges.append((pos[u], pos[v]))
        emap.append(i)
    a, b = new_edge
    edges.append((pos[a], pos[b]))
    return Multigraph(len(keep), edges), emap, pos


def _third(g: Multigraph, v: int, inside: set[int]) -> int:
    outs = [e for e in g.incident(v) if g.other(e, v) not in inside]
    if len(outs) != 1:
        raise PreconditionError("reduction vertex does not have exactly one outside edge")
    return outs[0]


def _parallel_pair(g: Multigraph):
    for u in range(g.n):
        for v in sorted(set(g.neighbors(u))):
            if v > u and g.multiplicity(u, v) == 2:
                return u, v
    return None


def _is_ring_of_diamonds(g: Multigraph, diamonds) -> bool:
    covered = {x for d in diamonds for x in d}
    return len(diamonds) >= 2 and len(covered) == g.n


def _three_color(g: Multigraph) -> list[int]:
    c = three_edge_coloring(g)
    if c is None:
        raise GuaranteeViolation("base case is not 3-edge-colorable")
    return list(c.colors)


def _color(g: Multigraph, steps: list[str]) -> list[int]:
    comps = components(g)
    if len(comps) > 1:
        col = [0] * g.m
        for comp in comps:
            sub, _, emap = g.induced(comp)
            for i, c in enumerate(_color(sub, steps)):
                col[emap[i]] = c
        return col
    if g.n == 2:
        steps.append("theta")
        return [1, 2, 3]

    pair = _parallel_pair(g)
    if pair is not None:
        u, v = pair
        eu, ev = _third(g, u, {v}), _third(g, v, {u})
        u2, v2 = g.other(eu, u), g.other(ev, v)
        if u2 == v2:
            raise PreconditionError("graph has a bridge next to a parallel pair")
        sub, emap, _ = _remove(g, {u, v}, (u2, v2))
        f = _color(sub, steps)
        steps.append("parallel")
        col = [0] * g.m
        for i, c in enumerate(f[:-1]):
            col[emap[i]] = c
        x = f[-1]
        rest = sorted(color_set(sub, f, sub.edges[-1][0]) - {x})
        col[eu] = col[ev] = x
        for e, c in zip(g.edges_between(u, v), rest):
            col[e] = c
        return col

    triangles, diamonds = find_triangles_and_diamonds(g)
    if g.n == 4 or _is_ring_of_diamonds(g, diamonds):
        steps.append("k4" if g.n == 4 else "ring")
        return _three_color(g)
    if diamonds:
        a, c1, c2, b = diamonds[0]
        inside = {a, c1, c2, b}
        ea, eb = _third(g, a, inside), _third(g, b, inside)
        a2, b2 = g.other(ea, a), g.other(eb, b)
        if a2 == b2:
            raise PreconditionError("graph has a bridge next to a diamond")
        sub, emap, pos = _remove(g, inside, (a2, b2))
        f = _color(sub, steps)
        col = [0] * g.m
        for i, c in enumerate(f[:-1]):
            col[emap[i]] = c
        x = f[-1]
        sa = sorted(color_set(sub, f, pos[a2]) - {x})
        sb = sorted(color_set(sub, f, pos[b2]) - {x})
        (ac1,), (ac2,) = g.edges_between(a, c1), g.edges_between(a, c2)
        (c1b,), (c2b,) = g.edges_between(c1, b), g.edges_between(c2, b)
        (mid,) = g.edges_between(c1, c2)
        col[ea] = col[eb] = x
        if sa == sb:
            steps.append("diamond-poor")
            p, q = sa
            col[ac1], col[c1b], col[c2b], col[ac2] = p, q, p, q
            col[mid] = x
        elif not set(sa) & set(sb):
            steps.append("diamond-rich")
            col[ac1], col[ac2] = sa
            col[c1b], col[c2b] = sb
            col[mid] = min(set(range(1, 7)) - {x, *sa, *sb})
        else:
            raise GuaranteeViolation("reduced edge is neither poor nor rich")
        return col

    if not triangles:
        raise PreconditionError("simple claw-free graph without triangles")
    exp = expansion_from_triangles(g, triangles)
    pm = next(perfect_matchings(exp.base), None)
    if pm is None:
        raise PreconditionError("contracted graph has no perfect matching")
    steps.append("expansion")
    return list(color_triangle_expansion(exp.base, pm, exp).coloring.colors)


def color_claw_free(g: Multigraph) -> Certificate:
    check_cubic(g)
    if not is_bridgeless(g):
        raise PreconditionError("is_bridgeless failed: graph has a bridge")
    if not is_claw_free(g):
        raise PreconditionError("is_claw_free failed: graph contains an induced claw")
    steps: list[str] = []
    col = _color(g, steps)
    return certify(g, EdgeColoring.from_list(col, 6), "claw-free", {"steps": steps})
