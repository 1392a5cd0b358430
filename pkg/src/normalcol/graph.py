"""Immutable multigraphs and the structural primitives used by every colorer.

Vertices are the integers ``0..n-1``. Edges are stored as an ordered tuple of
endpoint pairs; an edge's index in that tuple is its identity, so parallel
edges are distinct objects that merely share endpoints. Loops are rejected.

Iteration order is always "lowest index first" so every algorithm built on
top of this module is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Matching = frozenset  # a frozenset of edge indices


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PreconditionError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise PreconditionError(f"edge {i} is a loop at vertex {u}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def incident(self, v: int) -> tuple[int, ...]:
        return self._incidence[v]

    def degree(self, v: int) -> int:
        return len(self._incidence[v])

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} is not an end of edge {e}")

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of ``v`` with multiplicity, in incidence order."""
        return [self.other(e, v) for e in self._incidence[v]]

    @cached_property
    def _simple_adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.neighbors(v)) for v in range(self.n))

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._simple_adjacency[u]

    def multiplicity(self, u: int, v: int) -> int:
        return sum(1 for e in self._incidence[u] if self.other(e, u) == v)

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self._incidence[u] if self.other(e, u) == v]

    def edge_neighbors(self, e: int) -> list[int]:
        """Edges sharing at least one end with ``e`` (``e`` itself excluded)."""
        u, v = self.edges[e]
        seen = dict.fromkeys(x for x in self._incidence[u] + self._incidence[v] if x != e)
        return list(seen)

    def is_simple(self) -> bool:
        return len({tuple(sorted(p)) for p in self.edges}) == self.m

    def degrees(self) -> list[int]:
        return [len(x) for x in self._incidence]

    def without_edges(self, removed: Iterable[int]) -> tuple[Multigraph, list[int]]:
        """Delete edges; return the new graph and new-index -> old-index map."""
        removed = set(removed)
        keep = [i for i in range(self.m) if i not in removed]
        return Multigraph(self.n, [self.edges[i] for i in keep]), keep

    def induced(self, vertices: Sequence[int]) -> tuple[Multigraph, list[int], list[int]]:
        """Induced subgraph on ``vertices`` (relabelled in the given order).

        Returns ``(graph, vertex_map, edge_map)`` where the maps send new
        indices to old ones.
        """
        pos = {v: i for i, v in enumerate(vertices)}
        keep = [i for i, (u, v) in enumerate(self.edges) if u in pos and v in pos]
        sub = Multigraph(len(vertices), [(pos[self.edges[i][0]], pos[self.edges[i][1]]) for i in keep])
        return sub, list(vertices), keep


def check_regular(g: Multigraph, d: int) -> Multigraph:
    """Return ``g`` unchanged if every vertex has degree ``d``; raise otherwise."""
    for v in range(g.n):
        if g.degree(v) != d:
            raise PreconditionError(f"vertex {v} has degree {g.degree(v)}, expected {d}")
    return g


def check_cubic(g: Multigraph) -> Multigraph:
    return check_regular(g, 3)


def check_four_regular(g: Multigraph) -> Multigraph:
    return check_regular(g, 4)


def is_cubic(g: Multigraph) -> bool:
    return all(g.degree(v) == 3 for v in range(g.n))


def incident_edges(g: Multigraph, v: int) -> list[int]:
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} out of range")
    return list(g.incident(v))


# ---------------------------------------------------------------------------
# connectivity


def components(g: Multigraph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components (sorted vertex lists) of ``g`` minus ``removed`` edges."""
    removed = set(removed)
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for e in g.incident(x):
                if e in removed:
                    continue
                y = g.other(e, x)
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Multigraph, removed: Iterable[int] = ()) -> bool:
    return g.n <= 1 or len(components(g, removed)) == 1


def bridges(g: Multigraph, removed: Iterable[int] = ()) -> list[int]:
    """Indices of all bridges of ``g`` minus ``removed``, ascending.

    Iterative lowpoint DFS keyed on edge identity, so a parallel edge is never
    mistaken for the tree edge it duplicates.
    """
    removed = set(removed)
    disc = [-1] * g.n
    low = [0] * g.n
    found = []
    t = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        # frames: (vertex, edge used to enter, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            inc = g.incident(v)
            if i < len(inc):
                stack[-1] = (v, pe, i + 1)
                e = inc[i]
                if e == pe or e in removed:
                    continue
                w = g.other(e, v)
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        found.append(pe)
    return sorted(found)


def is_bridgeless(g: Multigraph) -> bool:
    """True iff no edge disconnects its component (disconnected graphs are checked per component)."""
    return not bridges(g)


@dataclass(frozen=True)
class EdgeCut:
    edges: tuple[int, ...]
    side: frozenset[int]


def _require_connected(g: Multigraph) -> None:
    if not is_connected(g):
        raise PreconditionError("graph is not connected")


def enumerate_small_cuts(g: Multigraph, k: int) -> list[EdgeCut]:
    """All minimal edge cuts of size exactly ``k`` (``k`` in {1, 2, 3}).

    A cut is reported when deleting its edges disconnects ``g`` and no proper
    subset does. Cuts are listed by ascending edge tuple. ``side`` is the
    component of ``g - cut`` containing the first end of the cut's first edge.

    In a bridgeless cubic graph the two edges of a 2-cut never share a
    vertex (the third edge there would be a bridge), so callers splitting
    along a 2-cut get four distinct ends.
    """
    if k not in (1, 2, 3):
        raise PreconditionError("only cuts of size 1, 2 or 3 are supported")
    _require_connected(g)
    single = set(bridges(g))
    if k == 1:
        return [_make_cut(g, (e,)) for e in sorted(single)]

    pair_cuts = set()
    for a, b in combinations(range(g.m), 2):
        if a in single or b in single:
            continue
        if not is_connected(g, (a, b)):
            pair_cuts.add((a, b))
    if k == 2:
        return [_make_cut(g, c) for c in sorted(pair_cuts)]

    triples = []
    for a, b in combinations(range(g.m), 2):
        if a in single or b in single or (a, b) in pair_cuts:
            continue
        # a third edge completing a cut is exactly a bridge of g - {a, b}
        for c in bridges(g, (a, b)):
            if c <= b or c in single:
                continue
            if (a, c) in pair_cuts or (b, c) in pair_cuts:
                continue
            triples.append((a, b, c))
    return [_make_cut(g, t) for t in sorted(triples)]


def _make_cut(g: Multigraph, cut: tuple[int, ...]) -> EdgeCut:
    start = g.edges[cut[0]][0]
    for comp in components(g, cut):
        if start in comp:
            return EdgeCut(cut, frozenset(comp))
    raise AssertionError("unreachable")


def cut_edges(g: Multigraph, side: Iterable[int]) -> list[int]:
    """Edges with exactly one end in ``side``."""
    side = set(side)
    return [i for i, (u, v) in enumerate(g.edges) if (u in side) != (v in side)]


# ---------------------------------------------------------------------------
# matchings and 2-factors


def is_perfect_matching(g: Multigraph, m: Iterable[int]) -> bool:
    covered = [0] * g.n
    for e in m:
        for x in g.edges[e]:
            covered[x] += 1
    return all(c == 1 for c in covered)


def perfect_matchings(g: Multigraph, cuts: Sequence[EdgeCut] = ()) -> Iterator[Matching]:
    """Yield every perfect matching of ``g`` exactly once.

    Backtracks on the lowest-index uncovered vertex. If ``cuts`` is given,
    only matchings meeting each cut in exactly one edge are produced; the
    constraint is used for pruning rather than as a post-filter.
    """
    if g.n % 2:
        return
    cut_of: list[list[int]] = [[] for _ in range(g.m)]
    for ci, cut in enumerate(cuts):
        for e in cut.edges:
            cut_of[e].append(ci)
    hits = [0] * len(cuts)
    covered = [False] * g.n
    chosen: list[int] = []

    def cut_ok() -> bool:
        # every cut must still be hittable exactly once
        for ci, cut in enumerate(cuts):
            if hits[ci] > 1:
                return False
            if hits[ci] == 0 and all(
                covered[g.edges[e][0]] or covered[g.edges[e][1]] for e in cut.edges
            ):
                return False
        return True

    def rec(start: int) -> Iterator[Matching]:
        v = start
        while v < g.n and covered[v]:
            v += 1
        if v == g.n:
            yield frozenset(chosen)
            return
        for e in g.incident(v):
            w = g.other(e, v)
            if covered[w]:
                continue
            covered[v] = covered[w] = True
            chosen.append(e)
            for ci in cut_of[e]:
                hits[ci] += 1
            if not cuts or cut_ok():
                yield from rec(v + 1)
            for ci in cut_of[e]:
                hits[ci] -= 1
            chosen.pop()
            covered[v] = covered[w] = False

    yield from rec(0)


def matching_meeting_3cuts(g: Multigraph) -> Matching:
    """A perfect matching meeting every minimal 3-edge-cut in exactly one edge.

    Existence is guaranteed for bridgeless cubic graphs.
    """
    check_cubic(g)
    if not is_bridgeless(g):
        raise PreconditionError("graph has a bridge")
    out = frozenset()
    for comp in components(g):
        sub, vmap, emap = g.induced(comp)
        cuts = enumerate_small_cuts(sub, 3)
        pm = next(perfect_matchings(sub, cuts), None)
        if pm is None:
            raise AssertionError("no perfect matching meets all 3-cuts; input is not bridgeless cubic")
        out |= {emap[e] for e in pm}
    return frozenset(out)


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]  # v_0, ..., v_{L-1}
    edges: tuple[int, ...]  # edges[i] joins vertices[i] and vertices[i+1 mod L]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TwoFactor:
    cycles: tuple[Cycle, ...]

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(e for c in self.cycles for e in c.edges)


def decompose_two_regular(g: Multigraph, edge_set: Iterable[int]) -> TwoFactor:
    """Split a spanning 2-regular edge set into cycles in traversal order.

    Each cycle starts at its lowest vertex and leaves along its lowest edge.
    """
    edge_set = set(edge_set)
    inc: list[list[int]] = [[] for _ in range(g.n)]
    for e in sorted(edge_set):
        for x in g.edges[e]:
            inc[x].append(e)
    if any(len(x) != 2 for x in inc):
        raise PreconditionError("edge set is not 2-regular on every vertex")
    used: set[int] = set()
    cycles = []
    for s in range(g.n):
        if inc[s][0] in used:
            continue
        verts, es = [s], []
        v, e = s, inc[s][0]
        while True:
            used.add(e)
            es.append(e)
            v = g.other(e, v)
            if v == s:
                break
            verts.append(v)
            e = inc[v][0] if inc[v][0] != e else inc[v][1]
        cycles.append(Cycle(tuple(verts), tuple(es)))
    return TwoFactor(tuple(cycles))


def complementary_two_factor(g: Multigraph, m: Iterable[int]) -> TwoFactor:
    m = frozenset(m)
    if not is_perfect_matching(g, m):
        raise PreconditionError("matching is not perfect")
    return decompose_two_regular(g, set(range(g.m)) - m)


# ---------------------------------------------------------------------------
# local structure


def is_claw_free(g: Multigraph) -> bool:
    """True iff the underlying simple graph has no induced K_{1,3}."""
    for v in range(g.n):
        nbrs = sorted(set(g.neighbors(v)))
        for a, b, c in combinations(nbrs, 3):
            if not (g.adjacent(a, b) or g.adjacent(a, c) or g.adjacent(b, c)):
                return False
    return True


def find_triangles_and_diamonds(g: Multigraph) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int, int]]]:
    """Triangles whose three edges have multiplicity one, and induced diamonds.

    A diamond is reported as ``(u, c1, c2, v)``: ``c1 c2`` is the central edge
    and ``u``, ``v`` are the two vertices of degree two inside the diamond.
    """
    def single(a: int, b: int) -> bool:
        return g.multiplicity(a, b) == 1

    triangles = []
    for a in range(g.n):
        nb = sorted(x for x in set(g.neighbors(a)) if x > a)
        for b, c in combinations(nb, 2):
            if g.adjacent(b, c) and single(a, b) and single(a, c) and single(b, c):
                triangles.append((a, b, c))

    diamonds = []
    for c1 in range(g.n):
        for c2 in sorted(set(g.neighbors(c1))):
            if c2 <= c1:
                continue
            common = sorted((set(g.neighbors(c1)) & set(g.neighbors(c2))) - {c1, c2})
            for u, v in combinations(common, 2):
                if g.adjacent(u, v):
                    continue  # that is a K4, not an induced K4 - e
                quad = (u, c1, c2, v)
                pairs = [(u, c1), (u, c2), (v, c1), (v, c2), (c1, c2)]
                if all(single(a, b) for a, b in pairs):
                    diamonds.append(quad)
    return triangles, diamonds


def contract(g: Multigraph, parts: Sequence[Iterable[int]]) -> tuple[Multigraph, dict[int, int], list[int]]:
    """Contract each part to a single vertex.

    Vertices outside every part stay as singletons. Edges between different
    parts survive with multiplicity; edges inside a part are dropped. A part
    that contains a pair of vertices joined by two or more edges is rejected,
    because one of those edges would have to survive as a loop.

    Returns ``(graph, edge_map, vertex_map)``: ``edge_map`` sends each
    surviving old edge index to its new index, ``vertex_map[v]`` is the new
    vertex of old vertex ``v``. New vertices are numbered by the order of
    their lowest old vertex.
    """
    owner: dict[int, int] = {}
    part_list = [sorted(set(p)) for p in parts]
    for pi, p in enumerate(part_list):
        if not p:
            raise PreconditionError("empty part")
        for v in p:
            if v in owner:
                raise PreconditionError(f"vertex {v} occurs in two parts")
            owner[v] = pi
    for p in part_list:
        sub, _, _ = g.induced(p)
        if not is_connected(sub):
            raise PreconditionError(f"part {p} does not induce a connected subgraph")
        for a, b in combinations(p, 2):
            if g.multiplicity(a, b) > 1:
                raise PreconditionError(f"contracting part {p} would create a loop")
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        key = owner.get(v, -1 - v)
        groups.setdefault(key, []).append(v)
    order = sorted(groups.values(), key=min)
    vertex_map = [0] * g.n
    for new, vs in enumerate(order):
        for v in vs:
            vertex_map[v] = new
    new_edges = []
    edge_map: dict[int, int] = {}
    for i, (u, v) in enumerate(g.edges):
        a, b = vertex_map[u], vertex_map[v]
        if a == b:
            continue
        edge_map[i] = len(new_edges)
        new_edges.append((a, b))
    return Multigraph(len(order), new_edges), edge_map, vertex_map


def disjoint_union(graphs: Sequence[Multigraph]) -> tuple[Multigraph, list[int], list[int]]:
    """Disjoint union; returns the graph plus vertex and edge offsets per input."""
    edges = []
    voff, eoff, n = [], [], 0
    for h in graphs:
        voff.append(n)
        eoff.append(len(edges))
        edges.extend((u + n, v + n) for u, v in h.edges)
        n += h.n
    return Multigraph(n, edges), voff, eoff


def girth(g: Multigraph) -> int | None:
    """Length of a shortest cycle (2 for parallel edges), or None for forests."""
    if not g.is_simple():
        return 2
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent_edge = {s: -1}
        queue = [s]
        for x in queue:
            for e in g.incident(x):
                if e == parent_edge[x]:
                    continue
                y = g.other(e, x)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent_edge[y] = e
                    queue.append(y)
                else:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best
