"""Constructions for every graph family the colorers work on.

Generators return the graph together with the construction metadata the
colorers need (triangle maps, block maps, the cycle-permutation matching).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .graph import (
    Multigraph,
    PreconditionError,
    check_cubic,
    components,
    is_bridgeless,
    is_connected,
)


def petersen() -> Multigraph:
    """Outer 5-cycle u_0..u_4 (vertices 0-4), spokes u_i v_i, inner pentagram v_i v_{i+2}."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, outer + spokes + inner)


def k4() -> Multigraph:
    return Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def theta() -> Multigraph:
    """Two vertices joined by three parallel edges."""
    return Multigraph(2, [(0, 1), (0, 1), (0, 1)])


def k33() -> Multigraph:
    return Multigraph(6, [(a, 3 + b) for a in range(3) for b in range(3)])


def prism(n: int = 3) -> Multigraph:
    """The n-prism C_n x K_2 (n >= 2; n = 2 gives a 4-cycle with two doubled rungs)."""
    if n < 2:
        raise PreconditionError("prism needs n >= 2")
    # for n = 2 the modular cycle edges come out as the two digons
    edges = [(i, (i + 1) % n) for i in range(n)] + [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Multigraph(2 * n, edges)


def mobius_kantor() -> Multigraph:
    """Generalized Petersen graph GP(8, 3)."""
    return generalized_petersen(8, 3)


def generalized_petersen(n: int, k: int) -> Multigraph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    return Multigraph(2 * n, edges)


# ---------------------------------------------------------------------------
# open graphs with labelled stubs


class OpenGraph:
    """A cubic multigraph under construction with labelled dangling half-edges."""

    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.stubs: dict[str, int] = {}
        self.names: dict[str, int] = {}

    def add_vertex(self, name: str | None = None) -> int:
        v = self.n
        self.n += 1
        if name is not None:
            self.names[name] = v
        return v

    def _load(self, v: int) -> int:
        deg = sum((a == v) + (b == v) for a, b in self.edges)
        return deg + sum(1 for x in self.stubs.values() if x == v)

    def add_edge(self, u: int, v: int) -> int:
        if u == v:
            raise PreconditionError("loops are not allowed")
        for x in (u, v):
            if self._load(x) >= 3:
                raise PreconditionError(f"vertex {x} is already saturated")
        self.edges.append((u, v))
        return len(self.edges) - 1

    def add_stub(self, label: str, anchor: int) -> None:
        if label in self.stubs:
            raise PreconditionError(f"stub {label!r} already exists")
        if self._load(anchor) >= 3:
            raise PreconditionError(f"vertex {anchor} is already saturated")
        self.stubs[label] = anchor

    def join(self, a: str, b: str) -> int:
        """Glue two stubs into an edge between their anchors."""
        u, v = self.stubs.pop(a), self.stubs.pop(b)
        return self.add_edge(u, v)

    def absorb(self, other: OpenGraph, prefix: str) -> dict[int, int]:
        """Copy ``other`` in; its names and stub labels get ``prefix``."""
        off = self.n
        self.n += other.n
        self.edges.extend((u + off, v + off) for u, v in other.edges)
        for name, v in other.names.items():
            self.names[prefix + name] = v + off
        for label, v in other.stubs.items():
            self.add_stub(prefix + label, v + off)
        return {v: v + off for v in range(other.n)}

    def close(self) -> Multigraph:
        if self.stubs:
            raise PreconditionError(f"dangling stubs remain: {sorted(self.stubs)}")
        return check_cubic(Multigraph(self.n, self.edges))


# Vertex names of the 5-zone follow its drawing: "zXY" are the eight block
# vertices on a 3x3 grid (no centre), "t_lo", "t_mid", "t_hi" the 3-path.
FIVE_ZONE_VERTICES = ("z00", "z10", "z20", "z01", "z21", "z02", "z12", "z22", "t_lo", "t_hi", "t_mid")
FIVE_ZONE_EDGES = (
    ("z00", "z10"), ("z00", "z01"), ("z00", "t_lo"),
    ("z10", "z20"), ("z10", "z12"),
    ("z01", "z21"), ("z02", "z12"), ("z12", "z22"), ("z01", "z02"),
    ("z20", "z21"), ("z21", "z22"), ("z22", "t_hi"),
    ("t_mid", "t_lo"), ("t_mid", "t_hi"),
)
FIVE_ZONE_STUBS = (("b1", "t_hi"), ("b2", "t_lo"), ("b3", "t_mid"), ("b4", "z20"), ("b5", "z02"))


def five_zone() -> OpenGraph:
    """The 11-vertex zone with semi-edges b1..b5."""
    og = OpenGraph()
    for name in FIVE_ZONE_VERTICES:
        og.add_vertex(name)
    for a, b in FIVE_ZONE_EDGES:
        og.add_edge(og.names[a], og.names[b])
    for label, anchor in FIVE_ZONE_STUBS:
        og.add_stub(label, og.names[anchor])
    return og


# ---------------------------------------------------------------------------
# Halin trees and treelike snarks


@dataclass(frozen=True)
class HalinSpec:
    tree: Multigraph
    leaf_order: tuple[int, ...]

    def __post_init__(self) -> None:
        t = self.tree
        object.__setattr__(self, "leaf_order", tuple(self.leaf_order))
        if t.n < 2 or t.m != t.n - 1 or not is_connected(t):
            raise PreconditionError("tree must be connected and acyclic")
        leaves = [v for v in range(t.n) if t.degree(v) == 1]
        for v in range(t.n):
            if t.degree(v) not in (1, 3):
                raise PreconditionError(f"tree vertex {v} has degree {t.degree(v)}; need 1 or 3")
        if len(leaves) < 3:
            raise PreconditionError("need at least 3 leaves")
        if sorted(self.leaf_order) != leaves:
            raise PreconditionError("leaf_order must list every leaf exactly once")

    @property
    def leaves(self) -> int:
        return len(self.leaf_order)


def planar_leaf_order(tree: Multigraph, root: int = 0) -> tuple[int, ...]:
    """Leaves in DFS order, which is the cyclic order of some plane embedding."""
    order, seen, stack = [], {root}, [root]
    while stack:
        v = stack.pop()
        if tree.degree(v) == 1:
            order.append(v)
        for w in reversed(tree.neighbors(v)):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return tuple(order)


def caterpillar_tree(leaves: int) -> Multigraph:
    """Spine of ``leaves - 2`` cubic vertices with leaves hung off it."""
    if leaves < 3:
        raise PreconditionError("need at least 3 leaves")
    spine = leaves - 2
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(spine):
        need = 3 - (i > 0) - (i < spine - 1)
        for _ in range(need):
            edges.append((i, nxt))
            nxt += 1
    return Multigraph(nxt, edges)


def random_cubic_tree(leaves: int, seed: int) -> Multigraph:
    """Grow a tree from K_{1,3} by repeatedly splitting a random leaf into two."""
    if leaves < 3:
        raise PreconditionError("need at least 3 leaves")
    rng = random.Random(seed)
    edges = [(0, 1), (0, 2), (0, 3)]
    n = 4
    leafs = [1, 2, 3]
    while len(leafs) < leaves:
        v = leafs.pop(rng.randrange(len(leafs)))
        edges += [(v, n), (v, n + 1)]
        leafs += [n, n + 1]
        n += 2
    return Multigraph(n, edges)


def halin_spec(tree: Multigraph) -> HalinSpec:
    root = next(v for v in range(tree.n) if tree.degree(v) == 3)
    return HalinSpec(tree, planar_leaf_order(tree, root))


@dataclass(frozen=True)
class TreelikeSnark:
    graph: Multigraph
    spec: HalinSpec
    blocks: tuple[dict[str, int], ...]  # blocks[i][vertex name] -> vertex of G, one per leaf in order
    tree_vertex: dict[int, int]  # tree vertex -> vertex of G (leaves map to their block's t_mid)
    tree_edge: dict[int, int]  # tree edge -> edge of G


def treelike_snark(spec: HalinSpec) -> TreelikeSnark:
    """G(T, C): one 5-zone per leaf, b3's end is the leaf, b4->b2 and b5->b1 of the next zone."""
    n = spec.leaves
    og = OpenGraph()
    for i in range(n):
        og.absorb(five_zone(), f"{i}.")
    for i in range(n):
        j = (i + 1) % n
        og.join(f"{i}.b4", f"{j}.b2")
        og.join(f"{i}.b5", f"{j}.b1")
    tree = spec.tree
    tree_vertex = {}
    for i, leaf in enumerate(spec.leaf_order):
        tree_vertex[leaf] = og.names[f"{i}.t_mid"]
    for v in range(tree.n):
        if v not in tree_vertex:
            tree_vertex[v] = og.add_vertex(f"tree.{v}")
    tree_edge = {}
    for i, (a, b) in enumerate(tree.edges):
        for x in (a, b):
            if tree.degree(x) == 1:
                og.stubs.pop(f"{spec.leaf_order.index(x)}.b3")
        tree_edge[i] = og.add_edge(tree_vertex[a], tree_vertex[b])
    g = og.close()
    blocks = tuple(
        {name: og.names[f"{i}.{name}"] for name in FIVE_ZONE_VERTICES} for i in range(n)
    )
    return TreelikeSnark(g, spec, blocks, tree_vertex, tree_edge)


# ---------------------------------------------------------------------------
# triangle expansion and diamonds


@dataclass(frozen=True)
class Expansion:
    """A cubic graph with every vertex of ``base`` replaced by a triangle.

    ``corner[(x, e)]`` is the triangle vertex of base vertex ``x`` that carries
    base edge ``e``; ``edge_map[e]`` is the image of base edge ``e``.
    ``triangle_edges[x]`` lists the three triangle edges of ``x``.
    """

    graph: Multigraph
    base: Multigraph
    triangles: tuple[tuple[int, int, int], ...]
    corner: dict[tuple[int, int], int]
    edge_map: dict[int, int]
    triangle_edges: tuple[tuple[int, int, int], ...]


def triangle_expand(h: Multigraph) -> Expansion:
    check_cubic(h)
    corner = {}
    for x in range(h.n):
        for slot, e in enumerate(h.incident(x)):
            corner[(x, e)] = 3 * x + slot
    edges = []
    edge_map = {}
    for e, (a, b) in enumerate(h.edges):
        edge_map[e] = len(edges)
        edges.append((corner[(a, e)], corner[(b, e)]))
    tri_edges = []
    for x in range(h.n):
        base = len(edges)
        edges += [(3 * x, 3 * x + 1), (3 * x + 1, 3 * x + 2), (3 * x, 3 * x + 2)]
        tri_edges.append((base, base + 1, base + 2))
    g = Multigraph(3 * h.n, edges)
    triangles = tuple((3 * x, 3 * x + 1, 3 * x + 2) for x in range(h.n))
    return Expansion(g, h, triangles, corner, edge_map, tuple(tri_edges))


def _diamond_edges(u: int, c1: int, c2: int, v: int) -> list[tuple[int, int]]:
    return [(u, c1), (u, c2), (c1, c2), (c1, v), (c2, v)]


def replace_edge_with_diamond_string(g: Multigraph, e: int, k: int) -> Multigraph:
    """Remove edge ``e = ab`` and splice in ``k`` chained diamonds from a to b.

    New vertices are appended; the other edges keep their indices, ``e`` is
    reused for the join at ``a``.
    """
    if k < 1:
        raise PreconditionError("a string needs at least one diamond")
    a, b = g.edges[e]
    n = g.n
    edges = list(g.edges)
    new = []
    prev_tail = None
    for i in range(k):
        u, c1, c2, v = n + 4 * i, n + 4 * i + 1, n + 4 * i + 2, n + 4 * i + 3
        new += _diamond_edges(u, c1, c2, v)
        if prev_tail is not None:
            new.append((prev_tail, u))
        prev_tail = v
    head, tail = n, prev_tail
    edges[e] = (a, head)
    edges += new + [(tail, b)]
    return Multigraph(n + 4 * k, edges)


def ring_of_diamonds(k: int) -> Multigraph:
    if k < 2:
        raise PreconditionError("a ring needs at least two diamonds")
    edges = []
    for i in range(k):
        u, c1, c2, v = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += _diamond_edges(u, c1, c2, v)
    for i in range(k):
        edges.append((4 * i + 3, 4 * ((i + 1) % k)))
    return check_cubic(Multigraph(4 * k, edges))


def insert_digon(g: Multigraph, e: int) -> Multigraph:
    """Subdivide edge ``e = ab`` twice as a-x, x=y (double edge), y-b."""
    a, b = g.edges[e]
    x, y = g.n, g.n + 1
    edges = list(g.edges)
    edges[e] = (a, x)
    edges += [(x, y), (x, y), (y, b)]
    return Multigraph(g.n + 2, edges)


# ---------------------------------------------------------------------------
# cycle permutation graphs


PETERSEN_PERMUTATION = (0, 2, 4, 1, 3)


@dataclass(frozen=True)
class CyclePermSpec:
    n: int
    p: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        if self.n < 3:
            raise PreconditionError("cycle permutation graphs need n >= 3")
        if len(self.p) != self.n or sorted(self.p) != list(range(self.n)):
            raise PreconditionError(f"{self.p} is not a permutation of 0..{self.n - 1}")
        if self.p[0] != 0:
            raise PreconditionError("p[0] must be 0")


@dataclass(frozen=True)
class CyclePermGraph:
    """u_i is vertex i, v_i is vertex n + i.

    Edge i is u_i u_{i+1}, edge n + i is v_i v_{i+1}, edge 2n + i is v_i u_{p_i}.
    """

    graph: Multigraph
    spec: CyclePermSpec

    def u(self, i: int) -> int:
        return i % self.spec.n

    def v(self, i: int) -> int:
        return self.spec.n + i % self.spec.n

    def outer_edge(self, i: int) -> int:
        return i % self.spec.n

    def inner_edge(self, i: int) -> int:
        return self.spec.n + i % self.spec.n

    def matching_edge(self, j: int) -> int:
        """The matching edge at v_j."""
        return 2 * self.spec.n + j

    @property
    def matching(self) -> frozenset[int]:
        return frozenset(range(2 * self.spec.n, 3 * self.spec.n))


def cycle_permutation(spec: CyclePermSpec) -> CyclePermGraph:
    n, p = spec.n, spec.p
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(n + j, p[j]) for j in range(n)]
    g = check_cubic(Multigraph(2 * n, edges))
    for side in (range(n), range(n, 2 * n)):
        sub, _, _ = g.induced(list(side))
        if sub.m != n:
            raise PreconditionError("a cycle of the 2-factor has a chord")
    return CyclePermGraph(g, spec)


def random_permutation_spec(n: int, rng: random.Random) -> CyclePermSpec:
    rest = list(range(1, n))
    rng.shuffle(rest)
    return CyclePermSpec(n, (0, *rest))


# ---------------------------------------------------------------------------
# random corpus graphs and 2-cut assembly


def random_bridgeless_cubic(n: int, seed: int, max_tries: int = 100000) -> Multigraph:
    """Connected loopless bridgeless cubic multigraph from the pairing model.

    Point pairings are resampled until the result qualifies; the same
    ``(n, seed)`` always gives the same edge list.
    """
    if n % 2 or n < 2:
        raise PreconditionError("n must be even and positive")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(points)
        pairs = [(points[i], points[i + 1]) for i in range(0, len(points), 2)]
        if any(a == b for a, b in pairs):
            continue
        g = Multigraph(n, sorted(tuple(sorted(p)) for p in pairs))
        if is_connected(g) and is_bridgeless(g):
            return g
    raise RuntimeError("no bridgeless sample found")


def join_by_2cut(g1: Multigraph, e1: int, g2: Multigraph, e2: int) -> Multigraph:
    """Cut edge ``e1`` of g1 and ``e2`` of g2 and cross-connect the four ends.

    The two new edges form a 2-edge-cut; they take indices ``e1`` and
    ``g1.m + e2`` of the result.
    """
    a1, b1 = g1.edges[e1]
    a2, b2 = g2.edges[e2]
    off = g1.n
    edges = list(g1.edges)
    edges[e1] = (a1, a2 + off)
    rest = [(u + off, v + off) for u, v in g2.edges]
    rest[e2] = (b1, b2 + off)
    return Multigraph(g1.n + g2.n, edges + rest)


def is_connected_bridgeless_cubic(g: Multigraph) -> bool:
    try:
        check_cubic(g)
    except PreconditionError:
        return False
    return len(components(g)) == 1 and is_bridgeless(g)
