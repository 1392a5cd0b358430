"""Nowhere-zero Z_2^k flows (k <= 3) and the flow <-> coloring bridges.

A group element of Z_2^k is a plain ``int`` in ``0 .. 2**k - 1``; addition is
XOR and every element is its own inverse, so flows need no orientation. For
k = 3 the most significant bit is the "first coordinate": ``0b100`` is 100.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Sequence

from .budget import INDETERMINATE, BudgetExceeded, SolveBudget
from .coloring import EdgeColoring, is_proper
from .graph import (
    Multigraph,
    PreconditionError,
    TwoFactor,
    bridges,
    check_cubic,
    complementary_two_factor,
)

FIRST_BIT = 0b100


def fmt(x: int, k: int = 3) -> str:
    return format(x, f"0{k}b")


@dataclass(frozen=True)
class FlowAssignment:
    width: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.width not in (1, 2, 3):
            raise PreconditionError("flow width must be 1, 2 or 3")
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        for x in self.values:
            if not 0 <= x < 1 << self.width:
                raise PreconditionError(f"value {x} is not an element of Z_2^{self.width}")

    def __getitem__(self, e: int) -> int:
        return self.values[e]

    def __len__(self) -> int:
        return len(self.values)

    def preimage(self, x: int) -> list[int]:
        return [e for e, y in enumerate(self.values) if y == x]

    def mapped(self, fn) -> FlowAssignment:
        return FlowAssignment(self.width, tuple(fn(x) for x in self.values))


def vertex_sums(g: Multigraph, values: Sequence[int]) -> list[int]:
    acc = [0] * g.n
    for e, (u, v) in enumerate(g.edges):
        acc[u] ^= values[e]
        acc[v] ^= values[e]
    return acc


def is_nz_flow(g: Multigraph, f: FlowAssignment) -> bool:
    if len(f) != g.m:
        return False
    return all(x != 0 for x in f.values) and not any(vertex_sums(g, f.values))


def iter_nz_flows(g: Multigraph, k: int, budget: SolveBudget | None = None) -> Iterator[FlowAssignment]:
    """Every nowhere-zero Z_2^k flow of ``g``, each exactly once, in fixed order.

    Backtracking with vertex-sum propagation: as soon as a vertex has one
    unassigned edge left, that edge's value is forced. Bridges of the
    unassigned part are forced too, and a forced zero prunes the branch.
    """
    if k not in (1, 2, 3):
        raise PreconditionError("k must be 1, 2 or 3")
    m = g.m
    val = [0] * m
    rem = [g.degree(v) for v in range(g.n)]
    acc = [0] * g.n
    trail: list[int] = []
    nonzero = range(1, 1 << k)
    inc = [g.incident(v) for v in range(g.n)]
    ends = g.edges

    def assign(e: int, x: int) -> None:
        val[e] = x
        trail.append(e)
        u, v = ends[e]
        rem[u] -= 1
        rem[v] -= 1
        acc[u] ^= x
        acc[v] ^= x

    def undo(mark: int) -> None:
        while len(trail) > mark:
            e = trail.pop()
            x = val[e]
            val[e] = 0
            u, v = ends[e]
            rem[u] += 1
            rem[v] += 1
            acc[u] ^= x
            acc[v] ^= x

    def propagate(queue: list[int]) -> bool:
        while queue:
            w = queue.pop()
            if rem[w] == 0:
                if acc[w]:
                    return False
            elif rem[w] == 1:
                x = acc[w]
                if x == 0:
                    return False
                e = next(e for e in inc[w] if val[e] == 0)
                assign(e, x)
                queue.extend(ends[e])
        return True

    def forced_bridges() -> list[tuple[int, int]]:
        # a bridge of the unassigned subgraph must carry the XOR of the demands on one side
        disc = [-1] * g.n
        low = [0] * g.n
        side = list(acc)
        out = []
        t = 0
        for root in range(g.n):
            if disc[root] != -1 or rem[root] == 0:
                continue
            disc[root] = low[root] = t
            t += 1
            stack = [(root, -1, 0)]
            while stack:
                v, pe, i = stack[-1]
                if i < len(inc[v]):
                    stack[-1] = (v, pe, i + 1)
                    e = inc[v][i]
                    if e == pe or val[e]:
                        continue
                    w = ends[e][0] if ends[e][1] == v else ends[e][1]
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
                        side[u] ^= side[v]
                        if low[v] > disc[u]:
                            out.append((pe, side[v]))
        return out

    def settle(queue: list[int]) -> bool:
        while propagate(queue):
            forced = forced_bridges()
            if not forced:
                return True
            for e, x in forced:
                if x == 0:
                    return False
                assign(e, x)
                queue.extend(ends[e])
        return False

    def pick() -> int:
        best, best_key = -1, None
        for e in range(m):
            if val[e]:
                continue
            u, v = ends[e]
            key = min(rem[u], rem[v])
            if best_key is None or key < best_key:
                best, best_key = e, key
        return best

    def rec() -> Iterator[FlowAssignment]:
        if budget is not None:
            budget.tick()
        if len(trail) == m:
            yield FlowAssignment(k, tuple(val))
            return
        e = pick()
        for x in nonzero:
            mark = len(trail)
            assign(e, x)
            if settle(list(ends[e])):
                yield from rec()
            undo(mark)

    mark = len(trail)
    if settle(list(range(g.n))):
        yield from rec()
    undo(mark)


def find_nz_flow(g: Multigraph, k: int, budget: SolveBudget | None = None):
    """First nowhere-zero Z_2^k flow, ``None`` if there is none.

    A bridge forces its own value to zero, so bridged graphs return ``None``
    without searching. Returns ``INDETERMINATE`` if the budget runs out.
    """
    if bridges(g):
        return None
    try:
        return next(iter_nz_flows(g, k, budget), None)
    except BudgetExceeded:
        return INDETERMINATE


# ---------------------------------------------------------------------------
# matching-based extension from Z_2^2 to Z_2^3


@dataclass(frozen=True)
class Quotient:
    """The contraction of ``g`` along the cycles of the 2-factor complementary to ``matching``.

    Quotient vertex i is cycle i of ``two_factor``. Matching edges with both
    ends on one cycle would be loops; they are listed in ``loops`` and left out
    of ``graph``. ``edge_of[h]`` is the quotient edge of matching edge ``h``.
    """

    graph: Multigraph
    two_factor: TwoFactor
    cycle_of: tuple[int, ...]
    edge_of: dict[int, int]
    loops: tuple[int, ...]
    matching: frozenset[int]


def matching_quotient(g: Multigraph, matching) -> Quotient:
    matching = frozenset(matching)
    tf = complementary_two_factor(g, matching)
    cycle_of = [0] * g.n
    for ci, cyc in enumerate(tf.cycles):
        for v in cyc.vertices:
            cycle_of[v] = ci
    edges, edge_of, loops = [], {}, []
    for h in sorted(matching):
        a, b = (cycle_of[x] for x in g.edges[h])
        if a == b:
            loops.append(h)
        else:
            edge_of[h] = len(edges)
            edges.append((a, b))
    return Quotient(Multigraph(len(tf.cycles), edges), tf, tuple(cycle_of), edge_of, tuple(loops), matching)


def quotient_flow(g: Multigraph, matching, budget: SolveBudget | None = None) -> dict[int, int] | None:
    """A nowhere-zero Z_2^2 flow on the quotient, as a map matching edge -> value.

    Loop edges take value 01, which never affects a vertex sum.
    """
    q = matching_quotient(g, matching)
    flow = find_nz_flow(q.graph, 2, budget)
    if flow is None or flow is INDETERMINATE:
        return flow
    theta = {h: flow[q.edge_of[h]] for h in q.edge_of}
    theta.update({h: 0b01 for h in q.loops})
    return theta


def extend_matching_flow(
    g: Multigraph,
    matching,
    theta: Mapping[int, int],
    seed: int | Mapping[int, int] = FIRST_BIT,
    start_edges: Mapping[int, int] | None = None,
) -> FlowAssignment:
    """Lift a quotient Z_2^2 flow to a nowhere-zero Z_2^3 flow of ``g``.

    Matching edge h gets (0, theta(h)). On each cycle of the complementary
    2-factor one edge is seeded with a first-bit-1 value and the rest follow
    from the vertex sums. ``seed`` may be a per-cycle mapping and
    ``start_edges`` may pick the seeded edge per cycle (default: the cycle's
    first edge).
    """
    check_cubic(g)
    matching = frozenset(matching)
    tf = complementary_two_factor(g, matching)
    for h in matching:
        x = theta.get(h, 0)
        if not 0 < x < 4:
            raise PreconditionError(f"theta({h}) = {x} is not a nonzero element of Z_2^2")
    cycle_of = {}
    for ci, cyc in enumerate(tf.cycles):
        for v in cyc.vertices:
            cycle_of[v] = ci
    sums = [0] * len(tf.cycles)
    for h in matching:
        for x in g.edges[h]:
            sums[cycle_of[x]] ^= theta[h]
    if any(sums):
        raise PreconditionError("theta is not a flow on the quotient")

    mate = {}
    for h in matching:
        for x in g.edges[h]:
            mate[x] = h
    mu = [0] * g.m
    for h in matching:
        mu[h] = theta[h]
    for ci, cyc in enumerate(tf.cycles):
        x0 = seed[ci] if isinstance(seed, Mapping) else seed
        if not x0 & FIRST_BIT:
            raise PreconditionError("cycle seeds must have first coordinate 1")
        L = len(cyc)
        s = 0 if start_edges is None or ci not in start_edges else cyc.edges.index(start_edges[ci])
        mu[cyc.edges[s]] = x0
        for step in range(1, L):
            i = (s + step) % L
            # the shared vertex of edges i-1 and i is vertices[i]
            mu[cyc.edges[i]] = mu[cyc.edges[i - 1]] ^ mu[mate[cyc.vertices[i]]]
        last = cyc.edges[(s - 1) % L]
        closing = mu[last] ^ mu[cyc.edges[s]] ^ mu[mate[cyc.vertices[s]]]
        if closing:
            raise AssertionError("cycle propagation did not close")
    f = FlowAssignment(3, tuple(mu))
    if not is_nz_flow(g, f):
        raise AssertionError("extension is not a nowhere-zero flow")
    return f


# ---------------------------------------------------------------------------
# flows as colorings


def flow_to_coloring(g: Multigraph, f: FlowAssignment) -> EdgeColoring:
    """Read a Z_2^3 flow as a 7-coloring: value ``b2 b1 b0`` is color ``4 b2 + 2 b1 + b0``."""
    if f.width != 3:
        raise PreconditionError("expected a Z_2^3 flow")
    if not is_nz_flow(g, f):
        raise PreconditionError("not a nowhere-zero flow")
    return EdgeColoring(f.values, 7)


def coloring_to_flow(g: Multigraph, c: EdgeColoring) -> FlowAssignment:
    """A proper 3-edge-coloring read as the flow with values 001, 010, 011."""
    if c.used - {1, 2, 3}:
        raise PreconditionError("expected colors 1, 2, 3")
    f = FlowAssignment(3, c.colors)
    if not is_nz_flow(g, f):
        raise PreconditionError("coloring is not a proper 3-edge-coloring of a cubic graph")
    return f


def _apply(rows: tuple[int, int, int], x: int) -> int:
    out = 0
    for r in rows:
        out = (out << 1) | (bin(r & x).count("1") & 1)
    return out


def _invertible(rows: tuple[int, int, int]) -> bool:
    return len({_apply(rows, x) for x in range(8)}) == 8


def normalizing_automorphism(gamma: int) -> tuple[int, int, int]:
    """Lexicographically least matrix of GL(3,2) (rows as 3-bit ints) sending ``gamma`` to 111."""
    for rows in product(range(8), repeat=3):
        if _invertible(rows) and _apply(rows, gamma) == 0b111:
            return rows
    raise PreconditionError("gamma must be nonzero")


MISSING_VALUE_PAIRS = ((0b001, 0b110), (0b010, 0b101), (0b100, 0b011))


def coloring_from_missing_value_flow(g: Multigraph, f: FlowAssignment) -> EdgeColoring:
    """3-edge-coloring from a Z_2^3 flow that avoids some nonzero value gamma.

    After mapping gamma to 111 the other six values split into three pairs
    summing to 111; each pair's preimage is a color class.
    """
    if f.width != 3 or not is_nz_flow(g, f):
        raise PreconditionError("not a nowhere-zero Z_2^3 flow")
    missing = [x for x in range(1, 8) if x not in set(f.values)]
    if not missing:
        raise PreconditionError("every nonzero value occurs; no missing value")
    gamma = 0b111 if 0b111 in missing else missing[0]
    rows = normalizing_automorphism(gamma)
    color = {x: i + 1 for i, pair in enumerate(MISSING_VALUE_PAIRS) for x in pair}
    c = EdgeColoring(tuple(color[_apply(rows, x)] for x in f.values), 3)
    if not is_proper(g, c):
        raise AssertionError("missing-value classes are not matchings")
    return c


# ---------------------------------------------------------------------------
# non-conflicting flows


def nonconflicting_pairs(g: Multigraph, f: FlowAssignment) -> list[tuple[int, int]]:
    """Ordered pairs (alpha, beta), alpha != beta, satisfying both merge conditions.

    (1) edges valued alpha or beta form a matching; (2) no edge uv has an
    alpha-valued edge at u and a beta-valued edge at v.
    """
    bad = 0
    sets = [{f[e] for e in g.incident(v)} for v in range(g.n)]
    for s in sets:
        for a in s:
            for b in s:
                bad |= 1 << (8 * a + b)
    for u, v in g.edges:
        for a in sets[u]:
            for b in sets[v]:
                bad |= (1 << (8 * a + b)) | (1 << (8 * b + a))
    return [
        (a, b)
        for a in range(1, 8)
        for b in range(1, 8)
        if a != b and not bad >> (8 * a + b) & 1
    ]


def search_nonconflicting_flow(g: Multigraph, budget: SolveBudget | None = None, stats: dict | None = None):
    """First (flow, alpha, beta) in enumeration order, ``None`` after exhausting all flows.

    ``stats["flows"]`` receives the number of flows examined.
    """
    check_cubic(g)
    count = 0
    try:
        for f in iter_nz_flows(g, 3, budget):
            count += 1
            pairs = nonconflicting_pairs(g, f)
            if pairs:
                alpha, beta = pairs[0]
                return f, alpha, beta
    except BudgetExceeded:
        return INDETERMINATE
    finally:
        if stats is not None:
            stats["flows"] = count
    return None


def merge_to_six(g: Multigraph, f: FlowAssignment, alpha: int, beta: int) -> EdgeColoring:
    """Recolor the beta-valued edges with alpha's color."""
    c = flow_to_coloring(g, f)
    return EdgeColoring(tuple(alpha if x == beta else x for x in c.colors), 7)
