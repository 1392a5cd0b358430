"""Exhaustive solvers for normal colorings and 3-edge-colorability.

All searches are deterministic. Witnesses are re-verified with
:func:`normalcol.coloring.report` before they are returned, so a pruning bug
surfaces as an ``AssertionError`` rather than a wrong answer.
"""

from __future__ import annotations

from typing import Iterator

from .budget import INDETERMINATE, BudgetExceeded, SolveBudget
from .coloring import EdgeColoring, is_proper, report
from .graph import Multigraph, check_cubic


class _Search:
    """Proper k-edge-coloring backtracker with optional normality tracking."""

    def __init__(self, g: Multigraph, k: int, budget: SolveBudget | None, prune_neither: bool):
        self.g = g
        self.k = k
        self.budget = budget
        self.prune = prune_neither
        self.col = [0] * g.m
        self.nbrs = [g.edge_neighbors(e) for e in range(g.m)]
        # closure[e] = every edge at either end of e, e included
        self.closure = [tuple(sorted(set(g.incident(u)) | set(g.incident(v)))) for u, v in g.edges]
        self.neither = 0
        self.max_color = 0

    def free(self, e: int) -> int:
        """Bitmask of colors (bit c) still allowed on ``e``."""
        used = 0
        for f in self.nbrs[e]:
            used |= 1 << self.col[f]
        return ((1 << (self.k + 1)) - 2) & ~used

    def status(self, f: int) -> int:
        """0 undetermined, 1 normal, -1 Neither."""
        cl = self.closure[f]
        if any(self.col[x] == 0 for x in cl):
            return 0
        size = len({self.col[x] for x in cl})
        return 1 if size in (3, 5) else -1

    def affected(self, e: int) -> list[int]:
        return [e, *self.nbrs[e]]

    def pick(self) -> int:
        best, best_key = -1, None
        for e in range(self.g.m):
            if self.col[e]:
                continue
            key = bin(self.free(e)).count("1")
            if best_key is None or key < best_key:
                best, best_key = e, key
                if key <= 1:
                    break
        return best

    def seed(self) -> list[int]:
        """Fix the edges at vertex 0 to 1, 2, 3 (color renaming symmetry)."""
        fixed = []
        if self.g.n and self.g.degree(0) <= self.k:
            for c, e in enumerate(self.g.incident(0), start=1):
                fixed.append(e)
                self.col[e] = c
            self.max_color = len(fixed)
        return fixed

    def colorings(self, bound=None) -> Iterator[tuple[int, ...]]:
        """Yield proper colorings; ``bound`` is consulted as a pruning callback."""
        g = self.g

        def rec(done: int, max_color: int) -> Iterator[tuple[int, ...]]:
            if self.budget is not None:
                self.budget.tick()
            if done == g.m:
                yield tuple(self.col)
                return
            e = self.pick()
            mask = self.free(e)
            limit = min(self.k, max_color + 1)
            for c in range(1, limit + 1):
                if not mask >> c & 1:
                    continue
                before = [self.status(f) for f in self.affected(e)]
                self.col[e] = c
                after = [self.status(f) for f in self.affected(e)]
                added = sum(1 for b, a in zip(before, after) if a == -1 and b != -1)
                self.neither += added
                ok = not (self.prune and added)
                if ok and bound is not None:
                    ok = bound(self.neither)
                if ok:
                    yield from rec(done + 1, max(max_color, c))
                self.neither -= added
                self.col[e] = 0

        fixed = self.seed()
        if not is_proper_partial(g, self.col):
            return
        self.neither = sum(1 for f in range(g.m) if self.status(f) == -1)
        if self.prune and self.neither:
            return
        yield from rec(len(fixed), self.max_color)


def is_proper_partial(g: Multigraph, col: list[int]) -> bool:
    for v in range(g.n):
        seen = [col[e] for e in g.incident(v) if col[e]]
        if len(seen) != len(set(seen)):
            return False
    return True


def exists_normal_k(g: Multigraph, k: int, budget: SolveBudget | None = None):
    """A normal k-edge-coloring, ``None`` if none exists, or ``INDETERMINATE``."""
    check_cubic(g)
    if g.m and k < 3:
        return None
    search = _Search(g, k, budget, prune_neither=True)
    try:
        for col in search.colorings():
            c = EdgeColoring(col, k)
            if not report(g, c).is_normal:
                raise AssertionError("solver produced a non-normal witness")
            return c
    except BudgetExceeded:
        return INDETERMINATE
    return None


def min_normal_colors(g: Multigraph, kmax: int = 7, budget: SolveBudget | None = None):
    """Least k <= kmax admitting a normal k-coloring (``None`` if no such k)."""
    for k in range(3, kmax + 1):
        if budget is not None:
            budget.restart()
        res = exists_normal_k(g, k, budget)
        if res is INDETERMINATE:
            return INDETERMINATE
        if res is not None:
            return k
    return None


def max_normal_edges(g: Multigraph, k: int, budget: SolveBudget | None = None):
    """Maximum number of normal edges over proper k-colorings, with a witness.

    Returns ``None`` when ``g`` has no proper k-edge-coloring at all.
    """
    check_cubic(g)
    search = _Search(g, k, budget, prune_neither=False)
    best: list = [-1, None]

    def bound(neither: int) -> bool:
        return g.m - neither > best[0]

    try:
        for col in search.colorings(bound):
            r = report(g, col)
            if r.normal_count > best[0]:
                best = [r.normal_count, EdgeColoring(col, k)]
                if best[0] == g.m:
                    break
    except BudgetExceeded:
        return INDETERMINATE
    if best[1] is None:
        return None
    if not is_proper(g, best[1]):
        raise AssertionError("solver produced an improper coloring")
    return best[0], best[1]


# ---------------------------------------------------------------------------
# 3-edge-colorability


def three_edge_coloring(g: Multigraph, budget: SolveBudget | None = None):
    """A proper 3-edge-coloring, ``None`` if none exists, or ``INDETERMINATE``.

    Domains are bitmasks over {1,2,3}; assigning a color removes it from every
    adjacent edge and singleton domains are assigned immediately.
    """
    check_cubic(g)
    m = g.m
    nbrs = [g.edge_neighbors(e) for e in range(m)]
    dom = [0b1110] * m
    col = [0] * m
    trail: list[tuple[int, int, int]] = []  # (edge, old domain, old color)

    def assign(e: int, c: int) -> bool:
        queue = [(e, c)]
        while queue:
            e, c = queue.pop()
            if col[e]:
                if col[e] != c:
                    return False
                continue
            if not dom[e] >> c & 1:
                return False
            trail.append((e, dom[e], 0))
            col[e] = c
            dom[e] = 1 << c
            for f in nbrs[e]:
                if dom[f] >> c & 1:
                    if col[f]:
                        return False
                    trail.append((f, dom[f], col[f]))
                    dom[f] &= ~(1 << c)
                    if dom[f] == 0:
                        return False
                    if dom[f] & (dom[f] - 1) == 0:
                        queue.append((f, dom[f].bit_length() - 1))
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            e, d, c = trail.pop()
            dom[e] = d
            col[e] = c

    def rec() -> bool:
        if budget is not None:
            budget.tick()
        best, best_key = -1, 4
        for e in range(m):
            if not col[e]:
                key = bin(dom[e]).count("1")
                if key < best_key:
                    best, best_key = e, key
                    if key == 2:
                        break
        if best < 0:
            return True
        for c in (1, 2, 3):
            if dom[best] >> c & 1:
                mark = len(trail)
                if assign(best, c) and rec():
                    return True
                undo(mark)
        return False

    try:
        ok = True
        if g.n:
            for c, e in enumerate(g.incident(0), start=1):
                ok = ok and assign(e, c)
        if not (ok and rec()):
            return None
    except BudgetExceeded:
        return INDETERMINATE
    c = EdgeColoring(col, 3)
    if not is_proper(g, c):
        raise AssertionError("3-coloring search produced an improper coloring")
    return c


def is_3_edge_colorable(g: Multigraph, budget: SolveBudget | None = None):
    res = three_edge_coloring(g, budget)
    if res is INDETERMINATE:
        return INDETERMINATE
    return res is not None
