"""Edge colorings and the poor/rich/normal classification.

Classification is computed from the literal size of ``S(u) | S(v)`` even when
the coloring is not proper, so partial pipelines can be inspected; a coloring
only counts as normal when it is also proper.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .graph import Multigraph, PreconditionError


class EdgeClass(enum.Enum):
    POOR = "poor"
    RICH = "rich"
    NEITHER = "neither"

    @property
    def normal(self) -> bool:
        return self is not EdgeClass.NEITHER


@dataclass(frozen=True)
class EdgeColoring:
    """Total map from edge index to a color in ``1..k``."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for e, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise PreconditionError(f"edge {e} has color {c} outside 1..{self.k}")

    @classmethod
    def from_list(cls, colors: Sequence[int], k: int | None = None) -> EdgeColoring:
        colors = tuple(colors)
        return cls(colors, k if k is not None else max(colors, default=1))

    @classmethod
    def from_mapping(cls, m: int, colors: Mapping[int, int], k: int | None = None) -> EdgeColoring:
        missing = [e for e in range(m) if e not in colors]
        if missing:
            raise PreconditionError(f"coloring is not total; uncolored edges {missing[:5]}")
        return cls.from_list([colors[e] for e in range(m)], k)

    def __getitem__(self, e: int) -> int:
        return self.colors[e]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def used(self) -> frozenset[int]:
        return frozenset(self.colors)

    @property
    def num_colors(self) -> int:
        return len(self.used)

    def class_of(self, color: int) -> list[int]:
        return [e for e, c in enumerate(self.colors) if c == color]

    def renamed(self, perm: Mapping[int, int], k: int | None = None) -> EdgeColoring:
        return EdgeColoring.from_list([perm[c] for c in self.colors], k or self.k)

    def compact(self) -> EdgeColoring:
        """Rename the used colors to ``1..r`` preserving their order."""
        ranks = {c: i + 1 for i, c in enumerate(sorted(self.used))}
        return self.renamed(ranks, max(len(ranks), 1))


def color_set(g: Multigraph, c: EdgeColoring | Sequence[int], v: int) -> set[int]:
    return {c[e] for e in g.incident(v)}


def is_proper(g: Multigraph, c: EdgeColoring | Sequence[int]) -> bool:
    return all(len(color_set(g, c, v)) == g.degree(v) for v in range(g.n))


def classify_edge(g: Multigraph, c: EdgeColoring | Sequence[int], e: int) -> EdgeClass:
    u, v = g.edges[e]
    size = len(color_set(g, c, u) | color_set(g, c, v))
    if size == 3:
        return EdgeClass.POOR
    if size == 5:
        return EdgeClass.RICH
    return EdgeClass.NEITHER


@dataclass(frozen=True)
class NormalityReport:
    classes: tuple[EdgeClass, ...]
    proper: bool
    colors_used: int

    @property
    def m(self) -> int:
        return len(self.classes)

    @property
    def poor(self) -> int:
        return sum(1 for x in self.classes if x is EdgeClass.POOR)

    @property
    def rich(self) -> int:
        return sum(1 for x in self.classes if x is EdgeClass.RICH)

    @property
    def neither(self) -> int:
        return sum(1 for x in self.classes if x is EdgeClass.NEITHER)

    @property
    def normal_count(self) -> int:
        return self.poor + self.rich

    @property
    def normal_fraction(self) -> Fraction:
        return Fraction(self.normal_count, self.m) if self.m else Fraction(1)

    @property
    def is_normal(self) -> bool:
        return self.proper and self.neither == 0

    def non_normal_edges(self) -> list[int]:
        return [e for e, x in enumerate(self.classes) if x is EdgeClass.NEITHER]

    def as_dict(self) -> dict:
        frac = self.normal_fraction
        return {
            "proper": self.proper,
            "poor": self.poor,
            "rich": self.rich,
            "neither": self.neither,
            "normal_fraction": f"{frac.numerator}/{frac.denominator}",
            "k": self.colors_used,
            "per_edge": [x.value for x in self.classes],
        }


def report(g: Multigraph, c: EdgeColoring | Sequence[int]) -> NormalityReport:
    if len(c) != g.m:
        raise PreconditionError(f"coloring has {len(c)} entries for {g.m} edges")
    sets = [color_set(g, c, v) for v in range(g.n)]
    classes = []
    for u, v in g.edges:
        size = len(sets[u] | sets[v])
        classes.append(EdgeClass.POOR if size == 3 else EdgeClass.RICH if size == 5 else EdgeClass.NEITHER)
    proper = all(len(sets[v]) == g.degree(v) for v in range(g.n))
    return NormalityReport(tuple(classes), proper, len(set(c[e] for e in range(g.m))))


def is_normal(g: Multigraph, c: EdgeColoring | Sequence[int]) -> bool:
    return report(g, c).is_normal


def all_distinct(g: Multigraph) -> EdgeColoring:
    """Every edge its own color; all-rich on simple cubic graphs."""
    return EdgeColoring.from_list(range(1, g.m + 1))


def combine(parts: Iterable[tuple[Sequence[int], EdgeColoring]], m: int) -> EdgeColoring:
    """Merge colorings of edge-disjoint pieces given as ``(edge_map, coloring)``."""
    out: dict[int, int] = {}
    for emap, col in parts:
        for i, e in enumerate(emap):
            out[e] = col[i]
    return EdgeColoring.from_mapping(m, out)
