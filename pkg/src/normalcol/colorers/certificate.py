"""Verified coloring certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..coloring import EdgeColoring, NormalityReport, report
from ..graph import Multigraph


class GuaranteeViolation(AssertionError):
    """A colorer produced output that breaks the guarantee it promises."""


@dataclass(frozen=True)
class Certificate:
    graph: Multigraph
    coloring: EdgeColoring
    method: str
    trace: dict[str, Any] = field(default_factory=dict)
    report: NormalityReport = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "report", report(self.graph, self.coloring))

    @property
    def colors_used(self) -> int:
        return self.report.colors_used

    def as_dict(self) -> dict:
        d = self.report.as_dict()
        d["method"] = self.method
        return d


def certify(
    g: Multigraph,
    colors,
    method: str,
    trace: dict | None = None,
    max_colors: int = 6,
    all_normal: bool = True,
    min_normal: int | None = None,
) -> Certificate:
    """Build a certificate and check the method's promise on it."""
    c = colors if isinstance(colors, EdgeColoring) else EdgeColoring.from_list(list(colors))
    cert = Certificate(g, c, method, dict(trace or {}))
    r = cert.report
    if not r.proper:
        raise GuaranteeViolation(f"{method}: coloring is not proper")
    if r.colors_used > max_colors:
        raise GuaranteeViolation(f"{method}: uses {r.colors_used} colors, promised at most {max_colors}")
    if all_normal and r.neither:
        raise GuaranteeViolation(f"{method}: edges {r.non_normal_edges()[:8]} are not normal")
    if min_normal is not None and r.normal_count < min_normal:
        raise GuaranteeViolation(f"{method}: {r.normal_count} normal edges, promised at least {min_normal}")
    return cert


def ceil_fraction(num: int, m: int, den: int) -> int:
    """ceil(num * m / den) in integer arithmetic."""
    return -(-num * m // den) if m else 0

