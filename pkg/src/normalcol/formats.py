"""Text formats: graph files, coloring files and DOT export.

Graph file::

    # comments start with '#'
    # meta family=cycle-perm n=7 perm=0,2,4,6,1,3,5
    p cub <n> <m>
    e <u> <v>        (m lines, 0-based, edge index = line order)

``# meta`` lines carry optional key=value construction data (used to
recover cycle permutation and treelike specs). Coloring file: one line
``c <edge> <color>`` per edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import EdgeColoring
from .graph import Multigraph


class FormatError(ValueError):
    pass


@dataclass
class GraphFile:
    graph: Multigraph
    meta: dict[str, str] = field(default_factory=dict)


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> GraphFile:
    header = None
    edges: list[tuple[int, int]] = []
    meta: dict[str, str] = {}
    for lineno, line in _lines(text):
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("meta "):
                for item in body[5:].split():
                    key, sep, value = item.partition("=")
                    if not sep:
                        raise FormatError(f"line {lineno}: meta item {item!r} is not key=value")
                    meta[key] = value
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise FormatError(f"line {lineno}: second header")
            if len(parts) != 4 or parts[1] != "cub":
                raise FormatError(f"line {lineno}: expected 'p cub <n> <m>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError as exc:
                raise FormatError(f"line {lineno}: bad header numbers") from exc
        elif parts[0] == "e":
            if header is None:
                raise FormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: bad vertex index") from exc
            edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if header is None:
        raise FormatError("missing 'p cub' header")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"header says {m} edges, found {len(edges)}")
    try:
        g = Multigraph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return GraphFile(g, meta)


def serialize_graph(g: Multigraph, meta: dict[str, str] | None = None, comment: str | None = None) -> str:
    out = []
    if comment:
        out.append(f"# {comment}")
    if meta:
        out.append("# meta " + " ".join(f"{k}={v}" for k, v in meta.items()))
    out.append(f"p cub {g.n} {g.m}")
    out.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_coloring(text: str, m: int) -> EdgeColoring:
    colors: dict[int, int] = {}
    for lineno, line in _lines(text):
        if line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "c" or len(parts) != 3:
            raise FormatError(f"line {lineno}: expected 'c <edge> <color>'")
        try:
            e, c = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: bad number") from exc
        if not 0 <= e < m:
            raise FormatError(f"line {lineno}: edge {e} out of range 0..{m - 1}")
        if c < 1:
            raise FormatError(f"line {lineno}: colors start at 1")
        if e in colors:
            raise FormatError(f"line {lineno}: edge {e} colored twice")
        colors[e] = c
    missing = [e for e in range(m) if e not in colors]
    if missing:
        raise FormatError(f"coloring is partial; uncolored edges {missing[:10]}")
    return EdgeColoring.from_list([colors[e] for e in range(m)])


def serialize_coloring(c: EdgeColoring) -> str:
    return "".join(f"c {e} {x}\n" for e, x in enumerate(c.colors))


# a fixed palette so colors look the same across files
PALETTE = ("black", "red", "blue", "green3", "orange", "purple", "brown", "cyan4", "magenta", "gold4")


def to_dot(g: Multigraph, coloring: EdgeColoring | None = None, groups: dict[int, str] | None = None,
           labels: dict[int, str] | None = None) -> str:
    """Undirected DOT; ``groups`` clusters vertices (blocks, triangles)."""
    out = ["graph G {", "  node [shape=point];"]
    clusters: dict[str, list[int]] = {}
    for v, grp in (groups or {}).items():
        clusters.setdefault(grp, []).append(v)
    for i, (grp, vs) in enumerate(sorted(clusters.items())):
        out.append(f'  subgraph cluster_{i} {{ label="{grp}"; ' + " ".join(str(v) + ";" for v in sorted(vs)) + " }")
    for v, name in sorted((labels or {}).items()):
        out.append(f'  {v} [xlabel="{name}"];')
    for e, (u, v) in enumerate(g.edges):
        attrs = [f'id="e{e}"']
        if coloring is not None:
            c = coloring[e]
            attrs += [f'label="{c}"', f'color="{PALETTE[(c - 1) % len(PALETTE)]}"']
        out.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out) + "\n"
