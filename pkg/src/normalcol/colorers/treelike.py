"""Normal 6-edge-colorings of treelike snarks.

Each 5-zone splits into its 3-path (t_lo, t_mid, t_hi, where t_mid is the
tree leaf) and the remaining eight "z" vertices. Contracting both gives a
4-regular graph whose underlying simple graph is the cycle t, z, t, z, ...
The z parts get colors from {1, 2, 3}, the tree and the 3-paths get colors
from {4, 5, 6}, and each z part is then filled in from one of six block
templates.

Block geometry: z02 and z20 attach to the "left" 3-path (the next copy's),
z22 and z00 to the "right" one (the block's own). Blocks are walked with
decreasing copy index, so the left 3-path is always already colored.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..coloring import EdgeClass, EdgeColoring, classify_edge
from ..generators import HalinSpec, TreelikeSnark, treelike_snark
from ..graph import Multigraph, PreconditionError, check_four_regular, contract
from .certificate import Certificate, GuaranteeViolation, certify

INTERNAL = (
    ("z00", "z10"), ("z10", "z20"), ("z02", "z12"), ("z12", "z22"), ("z01", "z02"),
    ("z00", "z01"), ("z21", "z22"), ("z20", "z21"), ("z10", "z12"), ("z01", "z21"),
)

# chain automorphism of the block: mirrors the drawing and swaps the ends of both 3-paths
SIGMA = {
    "z02": "z20", "z20": "z02", "z00": "z22", "z22": "z00", "z01": "z21", "z21": "z01",
    "z10": "z12", "z12": "z10", "t_lo": "t_hi", "t_hi": "t_lo", "t_mid": "t_mid",
}


@dataclass(frozen=True)
class BlockTemplate:
    """Symbolic block coloring over a, b, c (from 1..3) and alpha, beta, gamma (from 4..6).

    ``left`` and ``right`` give the 3-path colors as (t_hi-t_mid, t_mid-t_lo,
    pendant). ``right_stub`` names the color of the right 3-path's edges to
    the following block.
    """

    case: str
    internal: tuple[str, ...]
    left: tuple[str, str, str]
    right: tuple[str, str, str]
    right_stub: str

    def edge_symbols(self) -> dict[tuple[str, str], str]:
        return dict(zip(INTERNAL, self.internal))


_AB_LEFT = ("beta", "gamma", "alpha")
_C_LEFT = ("gamma", "beta", "alpha")
_C_INTERNAL = ("c", "b", "c", "b", "beta", "gamma", "gamma", "beta", "alpha", "alpha")

TEMPLATES = {
    t.case: t
    for t in (
        BlockTemplate("A1", ("b", "c", "b", "c", "beta", "gamma", "gamma", "beta", "alpha", "alpha"),
                      _AB_LEFT, ("beta", "gamma", "alpha"), "b"),
        BlockTemplate("A2", ("b", "c", "c", "b", "gamma", "alpha", "gamma", "alpha", "beta", "beta"),
                      _AB_LEFT, ("gamma", "alpha", "beta"), "b"),
        BlockTemplate("B1", ("b", "c", "c", "b", "alpha", "beta", "alpha", "beta", "gamma", "gamma"),
                      _AB_LEFT, ("beta", "gamma", "alpha"), "c"),
        BlockTemplate("B2", ("b", "c", "c", "b", "alpha", "beta", "beta", "alpha", "gamma", "gamma"),
                      _AB_LEFT, ("alpha", "gamma", "beta"), "c"),
        BlockTemplate("C1", _C_INTERNAL, _C_LEFT, ("beta", "gamma", "alpha"), "c"),
        BlockTemplate("C2", _C_INTERNAL, _C_LEFT, ("alpha", "gamma", "beta"), "c"),
    )
}


def _mirror_edge(e: tuple[str, str]) -> tuple[str, str]:
    a, b = SIGMA[e[0]], SIGMA[e[1]]
    return (a, b) if (a, b) in INTERNAL else (b, a)


# ---------------------------------------------------------------------------
# self-check


def _local_check(t: BlockTemplate, names: dict[str, int]) -> list[str]:
    """Embed one instantiated block between its two 3-paths and list the non-normal edges."""
    col = {k: names[v] for k, v in zip(INTERNAL, t.internal)}
    vid = {name: i for i, name in enumerate(
        ["z00", "z10", "z20", "z01", "z21", "z02", "z12", "z22", "L_hi", "L_mid", "L_lo", "R_hi", "R_mid", "R_lo"])}
    edges, colors, labels = [], [], []

    def add(u, v, c, label):
        for x in (u, v):
            if x not in vid:
                vid[x] = len(vid)
        edges.append((vid[u], vid[v]))
        colors.append(c)
        labels.append(label)

    for (u, v), c in col.items():
        add(u, v, c, u + v)
    a = names["a"]
    add("z02", "L_hi", a, "z02-left")
    add("z20", "L_lo", a, "z20-left")
    add("z22", "R_hi", a, "z22-right")
    add("z00", "R_lo", a, "z00-right")
    lh, ll, lp = (names[s] for s in t.left)
    rh, rl, rp = (names[s] for s in t.right)
    add("L_hi", "L_mid", lh, "left-hi")
    add("L_mid", "L_lo", ll, "left-lo")
    add("R_hi", "R_mid", rh, "right-hi")
    add("R_mid", "R_lo", rl, "right-lo")
    # edges leaving the window; their far ends are never checked
    add("L_mid", "dummy_lp", lp, "left-pendant")
    add("R_mid", "dummy_rp", rp, "right-pendant")
    add("L_hi", "dummy_l1", names["b"], "left-stub")
    add("L_lo", "dummy_l2", names["b"], "left-stub")
    add("R_hi", "dummy_r1", names[t.right_stub], "right-stub")
    add("R_lo", "dummy_r2", names[t.right_stub], "right-stub")
    g = Multigraph(len(vid), edges)
    bad = []
    for v in range(g.n):
        cs = [colors[e] for e in g.incident(v)]
        if len(cs) != len(set(cs)):
            bad.append(f"improper at vertex {v}")
    for e, (u, v) in enumerate(g.edges):
        if g.degree(u) < 3 or g.degree(v) < 3:
            continue
        if classify_edge(g, colors, e) is EdgeClass.NEITHER:
            bad.append(labels[e])
    return bad


def template_self_check() -> dict[str, int]:
    """Instantiate every template with all 36 parameter choices; returns failures per case."""
    failures = {}
    for case, t in TEMPLATES.items():
        count = 0
        for abc in permutations((1, 2, 3)):
            for greek in permutations((4, 5, 6)):
                names = dict(zip(("a", "b", "c"), abc)) | dict(zip(("alpha", "beta", "gamma"), greek))
                if _local_check(t, names):
                    count += 1
        failures[case] = count
    return failures


# ---------------------------------------------------------------------------
# the coloring


def z_coloring(n: int) -> tuple[int, ...]:
    """Colors of z_1 .. z_n: z_1 = 1, z_n = 2, the rest alternate 3 (even index) and 1 (odd)."""
    if n < 3:
        raise PreconditionError("need at least 3 blocks")
    return tuple(1 if j == 1 else 2 if j == n else 3 if j % 2 == 0 else 1 for j in range(1, n + 1))


def tree_coloring(tree: Multigraph) -> dict[int, int]:
    """Greedy proper edge coloring of a tree of maximum degree 3 with colors 4, 5, 6."""
    col: dict[int, int] = {}
    seen = {0}
    queue = [0]
    while queue:
        v = queue.pop(0)
        used = {col[e] for e in tree.incident(v) if e in col}
        free = [c for c in (4, 5, 6) if c not in used]
        for e in tree.incident(v):
            if e in col:
                continue
            col[e] = free.pop(0)
            w = tree.other(e, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return col


def contract_blocks(ts: TreelikeSnark) -> Multigraph:
    """The 4-regular graph on t_1, z_1, ..., t_n, z_n."""
    leaves = set(ts.spec.leaf_order)
    inner = {ts.tree_vertex[v] for v in range(ts.spec.tree.n) if v not in leaves}
    keep = [v for v in range(ts.graph.n) if v not in inner]
    sub, vmap, _ = ts.graph.induced(keep)
    pos = {old: new for new, old in enumerate(vmap)}
    parts = []
    for blk in ts.blocks:
        parts.append([pos[blk[x]] for x in ("t_lo", "t_mid", "t_hi")])
        parts.append([pos[blk[x]] for x in blk if x.startswith("z")])
    h, _, _ = contract(sub, parts)
    return check_four_regular(h)


def _fill_block(case_family: str, a: int, b: int, c: int, left: tuple[int, int, int],
                right_pendant: int, right_fixed: tuple[int, int] | None = None):
    """Choose orientation and subcase; return (case, mirrored, internal colors, right orientation)."""
    hi, lo, p = left
    for mirrored in (False, True):
        t_hi, t_lo = (lo, hi) if mirrored else (hi, lo)
        if case_family == "C":
            names = {"gamma": t_hi, "beta": t_lo, "alpha": p}
        else:
            names = {"beta": t_hi, "gamma": t_lo, "alpha": p}
        if right_pendant == names["alpha"]:
            sub = "1"
        elif right_pendant == names["beta"]:
            sub = "2"
        else:
            continue
        t = TEMPLATES[case_family + sub]
        names.update(a=a, b=b, c=c)
        r_hi, r_lo = names[t.right[0]], names[t.right[1]]
        right = (r_lo, r_hi) if mirrored else (r_hi, r_lo)
        if right_fixed is not None and right != right_fixed:
            continue
        internal = {}
        for e, s in t.edge_symbols().items():
            internal[_mirror_edge(e) if mirrored else e] = names[s]
        return t.case, mirrored, internal, right
    raise GuaranteeViolation(f"no {case_family} template fits the block boundary")


def color_treelike(spec: HalinSpec) -> Certificate:
    ts = treelike_snark(spec)
    g, n = ts.graph, spec.leaves
    h = contract_blocks(ts)
    if h.n != 2 * n:
        raise AssertionError("contracted graph has the wrong order")

    zpath = z_coloring(n)
    # path-order block z_j is copy n - j, so copy i has color zpath[n - i - 1]
    zc = [zpath[n - i - 1] for i in range(n)]
    ft = tree_coloring(spec.tree)
    col = [0] * g.m
    for te, c in ft.items():
        col[ts.tree_edge[te]] = c

    def edge(i: int, x: str, y: str) -> int:
        (e,) = g.edges_between(ts.blocks[i][x], ts.blocks[i][y])
        return e

    def cross(i: int, x: str, y: str) -> int:
        (e,) = g.edges_between(ts.blocks[i][x], ts.blocks[(i + 1) % n][y])
        return e

    pendant = []
    for i in range(n):
        leaf = spec.leaf_order[i]
        (te,) = spec.tree.incident(leaf)
        pendant.append(ft[te])
    for i in range(n):
        for e in (edge(i, "z00", "t_lo"), edge(i, "z22", "t_hi"), cross(i, "z20", "t_lo"), cross(i, "z02", "t_hi")):
            col[e] = zc[i]

    others = sorted({4, 5, 6} - {pendant[0]})
    orient: dict[int, tuple[int, int]] = {0: (others[0], others[1])}
    initial = orient[0]
    cases: dict[int, str] = {}
    internals: dict[int, dict] = {}

    def left_of(i: int) -> tuple[int, int, int]:
        j = (i + 1) % n
        return (*orient[j], pendant[j])

    for i in range(n - 1, -1, -1):
        a, b, r = zc[i], zc[(i + 1) % n], zc[(i - 1) % n]
        family = "A" if r == b else "B"
        c = r if family == "B" else ({1, 2, 3} - {a, b}).pop()
        case, mirrored, internal, right = _fill_block(family, a, b, c, left_of(i), pendant[i])
        cases[i] = case + ("*" if mirrored else "")
        internals[i] = internal
        orient[i] = right
    flipped = orient[0] != initial
    if flipped:
        i = n - 1
        a, b, r = zc[i], zc[0], zc[i - 1]
        case, mirrored, internal, _ = _fill_block("C", a, b, r, left_of(i), pendant[i], right_fixed=orient[i])
        cases[i] = case + ("*" if mirrored else "")
        internals[i] = internal

    for i in range(n):
        for (x, y), c in internals[i].items():
            col[edge(i, x, y)] = c
        hi, lo = orient[i]
        col[edge(i, "t_mid", "t_hi")] = hi
        col[edge(i, "t_mid", "t_lo")] = lo

    walk = [cases[n - j] for j in range(1, n + 1)]
    trace = {"z_coloring": list(zpath), "cases": walk, "flipped": flipped}
    return certify(g, EdgeColoring(col, 6), "treelike", trace)
