"""Command line interface: ``normalcol gen | verify | color | corpus``.

Exit codes: 0 the guarantee or check holds, 1 it does not (for the
colorers this means a bug), 2 bad input, broken precondition or budget
exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import generators as gen
from .budget import INDETERMINATE, SolveBudget
from .coloring import report
from .colorers.bound79 import color_bound_79
from .colorers.certificate import Certificate, GuaranteeViolation, certify
from .colorers.claw_free import color_claw_free
from .colorers.permutation import color_cycle_permutation
from .colorers.treelike import color_treelike
from .exact import exists_normal_k
from .flows import find_nz_flow, flow_to_coloring, merge_to_six, search_nonconflicting_flow
from .formats import FormatError, GraphFile, parse_coloring, parse_graph, serialize_coloring, serialize_graph, to_dot
from .graph import Multigraph, PreconditionError, check_cubic, is_bridgeless, is_claw_free

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT = 0, 1, 2

FIXED = {
    "petersen": gen.petersen,
    "k4": gen.k4,
    "theta": gen.theta,
    "k33": gen.k33,
    "prism": gen.prism,
    "mobius-kantor": gen.mobius_kantor,
}
FAMILIES = (*FIXED, "triangle-expand", "diamond-string", "ring-of-diamonds", "cycle-perm", "treelike", "random")
METHODS = ("auto", "claw-free", "cycle-perm", "treelike", "flow7", "bound79", "exact")
SUITES = ("normality", "bound79", "conjecture42")
CSV_FIELDS = ("file", "n", "m", "method", "k", "poor", "rich", "neither", "normal_fraction", "runtime_ms", "verdict")


class Indeterminate(Exception):
    pass


# ---------------------------------------------------------------------------
# specs carried in graph metadata


def tree_meta(spec: gen.HalinSpec) -> dict[str, str]:
    return {
        "family": "treelike",
        "tree": ",".join(f"{u}-{v}" for u, v in spec.tree.edges),
        "leaves": ",".join(map(str, spec.leaf_order)),
    }


def spec_from_meta(meta: dict[str, str]) -> gen.HalinSpec:
    try:
        pairs = [tuple(int(x) for x in item.split("-")) for item in meta["tree"].split(",")]
        order = tuple(int(x) for x in meta["leaves"].split(","))
    except (KeyError, ValueError) as exc:
        raise PreconditionError("treelike metadata needs tree=u-v,... and leaves=...") from exc
    n = 1 + max(max(p) for p in pairs)
    return gen.HalinSpec(Multigraph(n, pairs), order)


def detect_cycle_perm(g: Multigraph) -> gen.CyclePermSpec | None:
    """Recognise the labelled layout written by ``gen cycle-perm``."""
    if g.n % 2 or g.m != 3 * (g.n // 2) or g.n < 6:
        return None
    n = g.n // 2
    p = []
    for j in range(n):
        a, b = g.edges[2 * n + j]
        if a != n + j or not 0 <= b < n:
            return None
        p.append(b)
    try:
        spec = gen.CyclePermSpec(n, tuple(p))
    except PreconditionError:
        return None
    return spec if gen.cycle_permutation(spec).graph.edges == g.edges else None


def detect_treelike(gf: GraphFile) -> gen.HalinSpec | None:
    if gf.meta.get("family") != "treelike":
        return None
    spec = spec_from_meta(gf.meta)
    if gen.treelike_snark(spec).graph.edges != gf.graph.edges:
        raise PreconditionError("treelike metadata does not match the edge list")
    return spec


# ---------------------------------------------------------------------------
# gen


def _base_graph(name: str) -> Multigraph:
    if name in FIXED:
        return FIXED[name]()
    path = Path(name)
    if not path.exists():
        raise PreconditionError(f"--base {name!r} is neither a fixed family nor a file")
    return parse_graph(path.read_text()).graph


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise PreconditionError(f"expected comma-separated integers, got {text!r}") from exc


def build(args) -> tuple[Multigraph, dict[str, str], dict[int, str], dict[int, str]]:
    fam = args.family
    meta = {"family": fam}
    groups: dict[int, str] = {}
    labels: dict[int, str] = {}
    if fam in FIXED:
        g = FIXED[fam](args.n) if fam == "prism" and args.n else FIXED[fam]()
    elif fam == "triangle-expand":
        exp = gen.triangle_expand(_base_graph(args.base or "k4"))
        g = exp.graph
        for x, tri in enumerate(exp.triangles):
            for v in tri:
                groups[v] = f"triangle {x}"
    elif fam == "diamond-string":
        base = _base_graph(args.base or "k4")
        edge = args.edge if args.edge is not None else 0
        if not 0 <= edge < base.m:
            raise PreconditionError(f"--edge must be in 0..{base.m - 1}")
        g = gen.replace_edge_with_diamond_string(base, edge, args.k if args.k is not None else 1)
    elif fam == "ring-of-diamonds":
        g = gen.ring_of_diamonds(args.k if args.k is not None else 2)
    elif fam == "cycle-perm":
        if args.perm:
            p = _int_list(args.perm)
            spec = gen.CyclePermSpec(args.n or len(p), p)
        else:
            if not args.n:
                raise PreconditionError("cycle-perm needs --n (and optionally --perm)")
            spec = gen.random_permutation_spec(args.n, random.Random(args.seed))
        g = gen.cycle_permutation(spec).graph
        meta.update(n=str(spec.n), perm=",".join(map(str, spec.p)))
    elif fam == "treelike":
        if args.tree:
            tree = parse_graph(Path(args.tree).read_text()).graph
            order = _int_list(args.leaves) if args.leaves else gen.halin_spec(tree).leaf_order
            spec = gen.HalinSpec(tree, order)
        else:
            count = int(args.leaves) if args.leaves else 3
            spec = gen.halin_spec(gen.caterpillar_tree(count))
        ts = gen.treelike_snark(spec)
        g = ts.graph
        meta = tree_meta(spec)
        for i, blk in enumerate(ts.blocks):
            for name, v in blk.items():
                groups[v] = f"block {i}"
                labels[v] = f"{i}.{name}"
    elif fam == "random":
        if not args.n:
            raise PreconditionError("random needs --n")
        g = gen.random_bridgeless_cubic(args.n, args.seed)
        meta["seed"] = str(args.seed)
    else:
        raise PreconditionError(f"unknown family {fam!r}")
    return g, meta, groups, labels


def cmd_gen(args) -> int:
    g, meta, groups, labels = build(args)
    if args.dot:
        sys.stdout.write(to_dot(g, groups=groups, labels=labels))
    else:
        sys.stdout.write(serialize_graph(g, meta))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / color


def _read_graph(path: str) -> GraphFile:
    try:
        return parse_graph(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def cmd_verify(args) -> int:
    gf = _read_graph(args.graph)
    c = parse_coloring(Path(args.coloring).read_text(), gf.graph.m)
    d = report(gf.graph, c).as_dict()
    d["method"] = "verify"
    print(json.dumps(d))
    return EXIT_OK if d["proper"] and d["neither"] == 0 else EXIT_VIOLATED


def _budget(args) -> SolveBudget | None:
    if args.budget_nodes is None and args.budget_ms is None:
        return None
    return SolveBudget(args.budget_nodes, args.budget_ms)


def run_method(gf: GraphFile, method: str, kmax: int = 7, budget: SolveBudget | None = None) -> Certificate:
    g = gf.graph
    check_cubic(g)
    if method == "auto":
        if is_bridgeless(g) and is_claw_free(g):
            method = "claw-free"
        elif detect_cycle_perm(g) is not None:
            method = "cycle-perm"
        elif detect_treelike(gf) is not None:
            method = "treelike"
        else:
            method = "bound79"
    if method == "claw-free":
        return color_claw_free(g)
    if method == "cycle-perm":
        spec = detect_cycle_perm(g)
        if spec is None:
            raise PreconditionError("detect_cycle_perm failed: edge list is not in cycle-perm layout")
        return color_cycle_permutation(spec)
    if method == "treelike":
        spec = detect_treelike(gf)
        if spec is None:
            raise PreconditionError("detect_treelike failed: no treelike metadata in the graph file")
        return color_treelike(spec)
    if method == "flow7":
        f = find_nz_flow(g, 3, budget)
        if f is INDETERMINATE:
            raise Indeterminate("flow search ran out of budget")
        if f is None:
            raise PreconditionError("find_nz_flow failed: graph has a bridge")
        return certify(g, flow_to_coloring(g, f), "flow7", max_colors=7)
    if method == "bound79":
        return color_bound_79(g)
    if method == "exact":
        for k in range(3, kmax + 1):
            if budget is not None:
                budget.restart()
            c = exists_normal_k(g, k, budget)
            if c is INDETERMINATE:
                raise Indeterminate(f"exact search at k={k} ran out of budget")
            if c is not None:
                return certify(g, c, "exact", {"k": k}, max_colors=kmax)
        raise GuaranteeViolation(f"no normal coloring with at most {kmax} colors")
    raise PreconditionError(f"unknown method {method!r}")


def cmd_color(args) -> int:
    gf = _read_graph(args.graph)
    cert = run_method(gf, args.method, args.kmax, _budget(args))
    rep = cert.as_dict()
    if args.json:
        print(json.dumps({"coloring": list(cert.coloring.colors), "report": rep, "trace": cert.trace}, default=str))
    elif args.dot:
        sys.stdout.write(to_dot(gf.graph, cert.coloring))
    else:
        sys.stdout.write(serialize_coloring(cert.coloring))
    if args.report:
        Path(args.report).write_text(json.dumps(rep) + "\n")
    elif not args.json:
        print(json.dumps(rep), file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# corpus


def corpus_row(path: str, suite: str, kmax: int = 7, nodes: int | None = None, ms: float | None = None) -> dict:
    row = dict.fromkeys(CSV_FIELDS, "")
    row["file"] = os.path.basename(path)
    row["method"] = suite
    start = time.perf_counter()
    try:
        gf = parse_graph(Path(path).read_text())
        g = gf.graph
        row["n"], row["m"] = g.n, g.m
        budget = SolveBudget(nodes, ms) if nodes or ms else None
        if suite == "conjecture42":
            check_cubic(g)
            hit = search_nonconflicting_flow(g, budget)
            if hit is INDETERMINATE:
                row["verdict"] = "indeterminate"
                cert = None
            elif hit is None:
                row["verdict"] = "no-witness"
                cert = None
            else:
                f, a, b = hit
                cert = certify(g, merge_to_six(g, f, a, b), "conjecture42")
                row["verdict"] = "normal"
        else:
            cert = run_method(gf, "auto" if suite == "normality" else "bound79", kmax, budget)
            row["method"] = cert.method
            row["verdict"] = "normal" if cert.report.is_normal else "partial"
        if cert is not None:
            d = cert.as_dict()
            for key in ("k", "poor", "rich", "neither", "normal_fraction"):
                row[key] = d[key]
    except GuaranteeViolation:
        row["verdict"] = "violated"
    except Indeterminate:
        row["verdict"] = "indeterminate"
    except Exception:  # noqa: BLE001 - one bad file must not stop the run
        row["verdict"] = "error"
    row["runtime_ms"] = round((time.perf_counter() - start) * 1000)
    return row


def threads() -> int:
    try:
        return max(1, int(os.environ.get("NORMALCOL_THREADS", "1")))
    except ValueError:
        return 1


def run_corpus(directory: str, suite: str, kmax: int = 7, nodes=None, ms=None) -> list[dict]:
    d = Path(directory)
    if not d.is_dir():
        raise PreconditionError(f"{directory} is not a directory")
    files = sorted(str(p) for p in d.iterdir() if p.is_file() and not p.name.startswith("."))
    workers = min(threads(), max(1, len(files)))
    if workers == 1:
        return [corpus_row(f, suite, kmax, nodes, ms) for f in files]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(corpus_row, f, suite, kmax, nodes, ms) for f in files]
        return [fu.result() for fu in futures]


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_corpus(args) -> int:
    rows = run_corpus(args.dir, args.suite, args.kmax, args.budget_nodes, args.budget_ms)
    sys.stdout.write(rows_to_csv(rows))
    return EXIT_VIOLATED if any(r["verdict"] == "violated" for r in rows) else EXIT_OK


# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="normalcol", description="Normal edge-colorings of cubic graphs.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def budget_flags(sp):
        sp.add_argument("--budget-nodes", type=int, default=None, help="search node limit")
        sp.add_argument("--budget-ms", type=float, default=None, help="wall-clock limit per search")

    g = sub.add_parser("gen", help="write a graph file")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--perm", help="cycle-perm image list, e.g. 0,2,4,1,3")
    g.add_argument("--k", type=int, help="number of diamonds")
    g.add_argument("--edge", type=int, help="edge of the base graph to replace")
    g.add_argument("--base", help="fixed family name or graph file")
    g.add_argument("--tree", help="tree as a graph file")
    g.add_argument("--leaves", help="leaf count (default tree) or leaf order (with --tree)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--dot", action="store_true", help="emit DOT instead")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="report on a coloring")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("color", help="color a graph with a certified method")
    c.add_argument("graph")
    c.add_argument("--method", choices=METHODS, default="auto")
    c.add_argument("--kmax", type=int, default=7)
    c.add_argument("--json", action="store_true", help="single JSON document on stdout")
    c.add_argument("--dot", action="store_true", help="DOT with edge colors on stdout")
    c.add_argument("--report", help="write the report JSON here instead of stderr")
    budget_flags(c)
    c.set_defaults(func=cmd_color)

    k = sub.add_parser("corpus", help="run a suite over a directory of graph files")
    k.add_argument("dir")
    k.add_argument("--suite", choices=SUITES, default="normality")
    k.add_argument("--kmax", type=int, default=7)
    budget_flags(k)
    k.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuaranteeViolation as exc:
        print(f"normalcol: guarantee violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATED
    except Indeterminate as exc:
        print(f"normalcol: indeterminate: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FormatError, PreconditionError, OSError, ValueError) as exc:
        print(f"normalcol: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
