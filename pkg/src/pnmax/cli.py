"""Command line: ``pnmax {compute,table,verify,conjecture,search}``.

Exit status is 0 on success, 1 when a check fails or a search finds a hit,
and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from pnmax.exact import SolveOptions, SolverLimitError
from pnmax.graph import FamilySpec, GraphError, generate, parse_edge_list, parse_graph6
from pnmax.harness import (CONJECTURES, RecordCache, Report, VerifyConfig, compute,
                           conjecture_report, espn_family_report, graph_hash, grid_dims,
                           parse_range, render_records, search, table_report, verify)
from pnmax.kinds import PN_KINDS, ParameterKind, parse_kinds
from pnmax.reference_tables import TABLE_KINDS


def _opts(args) -> SolveOptions:
    return SolveOptions(max_width=args.max_width, parallel_shards=args.threads)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=1, help="enumeration shards")
    p.add_argument("--max-width", type=int, default=26, help="largest order for subset enumeration")


def cmd_compute(args) -> int:
    if bool(args.family) == bool(args.file):
        print("give exactly one of --family or --file", file=sys.stderr)
        return 2
    spec = None
    if args.family:
        spec = FamilySpec.parse(args.family)
        g = generate(spec)
        descriptor = str(spec)
    else:
        text = Path(args.file).read_text()
        g = parse_graph6(text) if args.format == "graph6" else parse_edge_list(text)
        descriptor = f"file:{graph_hash(g)}"
    kinds = parse_kinds(args.kind)
    cache = RecordCache(args.cache) if args.cache else None
    records = compute(g, descriptor, kinds, _opts(args), args.method, grid_dims(spec), cache)
    sys.stdout.write(render_records(records, args.output))
    return 0


def cmd_table(args) -> int:
    if args.all:
        rep = Report()
        for t, kind in TABLE_KINDS.items():
            rep.lines.append(f"Table {t}")
            rep.extend(table_report(kind, range(2, 5), range(2, 10), args.paper_check,
                                    args.cross_check, _opts(args)))
    else:
        rep = table_report(ParameterKind.parse(args.kind), parse_range(args.m), parse_range(args.n),
                           args.paper_check, args.cross_check, _opts(args))
    sys.stdout.write(rep.text())
    return 0 if rep.ok else 1


def cmd_verify(args) -> int:
    cfg = VerifyConfig(seed=args.seed, max_n=args.max_n, graphs=args.graphs, trees=args.trees,
                       exhaustive_n=args.exhaustive_n, triples=args.triples, opts=_opts(args))
    rep = verify(args.suite, cfg)
    sys.stdout.write(rep.text())
    return 0 if rep.ok else 1


def cmd_conjecture(args) -> int:
    if args.which == "espn-tree":
        rep = espn_family_report(tuple(parse_range(args.range or "2..4")), _opts(args))
    else:
        span = parse_range(args.range) if args.range else None
        rep = conjecture_report(args.which, span)
    sys.stdout.write(rep.text())
    return 0 if rep.ok else 1


def cmd_search(args) -> int:
    rep = search(args.target, args.generator, args.budget, args.max_n, args.seed, args.min_n,
                 _opts(args), args.out)
    sys.stdout.write(rep.text())
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pnmax", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="compute parameters of one graph")
    p.add_argument("--family", help="family spec, e.g. grid:8,3 or double_star:3,4")
    p.add_argument("--file", help="graph file")
    p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p.add_argument("--kind", default=",".join(k.value for k in PN_KINDS))
    p.add_argument("--output", choices=["table", "csv", "json"], default="table")
    p.add_argument("--method", choices=["auto", "enumeration", "tree", "grid"], default="auto")
    p.add_argument("--cache", help="record cache directory")
    _add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="grid tables X(P_n x P_m)")
    p.add_argument("--kind", default="IPN")
    p.add_argument("--m", default="2..4", help="row range, e.g. 2..4")
    p.add_argument("--n", default="2..9", help="column range, e.g. 2..9")
    p.add_argument("--all", action="store_true", help="all six reference tables")
    p.add_argument("--paper-check", action="store_true")
    p.add_argument("--cross-check", type=int, default=0, metavar="MAX_ORDER",
                   help="also enumerate cells with n*m <= MAX_ORDER")
    _add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=["formulas", "inequalities", "tree-bound", "efficiency",
                                     "reductions", "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=11)
    p.add_argument("--graphs", type=int, default=200)
    p.add_argument("--trees", type=int, default=500)
    p.add_argument("--triples", type=int, default=200)
    p.add_argument("--exhaustive-n", type=int, default=6)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="check grid conjectures or the ESPN tree family")
    p.add_argument("which", choices=sorted(CONJECTURES) + ["espn-tree"])
    p.add_argument("--range", help="index range, e.g. 2..40")
    _add_common(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("search", help="search graphs for a target comparison")
    p.add_argument("--target", required=True, help="e.g. '2*ALPHA_STAR < IPN'")
    p.add_argument("--generator", choices=["random-graph", "random-tree", "all-graphs"],
                   default="random-graph")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="directory for hits (graph6 + records)")
    _add_common(p)
    p.set_defaults(func=cmd_search)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (GraphError, SolverLimitError, ValueError, OSError) as exc:
        print(f"pnmax: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
