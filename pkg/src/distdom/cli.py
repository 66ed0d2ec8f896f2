"""Command-line front end.

Exit codes: 0 success, 1 domain error (bad graph, wrong parameters),
2 theorem violation, 3 conjecture counterexample, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as cons
from . import harness
from .enumeration import EnumerationSpace, shard_of, stream
from .errors import GraphError, NotATree, ParameterOutOfRange
from .graph import Graph, is_tree
from .io import FORMATS, parse_graph, parse_graphs, serialize_graph, to_graph6
from .recognizers import (
    corona_base,
    in_B_d,
    in_F_d,
    in_Fprime_d,
    in_T_d,
    in_zeta1,
    is_corona,
    lemma34_check,
    lemma34_hypotheses,
    nonleaf_core,
)
from .solver import gamma, level_partition, verify_partition

EXIT_DOMAIN = 1
EXIT_USAGE = 64

_EXTENSIONS = {".g6": "graph6", ".graph6": "graph6", ".edges": "edgelist", ".el": "edgelist"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_input(path: str | None, fmt: str | None) -> tuple[str, str | None]:
    if path is None or path == "-":
        return sys.stdin.read(), fmt
    if fmt is None:
        fmt = _EXTENSIONS.get(Path(path).suffix.lower())
    return Path(path).read_text(), fmt


def _one_graph(args) -> Graph:
    text, fmt = _read_input(args.input, args.format)
    return parse_graph(text, fmt)


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


# --- subcommands ------------------------------------------------------------


def cmd_gamma(args) -> int:
    g = _one_graph(args)
    gw = gamma(g, (args.d, args.p))
    if args.json:
        print(json.dumps(gw.to_dict(), sort_keys=True))
    elif gw.finite:
        print(f"{int(gw.value)} {list(gw.witness)}")
    else:
        print("inf")
    return 0


def cmd_partition(args) -> int:
    g = _one_graph(args)
    parts = level_partition(g, args.d)
    for i, part in enumerate(parts):
        print(f"S{i}: {' '.join(map(str, part))}")
    print(f"verified: {str(verify_partition(g, parts, args.d)).lower()}")
    return 0


_STREAMS = {
    "zeta1": lambda n, d: cons.zeta1_members(n),
    "T_d": cons.family_T_d,
    "B_d": cons.family_B_d,
    "F_d": cons.family_F_d,
    "Fprime_d": cons.family_Fprime_d,
}


def _need(value, flag: str, kind: str):
    if value is None:
        raise ParameterOutOfRange(f"construct {kind} needs {flag}")
    return value


def cmd_construct(args) -> int:
    kind = args.kind
    if kind in _STREAMS:
        n = _need(args.max_order, "--max-order", kind)
        d = args.d if args.d is not None else 1
        if kind != "zeta1":
            _need(args.d, "--d", kind)
        graphs = [g for _, g in _STREAMS[kind](n, d)]
    elif kind == "corona":
        graphs = [cons.corona(cons.build(_need(args.h, "--h", kind)), _need(args.d, "--d", kind))[0]]
    elif kind == "subdivision":
        graphs = [cons.d_subdivision(cons.build(_need(args.h, "--h", kind)), _need(args.d, "--d", kind))]
    elif kind == "leafy-corona":
        graphs = [cons.leafy_corona(cons.build(_need(args.h, "--h", kind)), _need(args.r, "--r", kind))]
    else:
        graphs = [cons.build(kind)]
    _emit(graphs, args.output_format)
    return 0


def _emit(graphs: list[Graph], fmt: str) -> None:
    if fmt == "graph6":
        sys.stdout.write("".join(to_graph6(g) + "\n" for g in graphs))
    else:
        sys.stdout.write("\n".join(serialize_graph(g, "edgelist") for g in graphs))


def _tree_only(g: Graph, family: str) -> None:
    if not is_tree(g):
        raise NotATree(f"family {family} contains trees only")


def _recognize_one(g: Graph, family: str, d: int | None) -> dict:
    cert = None
    if family == "zeta1":
        member = in_zeta1(g)
    elif family in ("corona", "B_d", "T_d"):
        if d is None:
            raise ParameterOutOfRange(f"family {family} needs --d")
        if family == "B_d":
            member = in_B_d(g, d)
        elif family == "T_d":
            member = in_T_d(g, d)
        else:
            member = is_corona(g, d) is not None
        c = is_corona(g, d) if member else None
        if c is not None:
            cert = c.to_dict()
            cert["base"] = to_graph6(corona_base(g, c))
    elif family in ("F_d", "Fprime_d"):
        if d is None:
            raise ParameterOutOfRange(f"family {family} needs --d")
        _tree_only(g, family)
        member = in_F_d(g, d) if family == "F_d" else in_Fprime_d(g, d)
        core = nonleaf_core(g)
        if member and core is not None:
            cert = {"core": to_graph6(core)}
    elif family == "lemma34":
        if d is None:
            raise ParameterOutOfRange("lemma34 needs --d")
        member = lemma34_hypotheses(g, d)
        cert = {"violations": lemma34_check(g, d) if member else []}
    else:  # pragma: no cover - argparse restricts choices
        raise ParameterOutOfRange(f"unknown family {family}")
    return {"member": member, "certificate": cert}


def cmd_recognize(args) -> int:
    text, fmt = _read_input(args.input, args.format)
    for g in parse_graphs(text, fmt):
        print(json.dumps(_recognize_one(g, args.family, args.d), sort_keys=True))
    return 0


def cmd_enumerate(args) -> int:
    diam = None
    if args.diameter is not None:
        lo, _, hi = args.diameter.partition(",")
        try:
            diam = (int(lo), int(hi or lo))
        except ValueError:
            raise ParameterOutOfRange(f"bad --diameter {args.diameter!r}") from None
    if args.shard is not None and args.shard >= args.shards:
        raise ParameterOutOfRange(f"--shard must be below --shards ({args.shards})")
    space = EnumerationSpace(args.kind, args.n, args.leaves, diam)
    chosen = [
        (code, g)
        for code, g in stream(space)
        if args.shard is None or shard_of(code, args.shards) == args.shard
    ]
    if args.output_format == "code":
        sys.stdout.write("".join(code + "\n" for code, _ in chosen))
    else:
        _emit([g for _, g in chosen], args.output_format)
    return 0


def _write_reports(reports, out_dir: str) -> None:
    os.makedirs(out_dir, exist_ok=True)
    for r in reports:
        name = r.check if "d" not in r.params else f"{r.check}_d{r.params['d']}"
        Path(out_dir, name + ".json").write_text(r.to_json())
    Path(out_dir, "summary.tsv").write_text(harness.tsv_summary(reports))


def cmd_verify(args) -> int:
    if args.checks is not None:
        config = harness.default_config()
        config.checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    elif args.config in (None, "default"):
        config = harness.default_config()
    else:
        config = harness.parse_config(Path(args.config).read_text())
    if args.shards is not None:
        config.shards = args.shards
    if args.workers is not None:
        config.workers = args.workers
    reports = harness.run_suite(config)
    if args.out:
        _write_reports(reports, args.out)
    if args.json:
        sys.stdout.write(harness.suite_json(reports))
    else:
        sys.stdout.write(harness.tsv_summary(reports))
    return harness.suite_status(reports)


def cmd_conjecture(args) -> int:
    if args.d < 2:
        raise ParameterOutOfRange(
            "the conjecture needs d >= 2: at d = 1, K_(r,r) has gamma = r = n/2 without being in the family"
        )
    report = harness.check_conjecture(args.d, args.n_max, shards=args.shards, workers=args.workers)
    if args.out:
        _write_reports([report], args.out)
    sys.stdout.write(report.to_json())
    if report.status == harness.FAIL:
        return harness.EXIT_VIOLATION
    if report.status == harness.CONJECTURE_COUNTEREXAMPLE:
        return harness.EXIT_CONJECTURE
    return 0


# --- parser -------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file (default: stdin); .g6 means graph6")
    p.add_argument("--format", choices=FORMATS, help="input format (default: auto-detect)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="distdom",
        description="Exact distance packing domination, extremal families, and exhaustive checks.",
        epilog="exit codes: 0 ok, 1 domain error, 2 theorem violation, "
        "3 conjecture counterexample, 64 usage error",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gamma", help="exact gamma_d^p with its least witness")
    _add_input(p)
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--p", type=_positive, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("partition", help="split a bipartite graph into d+1 independent d-dominating sets")
    _add_input(p)
    p.add_argument("--d", type=_positive, required=True)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser(
        "construct",
        help="build a graph or a family stream",
        description="KIND is a graph spec (path:5, cycle:6, star:3, complete:4, complete_bipartite:3,3, "
        "double_star:2,2, gnkd:4,2,2, joined_stars:2,2,2, subdivided_star:3,2), an operation "
        "(corona, subdivision, leafy-corona) applied to --h, or a family stream "
        "(zeta1, T_d, B_d, F_d, Fprime_d) up to --max-order.",
    )
    p.add_argument("kind")
    p.add_argument("--h", help="graph spec for the base graph")
    p.add_argument("--d", type=_positive)
    p.add_argument("--r", type=_positive, help="extra leaves per vertex for leafy-corona")
    p.add_argument("--max-order", type=_positive)
    p.add_argument("--output-format", choices=FORMATS, default="edgelist")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("recognize", help="family membership with a certificate, one JSON line per graph")
    _add_input(p)
    p.add_argument(
        "--family", required=True, choices=["zeta1", "T_d", "B_d", "F_d", "Fprime_d", "corona", "lemma34"]
    )
    p.add_argument("--d", type=_positive)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("enumerate", help="isomorph-free trees or connected bipartite graphs")
    p.add_argument("--kind", choices=["trees", "bipartite"], default="trees")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--leaves", type=_positive)
    p.add_argument("--diameter", help="LO[,HI] inclusive range")
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--shard", type=_positive, help="emit only this shard index")
    p.add_argument("--output-format", choices=[*FORMATS, "code"], default="graph6")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the verification suite; prints the TSV summary")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--config", help="config file, or 'default'")
    src.add_argument("--checks", help="comma-separated check ids with default settings")
    p.add_argument("--shards", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--out", help="directory for per-check JSON reports and summary.tsv")
    p.add_argument("--json", action="store_true", help="print the JSON reports instead of TSV")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="scan connected bipartite graphs for conjecture counterexamples")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--n-max", type=_positive, default=8)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("shards", "workers"):
        if getattr(args, flag, None) is not None and getattr(args, flag) < 1:
            parser.error(f"--{flag} must be >= 1")
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
