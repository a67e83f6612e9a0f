"""Command-line front end.

Exit codes: 0 on success, 1 when the input is not β-acyclic, 2 on unreadable
or malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .domination import closed_neighborhood_hypergraph
from .engine import Solver
from .formats import ParseError, parse_graph, parse_hypergraph, render_hypergraph
from .hypergraph import Hypergraph
from .oracle import GeneratorConfig, TooLarge, enumerate_btr, enumerate_mtr, gen_beta_acyclic
from .ordering import NotBetaAcyclic, find_elimination_ordering

EXIT_OK, EXIT_NOT_BETA, EXIT_INPUT = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def run_count(H: Hypergraph, fill: str = "lazy") -> dict:
    """Count and collect the run report fields (count is a decimal string)."""
    start = time.perf_counter()
    ordering, states = None, 0
    if not H.edges:
        count = 1
    elif H.has_empty_edge:
        count = 0
    else:
        solver = Solver(H, fill=fill)
        ordering = solver.ordering
        count = solver.count()
        states = solver.stats.states
    return {
        "input": {"n": len(H.vertices), "m": len(H.edges)},
        "ordering": None if ordering is None else [H.name(v) for v in ordering],
        "count": str(count),
        "states": states,
        "wall_ms": (time.perf_counter() - start) * 1000.0,
    }


def _emit_count(report: dict, as_json: bool):
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print(report["count"])


def cmd_count_mtr(args) -> int:
    H = parse_hypergraph(_read(args.file))
    report = run_count(H, args.fill)
    report["input"]["kind"] = "hypergraph"
    _emit_count(report, args.json)
    return EXIT_OK


def cmd_count_mds(args) -> int:
    G = parse_graph(_read(args.file))
    nh = closed_neighborhood_hypergraph(G)
    try:
        report = run_count(nh.hypergraph, args.fill)
    except NotBetaAcyclic:
        print("input not supported (not recognized as strongly chordal via beta-acyclic N[G])",
              file=sys.stderr)
        return EXIT_NOT_BETA
    report["input"] = {"kind": "graph", "n": G.n, "m": len(G.edges)}
    report["twins"] = [[str(v + 1) for v in cls] for cls in nh.twin_classes()]
    _emit_count(report, args.json)
    return EXIT_OK


def cmd_check(args) -> int:
    H = parse_hypergraph(_read(args.file))
    try:
        ordering = find_elimination_ordering(H)
    except NotBetaAcyclic as exc:
        stuck = " ".join(H.name(v) for v in exc.remaining)
        print(f"not beta-acyclic (no nest point among: {stuck})", file=sys.stderr)
        return EXIT_NOT_BETA
    print(" ".join(H.name(v) for v in ordering))
    return EXIT_OK


def _names(H: Hypergraph, spec: str | None):
    if spec is None:
        return None
    names = [s for s in spec.replace(",", " ").split() if s]
    try:
        return {H.vertex_id(s) for s in names}
    except (KeyError, ValueError) as exc:
        raise ParseError(f"unknown vertex {exc}") from None


def cmd_enumerate(args) -> int:
    H = parse_hypergraph(_read(args.file))
    blocked, within = _names(H, args.blocked), _names(H, args.within)
    if blocked is None and within is None:
        family = enumerate_mtr(H)
    else:
        family = enumerate_btr(H, blocked or (), within)
    for T in sorted(sorted(T) for T in family):
        print(" ".join(H.name(v) for v in T) if T else "{}")
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = GeneratorConfig(args.n, args.m, args.seed, args.density, args.method)
    sys.stdout.write(render_hypergraph(gen_beta_acyclic(cfg)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mintrans", description="Count minimal transversals of beta-acyclic hypergraphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count-mtr", help="count minimal transversals of an HG file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--fill", choices=("lazy", "eager"), default="lazy")
    p.set_defaults(func=cmd_count_mtr)

    p = sub.add_parser("count-mds", help="count minimal dominating sets of a DIMACS graph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--fill", choices=("lazy", "eager"), default="lazy")
    p.set_defaults(func=cmd_count_mds)

    p = sub.add_parser("check", help="print a beta-elimination ordering")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list (blocked) minimal transversals by brute force")
    p.add_argument("file")
    p.add_argument("--blocked", metavar="B", help="comma-separated blocked vertices")
    p.add_argument("--within", metavar="S", help="comma-separated vertices transversals must lie in")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gen", help="print a random beta-acyclic hypergraph in HG format")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--method", choices=("reverse", "rejection"), default="reverse")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except NotBetaAcyclic as exc:
        print(f"not beta-acyclic: {exc}", file=sys.stderr)
        return EXIT_NOT_BETA
    except (ParseError, TooLarge, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
