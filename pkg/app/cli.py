# app/cli.py
"""Command-line front end: check, solve, propagate, verify, gallai, generate, catalog.

Exit codes: 0 success, 1 no satisfying set, 2 usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from contextlib import contextmanager
from typing import Dict, Iterator, List, Optional, TextIO

import pandas as pd

from app import services
from app.alliance import NEUTRAL_MODES, NEUTRALS_BOTH
from app.errors import AllianceLabError
from app.graph import GRAPH_FAMILIES, serialize_edge_list
from app.harness import GALLAI_READINGS, PROPOSITIONS
from app.solvers import AUTO, BRANCH_AND_BOUND, EXHAUSTIVE, MAX, MIN

LOG = logging.getLogger("app.cli")

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="edge-list file ('n m' header, then 'u v' lines)")
    src.add_argument("--graph-spec", help="generator spec kind:params, e.g. cycle:6 or random-gnp:10,1,2")
    p.add_argument("--seed", type=int, help="seed for random-gnp")


def _add_selection(p: argparse.ArgumentParser) -> None:
    p.add_argument("--name", help="catalog or direct parameter name")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE", help="parameter for --name (repeatable)")
    p.add_argument("--D", dest="D", help="raw member condition, e.g. '>=0'")
    p.add_argument("--O", dest="O", help="raw boundary condition, e.g. '>=2'")
    p.add_argument("--global", dest="is_global", action="store_true", help="raw spec must also dominate")
    p.add_argument("--nonempty", action="store_true", help="raw spec excludes the empty set")
    p.add_argument("--neutrals", help="neutral vertices, e.g. '1,3'")
    p.add_argument("--power", type=int, default=1, help="evaluate a raw spec in the r-th graph power")
    p.add_argument("--neutral-mode", choices=NEUTRAL_MODES, default=NEUTRALS_BOTH)


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="alliance-lab", description="(D,O)-alliance parameters: check, solve and verify")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="does a set satisfy a parameter")
    _add_graph_source(p)
    _add_selection(p)
    _add_format(p)
    p.add_argument("--set", default="", help="candidate set, e.g. '0,2'")

    p = sub.add_parser("solve", help="smallest or largest satisfying set")
    _add_graph_source(p)
    _add_selection(p)
    _add_format(p)
    p.add_argument("--objective", choices=(MIN, MAX), default=MIN)
    p.add_argument("--method", choices=(AUTO, EXHAUSTIVE, BRANCH_AND_BOUND), default=AUTO)
    p.add_argument("--stats", action="store_true", help="include subsets examined and elapsed time")

    p = sub.add_parser("propagate", help="majority or threshold propagation from a seed set")
    _add_graph_source(p)
    _add_format(p)
    p.add_argument("--seeds", default="", help="seed set, e.g. '0'")
    p.add_argument("--rounds", type=int, help="round budget (default: until stable)")
    p.add_argument("--thresholds", help="threshold map 'v:t,...' (default: majority rule)")
    p.add_argument("--strict", action="store_true", help="strict majority at exactly half")

    p = sub.add_parser("verify", help="compare direct definitions with their alliance forms")
    _add_format(p)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--prop", choices=sorted(PROPOSITIONS), help="one proposition (default: full errata scan)")
    p.add_argument("--family", choices=GRAPH_FAMILIES)
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--workers", type=int, help="worker processes (default: ALLIANCE_WORKERS or CPU count)")

    p = sub.add_parser("gallai", help="min 1/2-dominating + max 1/2-independent against n")
    _add_graph_source(p)
    _add_format(p)
    p.add_argument("--reading", choices=GALLAI_READINGS, default=GALLAI_READINGS[0])

    p = sub.add_parser("generate", help="print a generated graph as an edge list")
    _add_format(p)
    p.add_argument("spec", help="kind:params, e.g. cycle:6, complete-bipartite:2,3, random-gnp:10,1,2")
    p.add_argument("--seed", type=int)

    p = sub.add_parser("catalog", help="list catalog entries")
    _add_format(p)
    return parser


def _dumps(payload: Dict) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _load(args: argparse.Namespace):
    return services.load_graph(path=args.graph, graph_spec=args.graph_spec, seed=args.seed)


def _predicate(args: argparse.Namespace, g):
    params = services.parse_params(args.param)
    neutrals = services.parse_set(args.neutrals, g) if args.neutrals is not None else None
    predicate = services.resolve_predicate(
        args.name, params, args.D, args.O, args.is_global, args.nonempty, neutrals, args.power, args.neutral_mode
    )
    return predicate, params


def _cmd_check(args, out: TextIO, err: TextIO) -> int:
    g = _load(args)
    predicate, params = _predicate(args, g)
    result = services.run_check(g, services.parse_set(args.set, g), predicate, args.name, params)
    for w in result["warnings"]:
        print(f"warning: {w}", file=err)
    if args.format == "json":
        print(_dumps({"result": result["result"]}), file=out)
    else:
        print("true" if result["result"] else "false", file=out)
    return EXIT_OK


def _cmd_solve(args, out: TextIO, err: TextIO) -> int:
    g = _load(args)
    predicate, _ = _predicate(args, g)
    result = services.run_solve(g, predicate, args.objective, args.method, args.stats)
    if args.format == "json":
        print(_dumps(result), file=out)
    elif result["feasible"]:
        print(f"size: {result['size']}", file=out)
        print("witness: {" + ",".join(map(str, result["witness"])) + "}", file=out)
    else:
        print("infeasible", file=out)
    if args.format == "text" and args.stats:
        print(f"subsets_examined: {result['subsets_examined']}", file=out)
        print(f"elapsed: {result['elapsed']:.6f}s", file=out)
    return EXIT_OK if result["feasible"] else EXIT_INFEASIBLE


def _cmd_propagate(args, out: TextIO, err: TextIO) -> int:
    g = _load(args)
    result = services.run_propagate(g, services.parse_set(args.seeds, g), args.rounds, args.thresholds, args.strict)
    if args.format == "json":
        print(_dumps(result), file=out)
    else:
        print("final: {" + ",".join(map(str, result["final"])) + "}", file=out)
        print(f"rounds: {result['rounds_used']}", file=out)
    return EXIT_OK


def _cmd_verify(args, out: TextIO, err: TextIO) -> int:
    result = services.run_verify(args.nmax, args.prop, args.family, services.parse_params(args.param), args.workers)
    if args.format == "json":
        print(_dumps({"reports": result["reports"]}), file=out)
    else:
        out.write(result["text"])
    return EXIT_OK


def _cmd_gallai(args, out: TextIO, err: TextIO) -> int:
    g = _load(args)
    result = services.run_gallai(g, args.reading)
    for w in result.pop("warnings"):
        print(f"warning: {w}", file=err)
    if args.format == "json":
        print(_dumps(result), file=out)
    else:
        print(
            f"min_half_dom: {result['min_half_dom']}\nmax_half_ind: {result['max_half_ind']}\n"
            f"holds: {str(result['holds']).lower()}",
            file=out,
        )
    return EXIT_OK


def _cmd_generate(args, out: TextIO, err: TextIO) -> int:
    g = services.parse_graph_spec(args.spec, args.seed)
    if args.format == "json":
        print(_dumps({"n": g.n, "m": g.m, "edgelist": serialize_edge_list(g)}), file=out)
    else:
        out.write(serialize_edge_list(g))
    return EXIT_OK


def _cmd_catalog(args, out: TextIO, err: TextIO) -> int:
    entries = services.catalog_listing()
    if args.format == "json":
        print(_dumps({"entries": entries}), file=out)
    else:
        frame = pd.DataFrame(entries, columns=["name", "spec", "status", "min_degree_one"])
        print(frame.to_string(index=False), file=out)
    return EXIT_OK


COMMANDS = {
    "check": _cmd_check,
    "solve": _cmd_solve,
    "propagate": _cmd_propagate,
    "verify": _cmd_verify,
    "gallai": _cmd_gallai,
    "generate": _cmd_generate,
    "catalog": _cmd_catalog,
}


@contextmanager
def _cli_logging(err: TextIO) -> Iterator[None]:
    """Route app.* logs to err for one invocation, then restore the previous logger state."""
    level = os.getenv("ALLIANCE_LOG_LEVEL", "WARNING").upper()
    root, svc = logging.getLogger("app"), logging.getLogger("app.services")
    saved = (root.level, svc.level, list(svc.handlers))
    handler = logging.StreamHandler(err)
    handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(name)s - %(message)s"))
    root.addHandler(handler)
    root.setLevel(level)
    # services installs its own INFO handler for the API process; park it
    svc.handlers = []
    svc.setLevel(level)
    try:
        yield
    finally:
        root.removeHandler(handler)
        root.setLevel(saved[0])
        svc.setLevel(saved[1])
        svc.handlers = saved[2]


def run_cli(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(str(e), file=err)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    with _cli_logging(err):
        try:
            return COMMANDS[args.command](args, out, err)
        except AllianceLabError as e:
            print(f"error: {e}", file=err)
            return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
