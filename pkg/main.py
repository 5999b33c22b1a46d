import argparse
import os
import sys
from pathlib import Path
import yaml
from loguru import logger

# Initialise quiet-by-default logging for the command line
from tools.logging_setup import setup_logging
setup_logging()

# Local modules
from algebra.parser import format_algebra, load_algebra
from reps.decompose import decompose
from reps.homs import configure_search
from reps.literals import diagram, format_module, parse_module
from reps.presentation import tau
from qa.config import load_verify_config
from qa.suites import run_suite, suite_names
from extension.context import context_from_algebras, one_point_extension
from extension.maps import e_map
from tilting.completion import complements
from tilting.hasse import hasse
from tilting.mutation import left_mutation, summand_position
from tilting.pairs import parse_pair
from tools.config_loader import load_config
from tools.errors import QTauError
from tools.export import export_dot, poset_to_json


def parse_args(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="qtau", description="Support tau-tilting posets and one-point extensions")
    parser.add_argument(
        "--config",
        type=str,
        default="config.yml",
        help="Path to config.yml (default: ./config.yml).",
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Log pipeline steps to the console at INFO level.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hasse", help="Enumerate the Hasse quiver of support tau-tilting pairs.")
    p.add_argument("file", help="Algebra file (.qa).")
    p.add_argument("--max-nodes", type=int, default=None, help="Node cap (default: poset.max_nodes).")
    p.add_argument("--dot", type=str, default=None, help="Write a Graphviz DOT file here.")
    p.add_argument("--json", type=str, default=None, help="Write the poset as JSON here.")
    p.add_argument(
        "--base",
        type=str,
        default=None,
        help="Algebra file of B when FILE is B[P0]; the image of e is highlighted in the DOT output.",
    )

    p = sub.add_parser("tau", help="Print the Auslander-Reiten translate of a module.")
    p.add_argument("file")
    p.add_argument("module", help="Module literal, e.g. 'uniserial:3>2>1'.")

    p = sub.add_parser("extend", help="Write the one-point extension B[P0] as an algebra file.")
    p.add_argument("file")
    p.add_argument("--at", type=str, required=True, help="Comma-separated vertices of the summands of P0.")
    p.add_argument("--out", type=str, required=True, help="Output algebra file.")
    p.add_argument("--names", type=str, default=None, help="Comma-separated names of the new arrows.")
    p.add_argument("--vertex", type=str, default=None, help="Id of the new vertex.")

    p = sub.add_parser("mutate", help="Left mutation of a support tau-tilting pair.")
    p.add_argument("file")
    p.add_argument("pair", help="Pair literal, e.g. 'p:1 + p:2 | 3'.")
    p.add_argument("--at", type=str, required=True, help="Summand position, or a module literal of the summand.")

    p = sub.add_parser("complements", help="The two completions of an almost complete pair.")
    p.add_argument("file")
    p.add_argument("pair")

    p = sub.add_parser("decompose", help="Indecomposable summands of a module with multiplicities.")
    p.add_argument("file")
    p.add_argument("module")

    p = sub.add_parser("verify-paper", help="Run a verification suite.")
    p.add_argument("suite", choices=suite_names())
    p.add_argument("--report-dir", type=str, default=None, help="Write <suite>.json and <suite>.md here.")

    return parser.parse_args(argv)


def _csv(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def cmd_hasse(args, config) -> int:
    algebra = load_algebra(args.file, cap=config["algebra"]["length_cap"])
    max_nodes = args.max_nodes or config["poset"]["max_nodes"]
    poset = hasse(algebra, max_nodes=max_nodes, workers=config["poset"]["workers"])
    print(f"{algebra.name}: {len(poset)} nodes, {len(poset.arrows)} arrows, complete={poset.complete}")
    if args.json:
        Path(args.json).write_text(poset_to_json(poset), encoding="utf-8")
        logger.info(f"Poset JSON written to {args.json}")
    if args.dot:
        highlight = None
        if args.base:
            base = load_algebra(args.base, cap=config["algebra"]["length_cap"])
            ctx = context_from_algebras(base, algebra)
            base_poset = hasse(base, max_nodes=max_nodes, workers=config["poset"]["workers"])
            highlight = [poset.index_of(e_map(ctx, node)) for node in base_poset.nodes]
            highlight = [i for i in highlight if i is not None]
        Path(args.dot).write_text(export_dot(poset, highlight), encoding="utf-8")
        logger.info(f"DOT written to {args.dot}")
    return 0


def cmd_tau(args, config) -> int:
    algebra = load_algebra(args.file, cap=config["algebra"]["length_cap"])
    module = parse_module(algebra, args.module)
    translate = tau(module)
    print(f"tau {diagram(module)} = {diagram(translate)}  dims {translate.dim_vector}")
    print(format_module(translate))
    return 0


def cmd_extend(args, config) -> int:
    algebra = load_algebra(args.file, cap=config["algebra"]["length_cap"])
    names = _csv(args.names) if args.names else None
    ctx = one_point_extension(algebra, _csv(args.at), vertex=args.vertex, names=names, name=Path(args.out).stem)
    Path(args.out).write_text(format_algebra(ctx.A), encoding="utf-8")
    sidecar = f"{args.out}.map.yml"
    with open(sidecar, "w", encoding="utf-8") as f:
        yaml.safe_dump(ctx.describe(), f, sort_keys=False)
    print(f"{ctx.A.name}: new vertex {ctx.v}, dim {ctx.A.dim}; written to {args.out} and {sidecar}")
    return 0


def cmd_mutate(args, config) -> int:
    algebra = load_algebra(args.file, cap=config["algebra"]["length_cap"])
    pair = parse_pair(algebra, args.pair)
    if args.at.isdigit():
        position = int(args.at)
    else:
        position = summand_position(pair, parse_module(algebra, args.at))
    print(left_mutation(pair, position).label())
    return 0


def cmd_complements(args, config) -> int:
    algebra = load_algebra(args.file, cap=config["algebra"]["length_cap"])
    almost = parse_pair(algebra, args.pair)
    larger, smaller = complements(almost)
    print(f"larger:  {larger.label()}")
    print(f"smaller: {smaller.label()}")
    return 0


def cmd_decompose(args, config) -> int:
    algebra = load_algebra(args.file, cap=config["algebra"]["length_cap"])
    parts = decompose(parse_module(algebra, args.module)).parts
    if not parts:
        print("0")
    for module, multiplicity in parts:
        print(f"{multiplicity} x {diagram(module)}  dims {module.dim_vector}")
    return 0


def cmd_verify(args, config) -> int:
    verify_config = load_verify_config(config)
    verify_config["max_nodes"] = config["poset"]["max_nodes"]
    report = run_suite(args.suite, verify_config)
    if args.report_dir:
        report.write(args.report_dir)
    counts = report.counts()
    print(f"{report.suite}: {counts['PASS']} passed, {counts['FAIL']} failed, {counts['SKIP']} skipped")
    for check in report.failures:
        print(f"  FAIL {check.check_id}: {check.details}")
    return 0 if report.ok else 1


COMMANDS = {
    "hasse": cmd_hasse,
    "tau": cmd_tau,
    "extend": cmd_extend,
    "mutate": cmd_mutate,
    "complements": cmd_complements,
    "decompose": cmd_decompose,
    "verify-paper": cmd_verify,
}


def main(argv=None) -> int:
    args = parse_args(argv)
    config = load_config(args.config)
    log_file = setup_logging(config["general"]["log_dir"], "INFO" if args.verbose else config["general"]["log_level"])
    logger.debug(f"qtau {args.command}: config {args.config}, log file {log_file}")
    configure_search(config["linalg"]["seed"], config["linalg"]["search_rounds"])
    try:
        return COMMANDS[args.command](args, config)
    except (QTauError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        return 1


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.warning("Interrupted by user (Ctrl+C). Exiting...")
        try:
            sys.exit(130)
        except SystemExit:
            os._exit(130)
