"""
Command-line argument handling for threearc
"""

import argparse
import logging
import sys
from typing import List, Optional

from threearc.config.settings import load_settings
from threearc.core.errors import SettingsError

# Define constants
COMMANDS = ["xgraph", "check", "hamcycle", "hampath", "iterate", "verify", "sweep"]
SWEEP_SUITES = ["theorem1", "hatgraph", "lemma", "oddpaths", "paths", "cycles", "repair"]
DEFAULT_SWEEP_SUITES = ["theorem1", "hatgraph", "lemma", "oddpaths", "paths", "repair"]
EXIT_OK = 0
EXIT_HYPOTHESIS = 1
EXIT_INPUT = 2
EXIT_CONSTRUCTION = 3


def _common_parser() -> argparse.ArgumentParser:
    """Flags shared by every subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true",
                        help="Enable verbose output")
    common.add_argument("--log-file", dest="log_file",
                        help="Also write the log to this file")
    common.add_argument("--config", dest="config",
                        help="YAML settings file")
    common.add_argument("--max-vertices", dest="max_vertices", type=int,
                        help="Refuse to build graphs with more vertices than this")
    common.add_argument("--oracle-max-vertices", dest="oracle_max_vertices", type=int,
                        help="Largest graph the brute-force oracles accept")
    common.add_argument("--seedless-deterministic", dest="seedless_deterministic",
                        action="store_true", default=True,
                        help="Deterministic output (always on; randomness only via sweep --shuffle)")
    return common


def build_parser() -> argparse.ArgumentParser:
    """The full threearc argument parser"""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="threearc",
        description="3-arc graphs with certified Hamilton cycles and paths",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(
            name, parents=[common], help=help_text,
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )

    xgraph = command("xgraph", "Print the 3-arc graph X(G) as an edge list")
    xgraph.add_argument("graph", help="Edge-list file of G")
    xgraph.add_argument("--emit-arc-index", dest="emit_arc_index", action="store_true",
                        help="Append the arc index as '#' comment lines")

    check = command("check", "Report the Hamilton cycle conditions of G")
    check.add_argument("graph", help="Edge-list file of G")
    check.add_argument("--paths", action="store_true",
                       help="Also report the Hamilton path hypotheses")

    hamcycle = command("hamcycle", "Print a certified Hamilton cycle of X(G)")
    hamcycle.add_argument("graph", help="Edge-list file of G")
    hamcycle.add_argument("--output", help="Also write a certificate file")

    hampath = command("hampath", "Print a certified Hamilton path of X(G) between two arcs")
    hampath.add_argument("graph", help="Edge-list file of G")
    for name in ("tail1", "head1", "tail2", "head2"):
        hampath.add_argument(name, type=int)
    hampath.add_argument("--output", help="Also write a certificate file")

    iterate = command("iterate", "Print the sizes of X^i(G) for i = 1..levels")
    iterate.add_argument("graph", help="Edge-list file of G")
    iterate.add_argument("levels", type=int, help="Number of iterations")
    iterate.add_argument("--certify", action="store_true",
                         help="Certify a Hamilton cycle at every level")
    iterate.add_argument("--certify-paths", dest="certify_paths", action="store_true",
                         help="Certify Hamilton paths for all arc pairs where the hypotheses hold")

    verify = command("verify", "Validate a certificate against G")
    verify.add_argument("graph", help="Edge-list file of G")
    verify.add_argument("certificate", help="Certificate file")

    sweep = command("sweep", "Run the exhaustive equivalence suites")
    sweep.add_argument("suites", nargs="*", default=[],
                       help=f"Suites to run ({', '.join(SWEEP_SUITES)}); default all but cycles")
    sweep.add_argument("--max-order", dest="max_order", type=int,
                       help="Largest atlas graph order for the theorem1 and hatgraph suites")
    sweep.add_argument("--workers", type=int, help="Worker processes")
    sweep.add_argument("--repair-trials", dest="repair_trials", type=int,
                       help="Fuzzed tours for the repair suite")
    sweep.add_argument("--shuffle", type=int, dest="seed",
                       help="Seed for the repair fuzzing")
    sweep.add_argument("--graph", dest="graph",
                       help="Run the paths and cycles suites on this graph instead")
    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments"""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Process and validate arguments
    args = _process_arguments(args)

    return args


def _process_arguments(args: argparse.Namespace) -> argparse.Namespace:
    """Merge the settings file into the parsed arguments and validate them"""
    try:
        settings = load_settings(args.config)
    except SettingsError as e:
        logging.error(f"Settings error: {e}")
        sys.exit(EXIT_INPUT)

    for key in ("max_vertices", "oracle_max_vertices", "log_file"):
        if getattr(args, key, None) is None:
            setattr(args, key, settings[key])

    if args.command == "sweep":
        for key in ("max_order", "workers", "repair_trials", "seed"):
            if getattr(args, key, None) is None:
                setattr(args, key, settings["sweep"][key])
        if not args.suites:
            args.suites = list(DEFAULT_SWEEP_SUITES)
        for suite in args.suites:
            if suite not in SWEEP_SUITES:
                logging.error(f"Unknown sweep suite: {suite}")
                logging.error(f"Supported suites: {', '.join(SWEEP_SUITES)}")
                sys.exit(EXIT_INPUT)
        if args.workers < 1:
            logging.error(f"Worker count must be positive, got {args.workers}")
            sys.exit(EXIT_INPUT)

    if args.max_vertices < 1 or args.oracle_max_vertices < 1:
        logging.error("Vertex caps must be positive")
        sys.exit(EXIT_INPUT)

    if args.command == "iterate" and args.levels < 1:
        logging.error(f"Iteration count must be positive, got {args.levels}")
        sys.exit(EXIT_INPUT)

    return args
