#!/usr/bin/env python3
# threearc - Main Entry Point
# Revision: 1.0.0

"""
Command-line front end for threearc

Only this module writes to stdout. Library errors are logged and mapped
to exit codes: 1 for failed hypotheses, 2 for unreadable or malformed
input, 3 for internal construction failures.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from threearc.arcs.construct import three_arc_graph, three_arc_levels
from threearc.config.args import (
    EXIT_CONSTRUCTION,
    EXIT_HYPOTHESIS,
    EXIT_INPUT,
    EXIT_OK,
    parse_arguments,
)
from threearc.core.errors import (
    ConstructionError,
    GraphError,
    GraphFormatError,
    HypothesisError,
    OracleCapExceeded,
    SettingsError,
    SizeCapExceeded,
)
from threearc.core.graph import Arc, SimpleGraph
from threearc.core.io import read_graph_file, serialize_edge_list
from threearc.hamilton.conditions import check_conditions, check_path_hypotheses
from threearc.hamilton.cycle import hamilton_cycle_of_X
from threearc.hamilton.path import hamilton_path_of_X, hamilton_paths_all_pairs
from threearc.sweep.runner import render_summary, run_sweep
from threearc.utils.logger import setup_logging
from threearc.verify.certificates import CYCLE, PATH, read_certificate_file, verify_certificate, write_certificate

# Largest arc count for which iterate --certify-paths tries every ordered pair
DEFAULT_PATH_CERTIFY_MAX_ARCS = 64


def _load_graph(args: argparse.Namespace) -> SimpleGraph:
    graph = read_graph_file(args.graph)
    logging.debug(f"Loaded {args.graph}: {graph.vertex_count} vertices, {graph.edge_count} edges")
    return graph


def _check_size(graph: SimpleGraph, args: argparse.Namespace) -> None:
    if 2 * graph.edge_count > args.max_vertices:
        raise SizeCapExceeded(
            f"X(G) would have {2 * graph.edge_count} vertices, cap is {args.max_vertices}"
        )


def _write_output(path: Optional[str], kind: str, arcs) -> None:
    if not path:
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_certificate(kind, arcs))
    logging.info(f"Certificate written to {path}")


def cmd_xgraph(args: argparse.Namespace) -> int:
    """Print X(G) as an edge list"""
    graph = _load_graph(args)
    _check_size(graph, args)
    xgraph, index = three_arc_graph(graph)
    sys.stdout.write(serialize_edge_list(xgraph))
    if args.emit_arc_index:
        for line in index.serialize().splitlines():
            print(f"# {line}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    """Print the condition report; exit 1 when a condition fails"""
    graph = _load_graph(args)
    report = check_conditions(graph)
    print(report.render())
    ok = report.all_ok
    if args.paths:
        path_report = check_path_hypotheses(graph)
        print(path_report.render())
        print(f"X(G) Hamilton-connected by construction: {str(path_report.all_ok).lower()}")
        ok = ok and path_report.all_ok
    return EXIT_OK if ok else EXIT_HYPOTHESIS


def cmd_hamcycle(args: argparse.Namespace) -> int:
    """Print a certified Hamilton cycle of X(G)"""
    graph = _load_graph(args)
    _check_size(graph, args)
    cycle = hamilton_cycle_of_X(graph)
    print("\n".join(cycle.lines()))
    _write_output(args.output, CYCLE, cycle.arcs)
    return EXIT_OK


def cmd_hampath(args: argparse.Namespace) -> int:
    """Print a certified Hamilton path of X(G) between two arcs"""
    graph = _load_graph(args)
    _check_size(graph, args)
    path = hamilton_path_of_X(graph, Arc(args.tail1, args.head1), Arc(args.tail2, args.head2))
    print("\n".join(path.lines()))
    _write_output(args.output, PATH, path.arcs)
    return EXIT_OK


def cmd_iterate(args: argparse.Namespace) -> int:
    """Print the size of every iterated 3-arc graph, certifying on request"""
    graph = _load_graph(args)
    previous = graph
    for level, current, _ in three_arc_levels(graph, args.levels, args.max_vertices):
        print(f"X^{level}(G): {current.vertex_count} vertices, {current.edge_count} edges")
        if args.certify:
            cycle = hamilton_cycle_of_X(previous)
            print(f"X^{level}(G): verified Hamilton cycle on {len(cycle)} vertices")
        if args.certify_paths:
            if 2 * previous.edge_count > DEFAULT_PATH_CERTIFY_MAX_ARCS:
                logging.info(f"Skipping path certification of X^{level}(G): too many arc pairs")
            elif not check_path_hypotheses(previous).all_ok:
                logging.info(f"Skipping path certification of X^{level}(G): hypotheses fail")
            else:
                count = sum(1 for _ in hamilton_paths_all_pairs(previous))
                print(f"X^{level}(G): verified {count} Hamilton paths")
        previous = current
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Validate a certificate file; exit 0 iff it is valid"""
    graph = _load_graph(args)
    certificate = read_certificate_file(args.certificate)
    error = verify_certificate(graph, certificate)
    if error is not None:
        print(f"invalid {certificate.kind}: {error}")
        return EXIT_HYPOTHESIS
    print(f"valid {certificate.kind} with {len(certificate.arcs)} arcs")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Run the equivalence suites and print the summary table"""
    graph = _load_graph(args) if args.graph else None
    results = run_sweep(
        args.suites,
        max_order=args.max_order,
        workers=args.workers,
        repair_trials=args.repair_trials,
        seed=args.seed,
        oracle_cap=args.oracle_max_vertices,
        graph=graph,
    )
    print(render_summary(results))
    return EXIT_OK if all(r.failed == 0 for r in results) else EXIT_CONSTRUCTION


COMMAND_HANDLERS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "xgraph": cmd_xgraph,
    "check": cmd_check,
    "hamcycle": cmd_hamcycle,
    "hampath": cmd_hampath,
    "iterate": cmd_iterate,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one threearc command.

    Args:
        argv: Arguments without the program name; sys.argv when None

    Returns:
        The process exit code
    """
    args = parse_arguments(argv)

    # Set up logging
    setup_logging(args.verbose, args.log_file)

    try:
        return COMMAND_HANDLERS[args.command](args)
    except HypothesisError as e:
        logging.error(f"Hypotheses not met: {e}")
        if e.report is not None:
            print(e.report.render())
        return EXIT_HYPOTHESIS
    except (GraphFormatError, SettingsError, OSError) as e:
        logging.error(f"Cannot read input: {e}")
        return EXIT_INPUT
    except (GraphError, SizeCapExceeded, OracleCapExceeded) as e:
        logging.error(f"Invalid input: {e}")
        return EXIT_INPUT
    except ConstructionError as e:
        logging.error(f"Internal construction failure: {e}")
        if e.dump:
            logging.debug(f"State dump:\n{e.dump}")
        return EXIT_CONSTRUCTION


def main():
    """Main execution flow"""
    sys.exit(run())


if __name__ == "__main__":
    main()
