#!/usr/bin/env python3
# threearc - runner.py
# Revision: 1.0.0

"""
Equivalence sweeps for threearc

Each suite turns into a list of independent tasks and a module-level
checker returning True on success, so the tasks can be fanned out to a
process pool. Small graphs come from the networkx graph atlas; random
graphs use fixed seeds unless a shuffle seed is given.
"""

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from threearc.arcs.construct import three_arc_graph
from threearc.core.errors import ThreeArcError
from threearc.core.graph import SimpleGraph, build_multigraph, edge_multiset, uniform_multiplicity
from threearc.euler.decompositions import lemma_counterexamples
from threearc.euler.repair import find_Z, repair_twin_visits
from threearc.euler.tours import euler_tour
from threearc.hamilton.conditions import check_conditions, hat_criterion, is_X_hamiltonian
from threearc.hamilton.cycle import hamilton_cycle_of_X
from threearc.hamilton.oddpath import has_all_pairs_odd_paths
from threearc.hamilton.path import hamilton_path_of_X
from threearc.verify.oracles import (
    DEFAULT_ORACLE_MAX_VERTICES,
    brute_force_hamilton_connected,
    brute_force_hamiltonian,
)
from threearc.verify.validators import validate_cycle

DEFAULT_MAX_ORDER = 6
ODDPATH_MIN_ORDER = 4
ODDPATH_MAX_ORDER = 7
LEMMA_DEGREES = (6, 8, 10)
DEFAULT_REPAIR_TRIALS = 500
DEFAULT_REPAIR_SEED = 0
RANDOM_GRAPH_COUNT = 50


class SuiteResult(NamedTuple):
    """One row of the sweep summary"""

    name: str
    instances: int
    passed: int
    failed: int
    seconds: float


def atlas_graphs(min_order: int, max_order: int) -> List[SimpleGraph]:
    """Connected atlas graphs (up to isomorphism) with min_order..max_order vertices"""
    graphs = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if min_order <= n <= max_order and nx.is_connected(g):
            graphs.append(SimpleGraph.from_networkx(g))
    return graphs


def random_cubic_graphs(count: int, seed: int = 0, max_order: int = 20) -> List[SimpleGraph]:
    """Connected random cubic graphs on 4..max_order vertices"""
    rng = random.Random(seed)
    graphs = []
    while len(graphs) < count:
        n = rng.randrange(4, max_order + 1, 2)
        g = nx.random_regular_graph(3, n, seed=rng.randrange(2 ** 31))
        if nx.is_connected(g):
            graphs.append(SimpleGraph.from_networkx(g))
    return graphs


def random_subdivided_graphs(count: int, seed: int = 0, max_order: int = 16) -> List[SimpleGraph]:
    """
    Graphs meeting the cycle conditions with degree-two vertices present.

    A random cubic graph gets a few edges subdivided; candidates whose
    remaining core falls apart are drawn again.
    """
    rng = random.Random(seed)
    graphs = []
    while len(graphs) < count:
        n = rng.randrange(6, max_order + 1, 2)
        g = nx.random_regular_graph(3, n, seed=rng.randrange(2 ** 31))
        if not nx.is_connected(g):
            continue
        edges = sorted(g.edges())
        for k, (a, b) in enumerate(rng.sample(edges, rng.randint(1, 3))):
            middle = n + k
            g.remove_edge(a, b)
            g.add_edges_from([(a, middle), (middle, b)])
        graph = SimpleGraph.from_networkx(g)
        if check_conditions(graph).all_ok:
            graphs.append(graph)
    return graphs


def _repair_pool(seed: int) -> List[SimpleGraph]:
    """Connected 3- and 4-regular graphs; every vertex sees the repair patterns"""
    rng = random.Random(seed)
    graphs = []
    for degree, orders in ((3, range(8, 22, 2)), (4, range(7, 12))):
        for n in orders:
            while True:
                g = nx.random_regular_graph(degree, n, seed=rng.randrange(2 ** 31))
                if nx.is_connected(g):
                    graphs.append(SimpleGraph.from_networkx(g))
                    break
    return graphs


# Checkers; each takes one picklable task tuple

def check_theorem1(task: Tuple[SimpleGraph, int]) -> bool:
    graph, cap = task
    return is_X_hamiltonian(graph) == brute_force_hamiltonian(three_arc_graph(graph)[0], cap)


def check_hatgraph(task: Tuple[SimpleGraph]) -> bool:
    (graph,) = task
    return hat_criterion(graph) == is_X_hamiltonian(graph)


def check_lemma(task: Tuple[int]) -> bool:
    (d_star,) = task
    return not lemma_counterexamples(d_star)


def check_oddpaths(task: Tuple[SimpleGraph, int]) -> bool:
    graph, cap = task
    return not brute_force_hamilton_connected(graph, cap) or has_all_pairs_odd_paths(graph)


def check_path(task) -> bool:
    graph, first, second = task
    try:
        path = hamilton_path_of_X(graph, first, second)
    except ThreeArcError as e:
        logging.debug(f"Path {first} .. {second} failed: {e}")
        return False
    return path.verified and path.arcs[0] == first and path.arcs[-1] == second


def check_cycle(task: Tuple[SimpleGraph]) -> bool:
    (graph,) = task
    try:
        cycle = hamilton_cycle_of_X(graph)
    except ThreeArcError as e:
        logging.debug(f"Cycle construction failed: {e}")
        return False
    return len(cycle) == 2 * graph.edge_count and validate_cycle(graph, cycle.arcs) is None


def check_repair(task: Tuple[SimpleGraph, int]) -> bool:
    graph, tour_seed = task
    doubled = build_multigraph(graph, uniform_multiplicity(graph, 2))
    tour = euler_tour(doubled, 0, rng=random.Random(tour_seed))
    try:
        repaired = repair_twin_visits(tour, doubled)
        repaired.check(doubled)
    except ThreeArcError as e:
        logging.debug(f"Repair with tour seed {tour_seed} failed: {e}")
        return False
    return (
        repaired.closed
        and repaired.covers(doubled)
        and edge_multiset(repaired, doubled) == edge_multiset(tour, doubled)
        and not find_Z(repaired, doubled)
    )


def _suite_tasks(
    name: str,
    max_order: int,
    repair_trials: int,
    seed: Optional[int],
    oracle_cap: int,
    graph: Optional[SimpleGraph],
) -> Tuple[Callable, List[tuple]]:
    if name == "theorem1":
        return check_theorem1, [(g, oracle_cap) for g in atlas_graphs(3, max_order)]
    if name == "hatgraph":
        return check_hatgraph, [(g,) for g in atlas_graphs(3, max_order)]
    if name == "lemma":
        return check_lemma, [(d,) for d in LEMMA_DEGREES]
    if name == "oddpaths":
        return check_oddpaths, [
            (g, oracle_cap) for g in atlas_graphs(ODDPATH_MIN_ORDER, ODDPATH_MAX_ORDER)
        ]
    if name == "paths":
        graphs = [graph] if graph is not None else [
            SimpleGraph.from_networkx(nx.complete_graph(4)),
            SimpleGraph.from_networkx(nx.complete_graph(5)),
        ]
        return check_path, [
            (g, first, second) for g in graphs for first in g.arcs() for second in g.arcs() if first != second
        ]
    if name == "cycles":
        if graph is not None:
            return check_cycle, [(graph,)]
        named = [
            nx.petersen_graph(),
            nx.complete_graph(4),
            nx.complete_graph(5),
            nx.complete_bipartite_graph(3, 3),
            nx.hypercube_graph(3),
        ]
        graphs = [SimpleGraph.from_networkx(g) for g in named]
        graphs += random_cubic_graphs(RANDOM_GRAPH_COUNT, seed or 0)
        graphs += random_subdivided_graphs(RANDOM_GRAPH_COUNT, seed or 0)
        return check_cycle, [(g,) for g in graphs]
    if name == "repair":
        rng = random.Random(DEFAULT_REPAIR_SEED if seed is None else seed)
        pool = _repair_pool(rng.randrange(2 ** 31))
        return check_repair, [
            (pool[i % len(pool)], rng.randrange(2 ** 31)) for i in range(repair_trials)
        ]
    raise ValueError(f"unknown sweep suite {name!r}")


def _run_tasks(checker: Callable, tasks: Sequence[tuple], workers: int) -> List[bool]:
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            chunk = max(1, len(tasks) // (4 * workers))
            return list(executor.map(checker, tasks, chunksize=chunk))
    return [checker(task) for task in tasks]


def run_suite(
    name: str,
    max_order: int = DEFAULT_MAX_ORDER,
    workers: int = 1,
    repair_trials: int = DEFAULT_REPAIR_TRIALS,
    seed: Optional[int] = None,
    oracle_cap: int = DEFAULT_ORACLE_MAX_VERTICES,
    graph: Optional[SimpleGraph] = None,
) -> SuiteResult:
    """
    Run one suite.

    Args:
        name: Suite name
        max_order: Largest atlas order for theorem1 and hatgraph
        workers: Worker processes; 1 runs in-process
        repair_trials: Number of fuzzed tours for the repair suite
        seed: Shuffle seed for the random suites
        oracle_cap: Vertex cap of the brute-force oracles
        graph: Replaces the built-in inputs of the paths and cycles suites

    Returns:
        The suite's summary row
    """
    started = time.monotonic()
    checker, tasks = _suite_tasks(name, max_order, repair_trials, seed, oracle_cap, graph)
    logging.info(f"Running sweep suite {name} on {len(tasks)} instances")
    outcomes = _run_tasks(checker, tasks, workers)
    passed = sum(outcomes)
    result = SuiteResult(name, len(tasks), passed, len(tasks) - passed, time.monotonic() - started)
    if result.failed:
        logging.error(f"Suite {name}: {result.failed} of {result.instances} instances failed")
    else:
        logging.info(f"Suite {name}: all {result.instances} instances passed")
    return result


def run_sweep(suites: Iterable[str], **options) -> List[SuiteResult]:
    """Run several suites in order with shared options"""
    return [run_suite(name, **options) for name in suites]


def render_summary(results: Sequence[SuiteResult]) -> str:
    """Fixed-width summary table"""
    header = f"{'suite':<10} {'instances':>9} {'passed':>8} {'failed':>8} {'seconds':>9}"
    lines = [header, "-" * len(header)]
    for r in results:
        lines.append(f"{r.name:<10} {r.instances:>9} {r.passed:>8} {r.failed:>8} {r.seconds:>9.2f}")
    return "\n".join(lines)
