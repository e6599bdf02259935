# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

"""Seeded instance families and the batch checks run over them by the `bench` command."""

from __future__ import annotations

import collections
import logging
import typing as t
from fractions import Fraction

import numpy as np

from claw_square.coloring import (
    greedy_trivial_square_coloring,
    main_square_coloring,
    palette_margins,
    trivial_bound,
    verify_coloring,
)
from claw_square.errors import BudgetExceededError, CounterexampleError
from claw_square.generators import (
    IntervalKind,
    SubstitutionMode,
    c5_bag_sizes,
    c5_blowup,
    circular_power,
    compose_strips,
    cyclic_scheme,
    f_of_delta,
    named_instance,
    power_strip,
    random_interval_rep,
    random_multigraph,
    random_regular_multigraph,
    random_scheme,
    random_strip,
    realize_interval,
    substitute,
)
from claw_square.graph import SimpleGraph, line_graph, square
from claw_square.recognition import is_quasi_line, krausz_partition
from claw_square.search import SolverBudget, chromatic_exact
from claw_square.selector import select_nonquasiline, select_quasiline
from claw_square.verifier import (
    CheckRow,
    Config,
    LineSquare,
    blowup_table_rows,
    check_cgtt_exhaustive,
    check_conjecture_and_diameter2,
    check_dichotomy,
    check_interval_bounds,
    check_lemma_cliquesecond,
    edge_square_degree_identity,
    extremal_square_rows,
    max_square_degree_bound,
    sparsity_reports,
)
from claw_square.workers import OrderedCollector, Task

if t.TYPE_CHECKING:
    import collections.abc

log = logging.getLogger(__name__)

Instance = tuple[str, SimpleGraph]

# Exact colouring of the base case is only attempted on small graphs in batch runs.
CORPUS_BUDGET = SolverBudget(max_vertices=40, max_nodes=20_000)
CONJECTURE_MAX_VERTICES = 24


def edge_name(edge: tuple[int, int, int]) -> str:
    return "-".join(map(str, edge))


def _seeds(seed: int, count: int) -> list[int]:
    return np.random.default_rng(seed).integers(0, 2**62, size=count).tolist()


# region instance families
def claw_free_instances(seed: int, count: int = 200) -> list[Instance]:
    """
    Return `count` seeded claw-free graphs.

    Half are line graphs of random multigraphs, the rest split between circular and linear
    interval graphs and compositions of random strips.
    """
    instances = []
    for index, instance_seed in enumerate(_seeds(seed, count)):
        rng = np.random.default_rng(instance_seed)
        family = index % 4
        if family in {0, 1}:
            n, delta = int(rng.integers(4, 31)), int(rng.integers(1, 7))
            multigraph = random_multigraph(n, delta, 3, instance_seed)
            instances.append((f"line-{index}", line_graph(multigraph).graph))
        elif family == 2:
            kind = IntervalKind.CIRCULAR if index % 8 == 2 else IntervalKind.LINEAR
            n = int(rng.integers(3, 21))
            intervals = int(rng.integers(1, 11))
            rep = random_interval_rep(kind, n, intervals, n + 4, instance_seed)
            instances.append((f"{kind.value}-{index}", realize_interval(rep)))
        else:
            scheme = random_scheme(int(rng.integers(3, 6)), 3, 4, 5, instance_seed)
            instances.append((f"composition-{index}", compose_strips(scheme)))
    return instances


def _clique_substitution(
    graph: SimpleGraph, rng: np.random.Generator, largest: int
) -> SimpleGraph:
    sizes = rng.integers(1, largest + 1, size=graph.n).tolist()
    return substitute(graph, sizes, SubstitutionMode.CLIQUE)


def non_quasi_line_instances(seed: int, count: int = 100) -> list[Instance]:
    """Return wheel5, the icosahedron and `count` clique substitutions of them."""
    bases = {name: named_instance(name) for name in ("wheel5", "icosahedron")}
    instances = list(bases.items())
    for index, instance_seed in enumerate(_seeds(seed, count)):
        rng = np.random.default_rng(instance_seed)
        name = "wheel5" if index % 2 == 0 else "icosahedron"
        largest = 3 if name == "wheel5" else 2
        instances.append(
            (f"subst-{name}-{index}", _clique_substitution(bases[name], rng, largest))
        )
    return instances


def quasi_line_instances(seed: int, count: int = 100) -> list[Instance]:
    """
    Return `count` quasi-line graphs that are not line graphs of multigraphs.

    Squares of cycles on at least seven vertices, their clique substitutions,
    and cyclic compositions of the square of a six vertex path.
    """
    instances: list[Instance] = []
    for index, instance_seed in enumerate(_seeds(seed, count * 4)):
        if len(instances) == count:
            break
        rng = np.random.default_rng(instance_seed)
        match index % 3:
            case 0:
                graph = realize_interval(circular_power(int(rng.integers(7, 15)), 2))
            case 1:
                cycle_power = realize_interval(circular_power(int(rng.integers(7, 12)), 2))
                graph = _clique_substitution(cycle_power, rng, 2)
            case _:
                strips = [power_strip(6, 2)] * int(rng.integers(3, 6))
                graph = compose_strips(cyclic_scheme(strips))
        if krausz_partition(graph) is None:
            instances.append((f"quasi-line-{index}", graph))
    if len(instances) < count:
        log.warning(f"Only {len(instances)} of {count} quasi-line instances were found.")
    return instances


def full_corpus(seed: int) -> list[Instance]:  # noqa: D103
    return [
        *((name, named_instance(name)) for name in ("c5", "paw", "diamond", "petersen_line")),
        *claw_free_instances(seed),
        *non_quasi_line_instances(seed + 1),
        *quasi_line_instances(seed + 2),
    ]


# endregion


# region batch checks
def config_rows(config: Config) -> list[CheckRow]:
    """Feasibility of the sparsity constants, palette margins and the blow-up closed form."""
    rows = config.feasibility_rows()
    for omega in range(6, 1001):
        margins = palette_margins(omega, config.eps)
        name = f"omega-{omega}"
        rows.append(
            CheckRow.compare(name, "palette_degenerate", margins.degenerate, "<=", margins.palette)
        )
        rows.append(
            CheckRow.compare(
                name, "palette_non_quasi_line", margins.non_quasi_line, "<=", margins.palette
            )
        )
    for delta in range(2, 1001):
        sizes = c5_bag_sizes(delta)
        edges = sum(sizes[i] * sizes[(i + 1) % 5] for i in range(5))
        rows.append(
            CheckRow.compare(f"delta-{delta}", "blowup_bag_edges", edges, "==", f_of_delta(delta))
        )
    return rows


def extremal_rows() -> list[CheckRow]:
    """Blow-up edge counts, complete line graph squares and their exact chromatic numbers."""
    rows = [*blowup_table_rows(range(2, 41)), *extremal_square_rows(range(2, 11))]
    for delta in (2, 3):
        target = square(line_graph(c5_blowup(delta)).graph)
        chi = chromatic_exact(target).chi
        rows.append(
            CheckRow.compare(
                f"c5_blowup-{delta}", "strong_chromatic_index", chi, "==", f_of_delta(delta)
            )
        )
    return rows


def greedy_rows(seed: int) -> list[CheckRow]:
    """Greedy square colourings of the claw-free family against ``2ω² - 2ω + 1``."""
    rows = []
    for name, graph in claw_free_instances(seed):
        try:
            result = greedy_trivial_square_coloring(graph)
        except CounterexampleError:
            rows.append(CheckRow.flag(name, "greedy_trivial", False))
            continue
        bound = trivial_bound(result.omega)
        proper = verify_coloring(square(graph), result.coloring)
        rows.append(CheckRow.compare(name, "greedy_trivial", result.colors_used, "<=", bound))
        rows.append(CheckRow.flag(name, "greedy_proper", bool(proper)))
    return rows


def _selector_row(name: str, graph: SimpleGraph, quasi_line: bool) -> CheckRow:
    select = select_quasiline if quasi_line else select_nonquasiline
    try:
        witness = select(graph)
    except CounterexampleError:
        return CheckRow.flag(name, select.__name__, False)
    checks_hold = all(check.holds for check in witness.checks)
    return CheckRow.flag(name, select.__name__, checks_hold and witness.revalidate(graph))


def selector_rows(seed: int) -> list[CheckRow]:
    """Run both selectors on their families and revalidate every witness."""
    rows = [
        _selector_row(name, graph, False)
        for name, graph in non_quasi_line_instances(seed + 1)
    ]
    for name, graph in quasi_line_instances(seed + 2):
        rows.append(CheckRow.flag(name, "quasi_line", bool(is_quasi_line(graph))))
        rows.append(_selector_row(name, graph, True))
    return rows


def main_procedure_rows(seed: int, eps: Fraction, start: int, stop: int) -> list[CheckRow]:
    """Run the recursive procedure on a slice of the full corpus."""
    rows = []
    for name, graph in full_corpus(seed)[start:stop]:
        try:
            result = main_square_coloring(graph, eps, budget=CORPUS_BUDGET)
        except CounterexampleError:
            rows.append(CheckRow.flag(name, "main_procedure", False))
            continue
        proper = verify_coloring(square(graph), result.coloring)
        rows.append(
            CheckRow.compare(
                name, "main_procedure", result.colors_used, "<=", result.bound_certificate
            )
        )
        rows.append(
            CheckRow.compare(
                name, "main_trivial_palette", result.bound_certificate, "<=", trivial_bound(result.omega)
            )
        )
        rows.append(CheckRow.flag(name, "main_proper", bool(proper)))
    return rows


def structure_rows(seed: int, start: int, stop: int) -> list[CheckRow]:
    """Neighbourhood lemmas and the maximum square degree on a slice of the full corpus."""
    rows = []
    for name, graph in full_corpus(seed)[start:stop]:
        rows.append(CheckRow.flag(name, "clique_second", bool(check_lemma_cliquesecond(graph))))
        rows.append(CheckRow.flag(name, "dichotomy", bool(check_dichotomy(graph))))
        rows.append(max_square_degree_bound(graph, name))
        if graph.n <= CONJECTURE_MAX_VERTICES:
            try:
                report = check_conjecture_and_diameter2(graph, budget=CORPUS_BUDGET)
                rows.extend(report.rows(name))
            except BudgetExceededError:
                log.info(f"Skipped the exact square colouring of {name}.")
    return rows


def interval_rows(seed: int, count: int = 1000) -> list[CheckRow]:
    """Square degree bounds on random circular representations and strips, and their tight cases."""
    cycle = check_interval_bounds(circular_power(5, 1))
    path = check_interval_bounds(power_strip(4, 1))
    rows = [
        CheckRow.compare("c5", "circular_tight", cycle.max_square_degree, "==", cycle.bound),
        CheckRow.compare("p4-strip", "strip_tight", path.max_square_degree, "==", path.bound),
    ]
    for index, instance_seed in enumerate(_seeds(seed, count)):
        rng = np.random.default_rng(instance_seed)
        n = int(rng.integers(3, 16))
        intervals = int(rng.integers(1, 11))
        rep = random_interval_rep(IntervalKind.CIRCULAR, n, intervals, n + 5, instance_seed)
        rows.append(check_interval_bounds(rep).row(f"circular-{index}"))
        interior, span = int(rng.integers(1, 11)), int(rng.integers(3, 13))
        strip = random_strip(interior, intervals, span, instance_seed)
        rows.append(check_interval_bounds(strip).row(f"strip-{index}"))
    return rows


def identity_rows(seed: int, start: int, stop: int) -> list[CheckRow]:
    """The square degree identity on every edge of random regular multigraphs."""
    rows = []
    seeds = _seeds(seed, stop)
    for index in range(start, stop):
        rng = np.random.default_rng(seeds[index])
        delta = int(rng.integers(2, 11))
        n = 2 * int(rng.integers(2, 7))
        multigraph = random_regular_multigraph(n, delta, seeds[index])
        context = LineSquare(multigraph)
        for edge in context.lines.labels:
            values = edge_square_degree_identity(multigraph, edge, context=context)
            name = f"regular-{index}-{edge_name(edge)}"
            rows.append(
                CheckRow.compare(name, "degree_identity", values.formula, "==", values.direct)
            )
    return rows


def sparsity_rows(seed: int, delta: int, count: int, config: Config) -> list[CheckRow]:
    """Case split and exact inequalities on every edge of `count` random `delta`-regular multigraphs."""
    rows = []
    worst = Fraction(0)
    cases: collections.Counter[int] = collections.Counter()
    for index, instance_seed in enumerate(_seeds(seed + delta, count)):
        multigraph = random_regular_multigraph(16, delta, instance_seed)
        for report in sparsity_reports(multigraph, config):
            name = f"regular{delta}-{index}-{edge_name(report.edge)}"
            cases[report.case] += 1
            rows.append(CheckRow.flag(name, "case_split", report.case in {1, 2, 3}))
            rows.extend(report.checks(name))
            worst = max(worst, report.ratio)
    log.info(
        f"Delta {delta}: cases {dict(sorted(cases.items()))}, max ratio {float(worst):.4f}"
        f" against {float(1 - config.eps):.4f}."
    )
    rows.append(CheckRow.compare(f"regular{delta}", "max_ratio", worst, "<=", 1))
    return rows


def cgtt_rows() -> list[CheckRow]:  # noqa: D103
    return check_cgtt_exhaustive(6, 4, 3)


# endregion


def bench_tasks(seed: int, config: Config) -> list[Task]:
    """Split the whole batch into picklable tasks, in output order."""
    corpus_size = len(full_corpus(seed))
    slices = [(start, min(start + 50, corpus_size)) for start in range(0, corpus_size, 50)]
    return [
        Task("config", config_rows, (config,)),
        Task("extremal", extremal_rows),
        Task("greedy", greedy_rows, (seed,)),
        Task("selectors", selector_rows, (seed,)),
        *(
            Task(f"main-{start}", main_procedure_rows, (seed, config.eps, start, stop))
            for start, stop in slices
        ),
        *(
            Task(f"structure-{start}", structure_rows, (seed, start, stop))
            for start, stop in slices
        ),
        Task("interval", interval_rows, (seed,)),
        *(
            Task(f"identity-{start}", identity_rows, (seed, start, start + 100))
            for start in range(0, 500, 100)
        ),
        *(
            Task(f"sparsity-{delta}", sparsity_rows, (seed, delta, 15, config))
            for delta in range(8, 15)
        ),
        Task("cgtt", cgtt_rows),
    ]


def run_bench(tasks: collections.abc.Sequence[Task], workers: int) -> list[CheckRow]:
    """Run `tasks` on `workers` processes and concatenate their rows in task order."""
    collector: OrderedCollector[list[CheckRow]] = OrderedCollector(workers)
    rows = []
    for _, task_rows in collector.run(tasks):
        rows.extend(task_rows)
    return rows
