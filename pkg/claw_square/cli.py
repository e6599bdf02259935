# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import argparse
import dataclasses
import enum
import logging
import typing as t
from fractions import Fraction
from functools import partial
from pathlib import Path

from claw_square import settings
from claw_square.coloring import (
    ColoringMethod,
    ColoringResult,
    StrongMode,
    conflicting_edges,
    greedy_trivial_square_coloring,
    main_square_coloring,
    strong_edge_coloring,
    verify_coloring,
)
from claw_square.constants import NAMED_INSTANCES
from claw_square.corpus import bench_tasks, edge_name, run_bench
from claw_square.errors import (
    BudgetExceededError,
    CounterexampleError,
    GraphFormatError,
    PreconditionError,
)
from claw_square.formats import (
    dump_coloring,
    dump_graph,
    dump_instance,
    dump_multigraph,
    parse_instance,
    read_text,
    write_text,
)
from claw_square.generators import (
    CompositionScheme,
    IntervalKind,
    IntervalRep,
    Strip,
    SubstitutionMode,
    c5_blowup,
    complete_bipartite,
    compose_strips,
    circular_power,
    cyclic_scheme,
    named_instance,
    planted_homogeneous_pair,
    power_strip,
    random_interval_rep,
    random_multigraph,
    random_regular_multigraph,
    random_scheme,
    random_strip,
    realize_interval,
    substitute,
)
from claw_square.graph import Coloring, Multigraph, SimpleGraph, Subgraph, induced, line_graph, square
from claw_square.recognition import (
    find_claw,
    find_homogeneous_pair,
    is_quasi_line,
    krausz_partition,
)
from claw_square.search import SolverBudget, chromatic_exact, clique_number
from claw_square.selector import select_nonquasiline, select_quasiline
from claw_square.settings.categories import CATEGORIES
from claw_square.utils.utils import format_rational, parse_rational
from claw_square.verifier import (
    CheckRow,
    Config,
    LineSquare,
    blowup_table_rows,
    check_cgtt,
    check_cgtt_exhaustive,
    check_conjecture_and_diameter2,
    check_dichotomy,
    check_interval_bounds,
    check_lemma_cliquesecond,
    edge_square_degree_identity,
    max_square_degree_bound,
    rows_to_csv,
    sparsity_reports,
    summarize,
    two_path_rows,
)

if t.TYPE_CHECKING:
    import collections.abc

    import typing_extensions as te

    InstanceObject = SimpleGraph | Multigraph | IntervalRep | Strip | CompositionScheme

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

MAX_SEED = 2**64

if hasattr(enum, "StrEnum"):
    _StrEnum = enum.StrEnum
else:  # Python < 3.11

    class _StrEnum(str, enum.Enum):
        __str__ = str.__str__
        __format__ = str.__format__



class Command(_StrEnum):  # noqa: D101
    GENERATE = "generate"
    SQUARE = "square"
    COLOR = "color"
    SELECT = "select"
    RECOGNIZE = "recognize"
    VERIFY = "verify"
    BENCH = "bench"
    CONFIG = "config"


COMMAND_ALIASES = {"gen": Command.GENERATE}


class OutputFormat(_StrEnum):  # noqa: D101
    TEXT = "text"
    CSV = "csv"


# region generator families
class _Family(t.NamedTuple):
    build: collections.abc.Callable[[list[str], int], InstanceObject]
    usage: str


def _int_params(params: collections.abc.Sequence[str], names: tuple[str, ...], family: str) -> list[int]:
    if len(params) != len(names):
        raise PreconditionError(f"{family} takes {' '.join(names) or 'no parameters'}, got {list(params)}.")
    try:
        return [int(param) for param in params]
    except ValueError:
        raise PreconditionError(f"{family} parameters must be integers, got {list(params)}.") from None


def _int_family(
    name: str,
    function: collections.abc.Callable[..., InstanceObject],
    names: tuple[str, ...],
    *,
    seeded: bool = False,
) -> _Family:
    def build(params: list[str], seed: int) -> InstanceObject:
        values = _int_params(params, names, name)
        if seeded:
            return function(*values, seed)
        return function(*values)

    return _Family(build, " ".join((name, *names)) + (" (seeded)" if seeded else ""))


def _substitution(params: list[str], _seed: int) -> SimpleGraph:
    if len(params) < 2:
        raise PreconditionError("substitute takes a named instance, stable|clique and bag sizes.")
    base, mode, *sizes = params
    try:
        return substitute(named_instance(base), [int(size) for size in sizes], SubstitutionMode(mode))
    except ValueError as e:
        raise PreconditionError(str(e)) from None


def _cyclic_power_strips(k: int, n: int, reach: int) -> CompositionScheme:
    return cyclic_scheme([power_strip(n, reach)] * k)


def _planted_pair(size_a: int, size_b: int) -> SimpleGraph:
    return planted_homogeneous_pair(size_a, size_b).graph


GENERATORS: dict[str, _Family] = {
    "c5_blowup": _int_family("c5_blowup", c5_blowup, ("delta",)),
    "complete_bipartite": _int_family("complete_bipartite", complete_bipartite, ("a", "b")),
    "random_multigraph": _int_family(
        "random_multigraph", random_multigraph, ("n", "delta", "max_mult"), seeded=True
    ),
    "random_regular": _int_family(
        "random_regular", random_regular_multigraph, ("n", "delta"), seeded=True
    ),
    "circular_power": _int_family("circular_power", circular_power, ("n", "reach")),
    "power_strip": _int_family("power_strip", power_strip, ("n", "reach")),
    "random_circular": _int_family(
        "random_circular",
        partial(random_interval_rep, IntervalKind.CIRCULAR),
        ("n", "intervals", "span"),
        seeded=True,
    ),
    "random_linear": _int_family(
        "random_linear",
        partial(random_interval_rep, IntervalKind.LINEAR),
        ("n", "intervals", "span"),
        seeded=True,
    ),
    "random_strip": _int_family(
        "random_strip", random_strip, ("interior", "intervals", "span"), seeded=True
    ),
    "random_scheme": _int_family(
        "random_scheme", random_scheme, ("k", "interior", "intervals", "span"), seeded=True
    ),
    "cyclic_power_strips": _int_family(
        "cyclic_power_strips", _cyclic_power_strips, ("k", "n", "reach")
    ),
    "planted_pair": _int_family("planted_pair", _planted_pair, ("size_a", "size_b")),
    "substitute": _Family(_substitution, "substitute NAME stable|clique SIZE..."),
    **{
        name: _int_family(name, partial(named_instance, name), ())
        for name in NAMED_INSTANCES
    },
}


# endregion


@dataclasses.dataclass(frozen=True)
class InstanceSource:
    """Where an instance comes from: a file, or a generator family with its parameters and seed."""

    path: Path | None = None
    generator: str | None = None
    params: tuple[str, ...] = ()
    seed: int = 0

    @classmethod
    def from_words(cls, words: collections.abc.Sequence[str], seed: int) -> te.Self:
        """Treat the first word as a generator family if one has that name, as a path otherwise."""
        first, *rest = words
        if first in GENERATORS:
            return cls(generator=first, params=tuple(rest), seed=seed)
        if rest:
            raise PreconditionError(f"Unexpected arguments {rest} after the file {first}.")
        return cls(path=Path(first), seed=seed)

    @property
    def name(self) -> str:  # noqa: D102
        if self.path is not None:
            return self.path.stem
        return "-".join((t.cast(str, self.generator), *self.params))

    def load(self) -> InstanceObject:
        """Read or generate the instance."""
        if self.path is not None:
            try:
                return parse_instance(read_text(self.path))
            except OSError as e:
                raise PreconditionError(f"Can't read {self.path}: {e.strerror}.") from None
        return GENERATORS[t.cast(str, self.generator)].build(list(self.params), self.seed)


@dataclasses.dataclass(frozen=True)
class ExperimentSpec:
    """
    A fully resolved command line invocation.

    `options` holds the subcommand's own arguments, like the colouring method or the check name.
    """

    command: Command
    source: InstanceSource | None
    config: Config
    output: Path | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    seed: int = 0
    workers: int = 1
    options: collections.abc.Mapping[str, t.Any] = dataclasses.field(default_factory=dict)


# region argument parsing
def _seed(text: str) -> int:
    seed = int(text)
    if not 0 <= seed < MAX_SEED:
        raise argparse.ArgumentTypeError(f"Seeds are 64-bit, got {seed}.")
    return seed


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    """Create the parser of every subcommand; common flags are accepted after the subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, help="64-bit seed of random generator families")
    common.add_argument("--eps", type=_rational, help="palette epsilon written as p/q")
    common.add_argument("--out", type=Path, help="output file, stdout when missing")
    common.add_argument("--workers", type=int, help="worker processes for batch runs")
    common.add_argument("--format", choices=[fmt.value for fmt in OutputFormat], default="text")
    common.add_argument("-v", "--verbose", action="store_true", help="log debug messages to stderr")

    parser = argparse.ArgumentParser(
        prog="claw_square", description="Colour squares of claw-free graphs and check their bounds."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser(
        Command.GENERATE,
        aliases=list(COMMAND_ALIASES),
        parents=[common],
        help="write a generated instance",
        epilog="families: " + "; ".join(family.usage for family in GENERATORS.values()),
    )
    generate.add_argument("instance", nargs="+")

    for command, help_text in (
        (Command.SQUARE, "write the square of a graph"),
        (Command.SELECT, "run the selector on every component"),
        (Command.RECOGNIZE, "report claws, quasi-line failures, Krausz cliques and homogeneous pairs"),
    ):
        subparser = commands.add_parser(command, parents=[common], help=help_text)
        subparser.add_argument("instance", nargs="+")

    color = commands.add_parser(Command.COLOR, parents=[common], help="colour the square of a graph")
    color.add_argument("--method", choices=["exact", "greedy", "main"], default="main")
    color.add_argument("instance", nargs="+")

    verify = commands.add_parser(Command.VERIFY, parents=[common], help="evaluate checks as rows")
    verify.add_argument("check", choices=sorted(CHECKS))
    verify.add_argument("--exhaustive", action="store_true", help="enumerate small multigraphs for cgtt")
    verify.add_argument("instance", nargs="*", help="instance, or key=value limits")

    commands.add_parser(Command.BENCH, parents=[common], help="run the whole check corpus")

    config = commands.add_parser(Command.CONFIG, parents=[common], help="show or change settings")
    config.add_argument("action", choices=["show", "get", "set"])
    config.add_argument("key", nargs="?")
    config.add_argument("value", nargs="?")
    return parser


def spec_from_args(args: argparse.Namespace) -> ExperimentSpec:
    """Resolve parsed arguments against the settings into an `ExperimentSpec`."""
    command = COMMAND_ALIASES.get(args.command) or Command(args.command)
    seed = args.seed if args.seed is not None else settings.Batch.default_seed
    # the config command must keep working when the stored settings are unusable
    config = Config() if command is Command.CONFIG else Config.from_settings().replace(eps=args.eps)

    words = list(getattr(args, "instance", []) or [])
    limits = {}
    if command is Command.VERIFY:
        limits = dict(word.split("=", 1) for word in words if "=" in word)
        words = [word for word in words if "=" not in word]
    source = InstanceSource.from_words(words, seed) if words else None
    if source is None and command in {
        Command.GENERATE,
        Command.SQUARE,
        Command.COLOR,
        Command.SELECT,
        Command.RECOGNIZE,
    }:
        raise PreconditionError(f"{command} needs an instance.")

    options: dict[str, t.Any] = {}
    match command:
        case Command.COLOR:
            options["method"] = args.method
        case Command.VERIFY:
            options.update(check=args.check, exhaustive=args.exhaustive, limits=limits)
        case Command.CONFIG:
            options.update(action=args.action, key=args.key, value=args.value)

    return ExperimentSpec(
        command,
        source,
        config,
        args.out,
        OutputFormat(args.format),
        seed,
        args.workers if args.workers is not None else settings.Batch.workers,
        options,
    )


# endregion


# region instances
def _as_graph(instance: InstanceObject) -> tuple[SimpleGraph, Multigraph | None]:
    """Return the graph a graph command works on, multigraphs are replaced by their line graph."""
    match instance:
        case SimpleGraph():
            return instance, None
        case Multigraph():
            return line_graph(instance).graph, instance
        case IntervalRep():
            return realize_interval(instance), None
        case Strip():
            return instance.graph, None
        case CompositionScheme():
            return compose_strips(instance), None
    raise TypeError(f"Unsupported instance {type(instance).__name__}.")


def _components(graph: SimpleGraph, name: str) -> list[tuple[str, Subgraph]]:
    """Split `graph` into its components, named ``name#cI`` when there is more than one."""
    components = graph.components()
    if len(components) <= 1:
        return [(name, induced(graph, graph.vertices()))]
    return [(f"{name}#c{index}", induced(graph, component)) for index, component in enumerate(components)]


# endregion


# region commands
def _generate(spec: ExperimentSpec) -> int:
    source = t.cast(InstanceSource, spec.source)
    instance = source.load()
    if isinstance(instance, Multigraph):
        log.info(f"Generated {source.name} with {instance.edge_count} edges.")
    write_text(spec.output, dump_instance(instance))
    return EXIT_OK


def _square(spec: ExperimentSpec) -> int:
    graph, _ = _as_graph(t.cast(InstanceSource, spec.source).load())
    write_text(spec.output, dump_graph(square(graph)))
    return EXIT_OK


def _color_component(graph: SimpleGraph, method: str, config: Config) -> ColoringResult:
    match method:
        case "exact":
            result = chromatic_exact(square(graph), budget=config.budget)
            omega = clique_number(graph).size
            return ColoringResult(result.coloring, ColoringMethod.EXACT, result.chi, omega)
        case "greedy":
            return greedy_trivial_square_coloring(graph)
    return main_square_coloring(graph, config.eps, budget=config.budget)


def _strong_color(spec: ExperimentSpec, multigraph: Multigraph, method: str) -> int:
    result = strong_edge_coloring(multigraph, StrongMode(method), budget=spec.config.budget)
    conflicts = conflicting_edges(multigraph, result)
    lines = [
        f"# edge {vertex} = {u} {v} copy {copy}"
        for vertex, (u, v, copy) in enumerate(result.edge_labels or ())
    ]
    write_text(spec.output, "\n".join([*lines, dump_coloring(result.coloring, method)]))
    if conflicts:
        log.error(f"Strong edge colouring has conflicting edges {conflicts[0]}.")
        return EXIT_FAILED
    return EXIT_OK


def _color(spec: ExperimentSpec) -> int:
    source = t.cast(InstanceSource, spec.source)
    method = spec.options["method"]
    graph, multigraph = _as_graph(source.load())
    if multigraph is not None and method != "main":
        return _strong_color(spec, multigraph, method)

    colours = [0] * graph.n
    palette = 1
    comments = []
    for name, component in _components(graph, source.name):
        result = _color_component(component.graph, method, spec.config)
        for local, colour in enumerate(result.coloring.color):
            colours[component.vertices[local]] = colour
        palette = max(palette, result.coloring.palette_size)
        comments.append(f"# {name}: {result.colors_used} colours, bound {result.bound_certificate}")
        for step in result.trace:
            vertex = None if step.vertex is None else component.vertices[step.vertex]
            mapped = step._replace(vertex=vertex, s=tuple(component.vertices[u] for u in step.s))
            comments.append(f"# {name} {mapped}")

    coloring = Coloring(tuple(colours), palette)
    write_text(spec.output, "\n".join([*comments, dump_coloring(coloring, method)]))
    verdict = verify_coloring(square(graph), coloring)
    if not verdict:
        log.error(f"Colouring is improper on the square edge {verdict.witness}.")
        return EXIT_FAILED
    log.info(f"Coloured the square of {source.name} with {coloring.colors_used} colours.")
    return EXIT_OK


def _select(spec: ExperimentSpec) -> int:
    source = t.cast(InstanceSource, spec.source)
    graph, _ = _as_graph(source.load())
    lines = []
    status = EXIT_OK
    for name, component in _components(graph, source.name):
        sub = component.graph
        if is_quasi_line(sub):
            if krausz_partition(sub) is not None:
                lines.append(f"{name}: line graph of a multigraph, nothing to select")
                continue
            witness = select_quasiline(sub)
        else:
            witness = select_nonquasiline(sub)
        valid = witness.revalidate(sub) and all(check.holds for check in witness.checks)
        s = sorted(component.vertices[u] for u in witness.s)
        lines.append(
            f"{name}: {witness.variant.value} v={component.vertices[witness.v]} S={s}"
            f" omega={witness.omega} revalidated={'yes' if valid else 'NO'}"
        )
        lines.extend(f"  {check}" for check in witness.checks)
        if not valid:
            status = EXIT_FAILED
    write_text(spec.output, "\n".join(lines) + "\n")
    return status


def _recognize(spec: ExperimentSpec) -> int:
    source = t.cast(InstanceSource, spec.source)
    graph, _ = _as_graph(source.load())
    lines = []
    for name, component in _components(graph, source.name):
        sub, original = component.graph, component.vertices
        lines.append(f"{name}: {sub.n} vertices, {sub.m} edges")
        if (claw := find_claw(sub)) is not None:
            leaves = [original[leaf] for leaf in claw.leaves]
            lines.append(f"  claw centre {original[claw.center]} leaves {leaves}")
            continue
        lines.append("  claw-free")

        quasi_line = is_quasi_line(sub)
        if quasi_line:
            lines.append("  quasi-line")
        else:
            lines.append(f"  not quasi-line at vertex {original[quasi_line.witness]}")

        certificate = krausz_partition(sub)
        if certificate is None:
            lines.append("  not a line graph of a multigraph")
        else:
            lines.append(f"  line graph of a multigraph on {certificate.root.n} vertices:")
            lines.extend(f"    {line}" for line in dump_multigraph(certificate.root).splitlines())

        try:
            pair = find_homogeneous_pair(sub)
        except BudgetExceededError as e:
            lines.append(f"  homogeneous pair search skipped: {e}")
            continue
        if pair is None:
            lines.append("  no homogeneous pair of cliques")
        else:
            a, b = sorted(original[v] for v in pair.a), sorted(original[v] for v in pair.b)
            lines.append(f"  homogeneous pair A={a} B={b}")
    write_text(spec.output, "\n".join(lines) + "\n")
    return EXIT_OK


# region checks
def _graph_checks(name: str, graph: SimpleGraph, config: Config, checks: set[str]) -> list[CheckRow]:
    rows = []
    for component_name, component in _components(graph, name):
        sub = component.graph
        if "cliquesecond" in checks:
            verdict = check_lemma_cliquesecond(sub)
            rows.append(CheckRow.flag(component_name, "clique_second", verdict.ok))
        if "dichotomy" in checks:
            rows.append(CheckRow.flag(component_name, "dichotomy", check_dichotomy(sub).ok))
        if "maxdegree" in checks:
            rows.append(max_square_degree_bound(sub, component_name))
        if "twopath" in checks:
            rows.extend(two_path_rows(sub, component_name))
        if "conjecture" in checks:
            try:
                report = check_conjecture_and_diameter2(sub, budget=config.budget)
            except BudgetExceededError as e:
                log.warning(f"Skipping the conjecture check on {component_name}: {e}")
            else:
                rows.extend(report.rows(component_name))
    return rows


def _multigraph_checks(
    name: str, multigraph: Multigraph, config: Config, checks: set[str]
) -> list[CheckRow]:
    rows = []
    if "identity" in checks:
        context = LineSquare(multigraph)
        for edge in context.lines.labels:
            values = edge_square_degree_identity(multigraph, edge, context=context)
            instance_name = f"{name}-{edge_name(edge)}"
            rows.append(
                CheckRow.compare(instance_name, "degree_identity", values.formula, "==", values.direct)
            )
    if "sparsity" in checks:
        for report in sparsity_reports(multigraph, config):
            rows.extend(report.checks(f"{name}-{edge_name(report.edge)}"))
    if "cgtt" in checks:
        verdict = check_cgtt(multigraph)
        if verdict is None:
            log.info(f"{name} is not connected and 2K2-free, skipping the edge bound.")
        else:
            rows.extend(verdict.rows(name))
    return rows


GRAPH_CHECKS = frozenset({"cliquesecond", "dichotomy", "maxdegree", "twopath", "conjecture"})
MULTIGRAPH_CHECKS = frozenset({"identity", "sparsity", "cgtt"})
CHECKS = GRAPH_CHECKS | MULTIGRAPH_CHECKS | {"interval", "blowup", "config", "all"}


def _limit(limits: collections.abc.Mapping[str, str], key: str, default: int) -> int:
    try:
        return int(limits.get(key, default))
    except ValueError:
        raise PreconditionError(f"Limit {key} must be an integer, got {limits[key]!r}.") from None


def _verify_rows(spec: ExperimentSpec) -> list[CheckRow]:
    check = spec.options["check"]
    limits = spec.options["limits"]
    config = spec.config
    if check == "config":
        return config.feasibility_rows()
    if check == "blowup":
        return blowup_table_rows(range(2, _limit(limits, "max", 40) + 1))
    if check == "cgtt" and spec.options["exhaustive"]:
        return check_cgtt_exhaustive(
            _limit(limits, "n", 6), _limit(limits, "dmax", 4), _limit(limits, "mmax", 3)
        )

    if spec.source is None:
        raise PreconditionError(f"The {check} check needs an instance.")
    instance = spec.source.load()
    name = spec.source.name
    checks = set(CHECKS) if check == "all" else {check}

    rows = []
    if "interval" in checks and isinstance(instance, IntervalRep | Strip):
        rows.append(check_interval_bounds(instance).row(name))
    elif check == "interval":
        raise PreconditionError("The interval check needs an interval rep or a strip.")
    if checks & MULTIGRAPH_CHECKS:
        if isinstance(instance, Multigraph):
            if check == "all" and not instance.is_regular():
                checks.discard("identity")
            rows.extend(_multigraph_checks(name, instance, config, checks))
        elif check != "all":
            raise PreconditionError(f"The {check} check needs a multigraph.")
    if checks & GRAPH_CHECKS:
        graph, _ = _as_graph(instance)
        rows.extend(_graph_checks(name, graph, config, checks))
    return rows


# endregion


def _render_rows(rows: list[CheckRow], output_format: OutputFormat) -> str:
    if output_format is OutputFormat.CSV:
        return rows_to_csv(rows)
    total, failed = summarize(rows)
    lines = [str(row) for row in rows]
    lines.append(f"{total - len(failed)}/{total} checks passed")
    return "\n".join(lines) + "\n"


def _report_rows(spec: ExperimentSpec, rows: list[CheckRow]) -> int:
    write_text(spec.output, _render_rows(rows, spec.output_format))
    total, failed = summarize(rows)
    for row in failed[:10]:
        log.error(f"Failed check: {row}")
    log.info(f"{total - len(failed)} of {total} checks passed.")
    return EXIT_FAILED if failed else EXIT_OK


def _verify(spec: ExperimentSpec) -> int:
    return _report_rows(spec, _verify_rows(spec))


def _bench(spec: ExperimentSpec) -> int:
    rows = run_bench(bench_tasks(spec.seed, spec.config), spec.workers)
    if spec.output_format is OutputFormat.TEXT and spec.output is not None:
        spec = dataclasses.replace(spec, output_format=OutputFormat.CSV)
    return _report_rows(spec, rows)


def _setting(key: str | None) -> tuple[settings.SettingsCategory, str]:
    if key is None or "." not in key:
        raise PreconditionError(f"Settings are named Category.key, got {key!r}.")
    category_name, name = key.split(".", 1)
    for category in CATEGORIES:
        if category.__name__ == category_name and category.params(name) is not None:
            return category, name
    raise PreconditionError(f"Unknown setting {key!r}.")


def _check_setting(key: str, value: Fraction | int) -> None:
    """Raise `PreconditionError` when storing `value` under `key` would leave the settings unusable."""
    if not isinstance(value, Fraction):
        least = 0 if key == "Batch.default_seed" else 1
        if not least <= value < MAX_SEED:
            raise PreconditionError(f"{key} must lie in [{least}, {MAX_SEED}), got {value}.")
    if key.startswith("Batch."):
        return
    values = {
        f"{category.__name__}.{name}": getattr(category, name)
        for category in (settings.Bounds, settings.Solver)
        for name in category.setting_names()
    }
    values[key] = value
    Config(
        values["Bounds.eps"],
        values["Bounds.eps1"],
        values["Bounds.eps2"],
        values["Bounds.eps3"],
        values["Bounds.delta0"],
        SolverBudget(values["Solver.max_exact_vertices"], values["Solver.max_search_nodes"]),
    )


def _render_setting(value: t.Any) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def _config(spec: ExperimentSpec) -> int:
    action, key, value = (spec.options[name] for name in ("action", "key", "value"))
    if action == "show":
        lines = [
            f"{category.__name__}.{name} = {_render_setting(getattr(category, name))}"
            for category in CATEGORIES
            for name in category.setting_names()
        ]
        write_text(spec.output, "\n".join(lines) + "\n")
        return EXIT_OK

    category, name = _setting(key)
    if action == "get":
        write_text(spec.output, _render_setting(getattr(category, name)) + "\n")
        return EXIT_OK

    if value is None:
        raise PreconditionError("`config set` needs a value.")
    default = t.cast(settings.SettingsParams, category.params(name)).default
    try:
        parsed = parse_rational(value) if isinstance(default, Fraction) else int(value)
    except ValueError as e:
        raise PreconditionError(str(e)) from None
    _check_setting(key, parsed)
    setattr(category, name, parsed)
    log.info(f"Set {key} to {value}.")
    return EXIT_OK


_DISPATCH: dict[Command, collections.abc.Callable[[ExperimentSpec], int]] = {
    Command.GENERATE: _generate,
    Command.SQUARE: _square,
    Command.COLOR: _color,
    Command.SELECT: _select,
    Command.RECOGNIZE: _recognize,
    Command.VERIFY: _verify,
    Command.BENCH: _bench,
    Command.CONFIG: _config,
}


# endregion


def run(spec: ExperimentSpec) -> int:
    """
    Run `spec` and return the exit status.

    0 on success, 1 when a check fails or a counterexample is found,
    2 when the input can't be parsed or doesn't meet a precondition.
    """
    log.debug(f"Running {spec.command} on {spec.source}.")
    try:
        return _DISPATCH[spec.command](spec)
    except (GraphFormatError, PreconditionError) as e:
        log.error(f"Invalid input: {e}")
        return EXIT_USAGE
    except CounterexampleError as e:
        log.error(f"Counterexample found: {e}")
        return EXIT_FAILED
    except BudgetExceededError as e:
        log.error(f"Search budget exceeded: {e}")
        return EXIT_FAILED


def execute(args: argparse.Namespace) -> int:
    """Resolve `args` and run them, mapping invalid input to exit status 2."""
    try:
        spec = spec_from_args(args)
    except (GraphFormatError, PreconditionError) as e:
        log.error(f"Invalid input: {e}")
        return EXIT_USAGE
    return run(spec)


def main(argv: collections.abc.Sequence[str] | None = None) -> int:
    """Parse `argv` and run the command; argparse exits with status 2 on unknown arguments."""
    return execute(build_parser().parse_args(argv))
