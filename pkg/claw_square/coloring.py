# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import dataclasses
import enum
import itertools
import logging
import math
import typing as t
from fractions import Fraction

import more_itertools

from claw_square.constants import DEFAULT_EPS, MAX_EPS
from claw_square.errors import BudgetExceededError, CounterexampleError, PreconditionError
from claw_square.formats import dump_graph
from claw_square.graph import (
    Coloring,
    Multigraph,
    SimpleGraph,
    Verdict,
    delete_vertex,
    induced,
    line_graph,
    lowest_free_color,
    square,
)
from claw_square.recognition import find_claw, is_quasi_line, krausz_partition
from claw_square.search import (
    SolverBudget,
    chromatic_exact,
    clique_number,
    greedy_color,
    smallest_last_order,
)
from claw_square.selector import select_nonquasiline, select_quasiline

if t.TYPE_CHECKING:
    import collections.abc

log = logging.getLogger(__name__)


class ColoringMethod(enum.Enum):
    """Engine that produced a colouring."""

    EXACT = "exact"
    GREEDY_TRIVIAL = "greedy_trivial"
    MAIN_PROCEDURE = "main_procedure"


class StrongMode(enum.Enum):
    """How `strong_edge_coloring` colours the square of the line graph."""

    EXACT = "exact"
    GREEDY = "greedy"


class TraceStep(t.NamedTuple):
    """
    One step of the recursive procedure.

    `case` is ``"a"`` for a multigraph line graph coloured directly, ``"b"`` for a quasi-line removal
    and ``"c"`` for a non quasi-line removal. `available` holds the smallest number of colours
    open to a member of `s` when it was recoloured.
    """

    case: str
    vertex: int | None
    s: tuple[int, ...]
    vertices: int
    available: int | None = None

    def __str__(self):
        if self.case == "a":
            return f"a: {self.vertices} vertices coloured directly"
        text = f"{self.case}: removed {self.vertex} of {self.vertices}"
        if self.s:
            text += f", recoloured {list(self.s)} with {self.available} colours open"
        return text


@dataclasses.dataclass(frozen=True)
class ColoringResult:
    """
    A proper colouring of a square or of a line graph square.

    `bound_certificate` is the number of colours the run is guaranteed to stay within.
    """

    coloring: Coloring
    method: ColoringMethod
    bound_certificate: int
    omega: int
    trace: tuple[TraceStep, ...] = ()
    edge_labels: tuple[tuple[int, int, int], ...] | None = None

    @property
    def colors_used(self) -> int:  # noqa: D102
        return self.coloring.colors_used


class PaletteMargins(t.NamedTuple):
    """The palette of the recursive procedure against the two degree bounds it has to beat."""

    palette: int
    degenerate: int
    non_quasi_line: Fraction

    @property
    def holds(self) -> bool:  # noqa: D102
        return self.degenerate <= self.palette and self.non_quasi_line <= self.palette


def trivial_bound(omega: int) -> int:
    """Return ``max(3, 2ω² - 2ω + 1)``."""
    return max(3, 2 * omega * omega - 2 * omega + 1)


def _check_eps(eps: Fraction) -> None:
    if not 0 < eps <= MAX_EPS:
        raise PreconditionError(f"Epsilon must lie in (0, {MAX_EPS}], got {eps}.")


def target_palette(omega: int, eps: Fraction) -> int:
    """Return ``⌊(2-ε)ω²⌋``."""
    _check_eps(eps)
    return math.floor((2 - eps) * omega * omega)


def palette_size(omega: int, eps: Fraction) -> int:
    """Return the palette of the recursive procedure, ``⌊(2-ε)ω²⌋`` capped by the trivial bound."""
    return min(target_palette(omega, eps), trivial_bound(omega))


def palette_margins(omega: int, eps: Fraction) -> PaletteMargins:
    """Compare ``⌊(2-ε)ω²⌋`` with ``ω² + ω + 1`` and ``ω² + (ω+1)/2``."""
    return PaletteMargins(
        target_palette(omega, eps),
        omega * omega + omega + 1,
        omega * omega + Fraction(omega + 1, 2),
    )


def verify_coloring(
    graph: SimpleGraph, coloring: Coloring | collections.abc.Sequence[int | None]
) -> Verdict:
    """Return whether no edge of `graph` is monochromatic, the witness is the first offending edge."""
    colours = coloring.color if isinstance(coloring, Coloring) else tuple(coloring)
    if len(colours) != graph.n or any(colour is None for colour in colours):
        raise PreconditionError("Colouring must assign a colour to every vertex.")
    for u, v in graph.edges():
        if colours[u] == colours[v]:
            return Verdict(False, (u, v))
    return Verdict(True)


def _require_claw_free(graph: SimpleGraph) -> None:
    if (claw := find_claw(graph)) is not None:
        raise PreconditionError(f"Graph contains the claw {claw}.")


def _greedy_square_colors(graph: SimpleGraph) -> list[int]:
    target = square(graph)
    return greedy_color(target, reversed(smallest_last_order(target)))


def greedy_trivial_square_coloring(graph: SimpleGraph) -> ColoringResult:
    """
    Colour the square of the claw-free `graph` greedily in reverse smallest-last order.

    The result stays within ``max(3, 2ω² - 2ω + 1)`` colours,
    `CounterexampleError` is raised should it not.
    """
    _require_claw_free(graph)
    omega = clique_number(graph).size
    bound = trivial_bound(omega)
    colours = _greedy_square_colors(graph)
    used = max(colours, default=-1) + 1
    if used > bound:
        instance = dump_graph(graph)
        log.error(f"Greedy square colouring used {used} > {bound} colours:\n{instance}")
        raise CounterexampleError(f"Greedy used {used} colours, bound is {bound}.", instance)
    return ColoringResult(
        Coloring(tuple(colours), max(used, 1)),
        ColoringMethod.GREEDY_TRIVIAL,
        bound,
        omega,
    )


# region recursive procedure
@dataclasses.dataclass
class _Recursion:
    palette: int
    budget: SolverBudget
    trace: list[TraceStep] = dataclasses.field(default_factory=list)

    def fail(self, graph: SimpleGraph, message: str) -> t.NoReturn:
        instance = dump_graph(graph)
        log.error(f"{message}, instance follows:\n{instance}")
        raise CounterexampleError(message, instance)

    def free_color(self, graph: SimpleGraph, used: set[int], vertex: int) -> int:
        colour = lowest_free_color(used)
        if colour >= self.palette:
            self.fail(graph, f"No free colour for vertex {vertex} in a palette of {self.palette}")
        return colour

    def base_case(self, graph: SimpleGraph) -> list[int]:
        target = square(graph)
        if graph.n <= self.budget.max_vertices:
            try:
                return list(chromatic_exact(target, budget=self.budget).coloring.color)
            except BudgetExceededError as e:
                log.debug(f"Exact base case over budget, using greedy ({e}).")
        return _greedy_square_colors(graph)

    def colour(self, graph: SimpleGraph, original: tuple[int, ...]) -> list[int]:
        if graph.n == 0:
            return []
        if krausz_partition(graph) is not None:
            colours = self.base_case(graph)
            if max(colours) >= self.palette:
                self.fail(graph, f"Base case needs more than {self.palette} colours")
            self.trace.append(TraceStep("a", None, (), graph.n))
            return colours

        quasi_line = is_quasi_line(graph)
        if quasi_line:
            component = more_itertools.first(
                component
                for component in graph.components()
                if krausz_partition(induced(graph, component).graph) is None
            )
        else:
            component = more_itertools.only(
                component for component in graph.components() if quasi_line.witness in component
            )
        sub = induced(graph, component)
        if quasi_line:
            witness = select_quasiline(sub.graph)
            case = "b"
        else:
            witness = select_nonquasiline(sub.graph)
            case = "c"
        v = sub.vertices[witness.v]
        s = sorted(sub.vertices[u] for u in witness.s)
        log.debug(f"Case {case} on {graph.n} vertices removes {v}, S={s}.")

        rest = delete_vertex(graph, v)
        colours: list[int | None] = [None] * graph.n
        rest_colours = self.colour(rest.graph, tuple(original[x] for x in rest.vertices))
        for local, colour in enumerate(rest_colours):
            colours[rest.vertices[local]] = colour

        target = square(graph)
        available = None
        if s:
            for u in s:
                colours[u] = None
            for u in s:
                used = {colours[x] for x in target.adj[u] if colours[x] is not None}
                # S and v are uncoloured here, so this counts only the fixed neighbours.
                open_count = self.palette - len(used)
                if open_count < self.palette - (witness.omega**2 + witness.omega) + len(s):
                    self.fail(graph, f"Only {open_count} colours open for {u}")
                available = open_count if available is None else min(available, open_count)
            for u in s:
                used = {colours[x] for x in target.adj[u] if colours[x] is not None}
                colours[u] = self.free_color(graph, used, u)

        colours[v] = self.free_color(
            graph, {colours[x] for x in target.adj[v] if colours[x] is not None}, v
        )
        self.trace.append(
            TraceStep(case, original[v], tuple(original[u] for u in s), graph.n, available)
        )
        return t.cast(list[int], colours)


def main_square_coloring(
    graph: SimpleGraph,
    eps: Fraction = DEFAULT_EPS,
    *,
    budget: SolverBudget = SolverBudget(),
) -> ColoringResult:
    """
    Colour the square of the claw-free `graph` within ``min(⌊(2-ε)ω²⌋, 2ω² - 2ω + 1)`` colours.

    Multigraph line graphs are coloured directly, exactly when within `budget`.
    Otherwise a vertex found by the selectors is removed, the rest is coloured recursively,
    the quasi-line set `S` is recoloured with distinct colours and the removed vertex coloured last.
    Trace steps name vertices of `graph`.
    """
    _check_eps(eps)
    _require_claw_free(graph)
    omega = clique_number(graph).size
    recursion = _Recursion(palette_size(omega, eps), budget)
    colours = recursion.colour(graph, tuple(graph.vertices()))
    coloring = Coloring(tuple(colours), recursion.palette)

    verdict = verify_coloring(square(graph), coloring)
    if not verdict:
        recursion.fail(graph, f"Recursive colouring is improper on {verdict.witness}")
    log.info(
        f"Recursive colouring used {coloring.colors_used} of {recursion.palette} colours"
        f" in {len(recursion.trace)} steps."
    )
    return ColoringResult(
        coloring,
        ColoringMethod.MAIN_PROCEDURE,
        recursion.palette,
        omega,
        tuple(recursion.trace),
    )


# endregion


def strong_edge_coloring(
    multigraph: Multigraph,
    mode: StrongMode = StrongMode.EXACT,
    *,
    budget: SolverBudget = SolverBudget(),
) -> ColoringResult:
    """
    Colour the edges of `multigraph` so that edges within distance one differ.

    Vertices of the returned colouring are edge instances listed in `ColoringResult.edge_labels`.
    Exact mode may raise `BudgetExceededError`; greedy mode stays within ``2Δ² - 2Δ + 1``.
    """
    lines = line_graph(multigraph)
    target = square(lines.graph)
    omega = clique_number(lines.graph).size
    if mode is StrongMode.EXACT:
        result = chromatic_exact(target, budget=budget)
        return ColoringResult(
            result.coloring, ColoringMethod.EXACT, result.chi, omega, edge_labels=lines.labels
        )

    delta = multigraph.max_degree
    bound = max(1, 2 * delta * delta - 2 * delta + 1)
    colours = greedy_color(target, reversed(smallest_last_order(target)))
    return ColoringResult(
        Coloring(tuple(colours), max(bound, max(colours, default=0) + 1)),
        ColoringMethod.GREEDY_TRIVIAL,
        bound,
        omega,
        edge_labels=lines.labels,
    )


def conflicting_edges(
    multigraph: Multigraph, result: ColoringResult
) -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """Return edge instance pairs within distance one that got the same colour."""
    labels = result.edge_labels or ()
    conflicts = []
    for (i, first), (j, second) in itertools.combinations(enumerate(labels), 2):
        if result.coloring.color[i] != result.coloring.color[j]:
            continue
        ends = {first[0], first[1], second[0], second[1]}
        touching = len(ends) < 4
        joined = any(
            multigraph.multiplicity(x, y)
            for x in first[:2]
            for y in second[:2]
            if x != y
        )
        if touching or joined:
            conflicts.append((first, second))
    return conflicts
