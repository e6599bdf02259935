# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import logging
import typing as t

from claw_square.errors import PreconditionError
from claw_square.generators import IntervalRep, Strip, five_cycle_formula, realize_interval
from claw_square.graph import SimpleGraph, Verdict, second_neighborhood, square
from claw_square.recognition import find_claw
from claw_square.search import SolverBudget, chromatic_exact, clique_number
from claw_square.selector import neighbourhood_dichotomy, two_path_diagnostic
from claw_square.verifier.rows import CheckRow

log = logging.getLogger(__name__)


class IntervalBound(t.NamedTuple):
    """Largest relevant square degree of an interval graph against its linear bound in ω."""

    kind: str
    omega: int
    max_square_degree: int
    bound: int

    @property
    def holds(self) -> bool:  # noqa: D102
        return self.max_square_degree <= self.bound

    def row(self, instance: str) -> CheckRow:  # noqa: D102
        return CheckRow.compare(
            instance, f"{self.kind}_square_degree", self.max_square_degree, "<=", self.bound
        )


def check_interval_bounds(source: IntervalRep | Strip) -> IntervalBound:
    """
    Bound the square degrees of an interval graph by its clique number.

    A representation (linear ones are circular ones that don't wrap) has square degrees at most ``4ω - 4``;
    in a strip the neighbours of the end `a` have square degree at most ``3ω - 3``.
    """
    if isinstance(source, Strip):
        graph = source.graph
        omega = clique_number(graph).size
        squared = square(graph)
        value = max((squared.degree(v) for v in graph.adj[source.a]), default=0)
        return IntervalBound("strip", omega, value, 3 * omega - 3)

    graph = realize_interval(source)
    omega = clique_number(graph).size
    value = square(graph).max_degree
    return IntervalBound("circular", omega, value, max(0, 4 * omega - 4))


def _require_claw_free(graph: SimpleGraph) -> None:
    if (claw := find_claw(graph)) is not None:
        raise PreconditionError(f"Graph contains the claw {claw}.")


def max_square_degree_bound(graph: SimpleGraph, instance: str = "graph") -> CheckRow:
    """Check ``Δ(G²) <= 2ω² - 2ω`` on the claw-free `graph`."""
    _require_claw_free(graph)
    omega = clique_number(graph).size
    return CheckRow.compare(
        instance,
        "max_square_degree",
        square(graph).max_degree,
        "<=",
        max(0, 2 * omega * omega - 2 * omega),
    )


def check_lemma_cliquesecond(graph: SimpleGraph) -> Verdict:
    """
    Check that ``N(u) ∩ N²(v)`` is a clique of at most ``ω - 1`` vertices for every `v` and ``u ∈ N(v)``.

    The witness of a failure is the pair ``(v, u)``.
    """
    _require_claw_free(graph)
    omega = clique_number(graph).size
    for v in graph.vertices():
        far = second_neighborhood(graph, v)
        for u in sorted(graph.adj[v]):
            beyond = graph.adj[u] & far
            if len(beyond) > omega - 1 or not graph.is_clique(beyond):
                return Verdict(False, (v, u))
    return Verdict(True)


def check_dichotomy(graph: SimpleGraph) -> Verdict:
    """Check that every neighbourhood is a clique in the square of ``G - v`` or covered by two cliques."""
    _require_claw_free(graph)
    failing = neighbourhood_dichotomy(graph, graph.vertices())
    return Verdict(failing is None, failing)


def two_path_rows(graph: SimpleGraph, instance: str = "graph") -> list[CheckRow]:
    """Evaluate the two path counting bound on every vertex with a nonempty second neighbourhood."""
    rows = []
    for v in graph.vertices():
        if not second_neighborhood(graph, v):
            continue
        diagnostic = two_path_diagnostic(graph, v)
        rows.append(
            CheckRow.compare(
                instance, f"two_path_bound[{v}]", diagnostic.square_degree, "<=", diagnostic.bound
            )
        )
        rows.append(
            CheckRow.flag(
                instance,
                f"two_path_cliques[{v}]",
                diagnostic.c1_clique and diagnostic.c2_clique,
            )
        )
    return rows


class ConjectureReport(t.NamedTuple):
    """Chromatic number of the square against the five-cycle bound of its clique number."""

    omega: int
    chi: int
    bound: int
    diameter_two: bool
    vertices: int
    min_square_degree: int

    def rows(self, instance: str) -> list[CheckRow]:
        """The conjecture comparison, and the vertex bound when the square is complete and ``ω >= 6``."""
        rows = [CheckRow.compare(instance, "conjecture", self.chi, "<=", self.bound)]
        if self.diameter_two and self.omega >= 6:
            rows.append(CheckRow.compare(instance, "diameter_two", self.vertices, "<=", self.bound))
            rows.append(
                CheckRow.compare(
                    instance, "diameter_two_min_degree", self.min_square_degree, "==", self.vertices - 1
                )
            )
        return rows


def check_conjecture_and_diameter2(
    graph: SimpleGraph, *, budget: SolverBudget = SolverBudget()
) -> ConjectureReport:
    """
    Compute ``χ(G²)`` exactly and compare it with ``5ω²/4`` (even ω) or ``(5ω² - 2ω + 1)/4`` (odd ω).

    May raise `BudgetExceededError`.
    """
    _require_claw_free(graph)
    omega = clique_number(graph).size
    squared = square(graph)
    chi = chromatic_exact(squared, budget=budget).chi
    report = ConjectureReport(
        omega,
        chi,
        five_cycle_formula(omega),
        squared.is_complete(),
        graph.n,
        min((squared.degree(v) for v in squared.vertices()), default=0),
    )
    log.debug(f"Square chromatic number {chi} against bound {report.bound}.")
    return report
