# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import dataclasses
import enum
import itertools
import logging
import typing as t

import networkx as nx

from claw_square.errors import PreconditionError
from claw_square.generators import c5_blowup, complete_bipartite, f_of_delta
from claw_square.graph import Multigraph, SimpleGraph, Verdict, line_graph, square, underlying_simple
from claw_square.search import clique_number
from claw_square.verifier.rows import CheckRow

if t.TYPE_CHECKING:
    import collections.abc

log = logging.getLogger(__name__)

ATLAS_MAX_VERTICES = 7


class Branch(enum.Enum):
    """Branch of the edge bound for multigraphs whose underlying graph has no induced 2K2."""

    BIPARTITE = "i"
    TRIANGLE_FREE = "ii"
    CLIQUE_5 = "iii"
    CLIQUE_4 = "iv"
    CLIQUE_3 = "v"


@dataclasses.dataclass(frozen=True)
class CgttVerdict:
    """
    Edge count of a multigraph against the bound of its branch.

    `equality` is whether the bound is attained, `extremal` whether the multigraph is
    the branch's extremal graph; the two agree on a passing verdict.
    """

    branch: Branch
    edges: int
    delta: int
    omega: int
    bound: int
    equality: bool
    extremal: bool

    @property
    def passed(self) -> bool:
        """The bound holds and equality happens exactly on the extremal graph."""
        if self.branch in {Branch.BIPARTITE, Branch.TRIANGLE_FREE}:
            return self.edges <= self.bound and self.equality == self.extremal
        return self.edges < self.bound

    def rows(self, instance: str) -> list[CheckRow]:  # noqa: D102
        relation = "<=" if self.branch in {Branch.BIPARTITE, Branch.TRIANGLE_FREE} else "<"
        rows = [
            CheckRow.compare(
                instance, f"cgtt_{self.branch.value}", self.edges, relation, self.bound
            )
        ]
        if relation == "<=":
            rows.append(
                CheckRow.flag(
                    instance, f"cgtt_{self.branch.value}_equality", self.equality == self.extremal
                )
            )
        return rows


def is_2k2_free(graph: SimpleGraph) -> Verdict:
    """Return whether `graph` has no induced pair of disjoint edges, the witness is such a pair."""
    edges = list(graph.edges())
    for (u1, v1), (u2, v2) in itertools.combinations(edges, 2):
        if len({u1, v1, u2, v2}) < 4:
            continue
        if not any(graph.has_edge(x, y) for x in (u1, v1) for y in (u2, v2)):
            return Verdict(False, ((u1, v1), (u2, v2)))
    return Verdict(True)


def _isomorphic(multigraph: Multigraph, simple: Multigraph) -> bool:
    return (
        multigraph.is_simple()
        and multigraph.n == simple.n
        and nx.is_isomorphic(
            underlying_simple(multigraph).to_networkx(), underlying_simple(simple).to_networkx()
        )
    )


def check_cgtt(multigraph: Multigraph) -> CgttVerdict | None:
    """
    Check the edge bound of a multigraph whose underlying simple graph is connected and 2K2-free.

    Returns None when that precondition fails or `multigraph` has no edges.
    """
    simple = underlying_simple(multigraph)
    if multigraph.edge_count == 0 or not simple.is_connected() or not is_2k2_free(simple):
        log.debug("Skipping edge bound, the multigraph is not connected and 2K2-free.")
        return None

    edges, delta = multigraph.edge_count, multigraph.max_degree
    omega = clique_number(simple).size
    if nx.is_bipartite(simple.to_networkx()):
        bound = delta * delta
        extremal = _isomorphic(multigraph, complete_bipartite(delta, delta))
        return CgttVerdict(Branch.BIPARTITE, edges, delta, omega, bound, edges == bound, extremal)

    bound = f_of_delta(delta)
    if omega == 2:
        extremal = _isomorphic(multigraph, c5_blowup(delta))
        return CgttVerdict(
            Branch.TRIANGLE_FREE, edges, delta, omega, bound, edges == bound, extremal
        )
    if omega >= 5:
        branch = Branch.CLIQUE_5
    elif omega == 4:
        branch = Branch.CLIQUE_4
    else:
        branch = Branch.CLIQUE_3
    return CgttVerdict(branch, edges, delta, omega, bound, edges == bound, False)


def _multiplicity_assignments(
    graph: SimpleGraph, max_degree: int, max_multiplicity: int
) -> collections.abc.Iterator[Multigraph]:
    pairs = list(graph.edges())
    degrees = [0] * graph.n
    chosen: list[int] = []

    def assign(index: int) -> collections.abc.Iterator[Multigraph]:
        if index == len(pairs):
            yield Multigraph(graph.n, dict(zip(pairs, chosen)))
            return
        u, v = pairs[index]
        for multiplicity in range(1, max_multiplicity + 1):
            if degrees[u] + multiplicity > max_degree or degrees[v] + multiplicity > max_degree:
                break
            degrees[u] += multiplicity
            degrees[v] += multiplicity
            chosen.append(multiplicity)
            yield from assign(index + 1)
            chosen.pop()
            degrees[u] -= multiplicity
            degrees[v] -= multiplicity

    yield from assign(0)


def small_2k2_free_multigraphs(
    max_vertices: int = 6, max_degree: int = 4, max_multiplicity: int = 3
) -> collections.abc.Iterator[Multigraph]:
    """
    Yield every connected multigraph within the limits whose underlying graph is 2K2-free.

    Underlying graphs come from the graph atlas, one per isomorphism class;
    multiplicity assignments are not reduced up to isomorphism.
    """
    if max_vertices > ATLAS_MAX_VERTICES:
        raise PreconditionError(f"The graph atlas stops at {ATLAS_MAX_VERTICES} vertices.")
    for atlas_graph in nx.graph_atlas_g():
        if not 2 <= atlas_graph.number_of_nodes() <= max_vertices:
            continue
        if not nx.is_connected(atlas_graph):
            continue
        simple, _ = SimpleGraph.from_networkx(atlas_graph)
        if simple.max_degree > max_degree or not is_2k2_free(simple):
            continue
        yield from _multiplicity_assignments(simple, max_degree, max_multiplicity)


def check_cgtt_exhaustive(
    max_vertices: int = 6, max_degree: int = 4, max_multiplicity: int = 3
) -> list[CheckRow]:
    """Check the edge bound on all of `small_2k2_free_multigraphs`, equality cases are logged."""
    rows = []
    for index, multigraph in enumerate(
        small_2k2_free_multigraphs(max_vertices, max_degree, max_multiplicity)
    ):
        verdict = check_cgtt(multigraph)
        if verdict is None:
            continue
        if verdict.equality:
            log.debug(f"Equality in branch {verdict.branch.value} on {dict(multigraph.mult)}.")
        rows.extend(verdict.rows(f"atlas-{index}"))
    log.info(f"Checked the edge bound on {len(rows)} rows of small multigraphs.")
    return rows


def blowup_table_rows(deltas: collections.abc.Iterable[int]) -> list[CheckRow]:
    """Compare the edge count of every five-cycle blow-up with its closed form."""
    return [
        CheckRow.compare(
            f"c5_blowup-{delta}", "blowup_edges", c5_blowup(delta).edge_count, "==", f_of_delta(delta)
        )
        for delta in deltas
    ]


def extremal_square_rows(deltas: collections.abc.Iterable[int]) -> list[CheckRow]:
    """Check that the line graph of every five-cycle blow-up has a complete square."""
    return [
        CheckRow.flag(
            f"c5_blowup-{delta}",
            "complete_line_square",
            square(line_graph(c5_blowup(delta)).graph).is_complete(),
        )
        for delta in deltas
    ]
