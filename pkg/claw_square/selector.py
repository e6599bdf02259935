# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import dataclasses
import enum
import logging
import typing as t
from fractions import Fraction

from claw_square.errors import CounterexampleError, PreconditionError
from claw_square.formats import dump_graph
from claw_square.graph import (
    SimpleGraph,
    clique_in_square_without,
    second_neighborhood,
    square_degree,
)
from claw_square.recognition import (
    clique_cover_of,
    find_claw,
    is_quasi_line,
    krausz_partition,
)
from claw_square.search import clique_number

if t.TYPE_CHECKING:
    import collections.abc

log = logging.getLogger(__name__)


class SelectorVariant(enum.Enum):
    """Which structural conclusion a witness realizes."""

    NON_QUASI_LINE = "non_quasi_line"
    QUASI_LINE = "quasi_line"


class RecordedCheck(t.NamedTuple):
    """An integer comparison ``value <= limit`` recorded by a selector."""

    name: str
    value: int
    limit: int

    @property
    def holds(self) -> bool:  # noqa: D102
        return self.value <= self.limit

    def __str__(self):
        return f"{self.name}: {self.value} <= {self.limit}"


@dataclasses.dataclass(frozen=True)
class SelectorWitness:
    """
    A vertex `v` (and for quasi-line graphs a set `s`) found by conclusion search.

    `checks` hold the degree comparisons, `clique_ok` is the clique condition in the square of ``G - v``.
    """

    variant: SelectorVariant
    v: int
    s: frozenset[int]
    omega: int
    checks: tuple[RecordedCheck, ...]
    clique_ok: bool

    def revalidate(self, graph: SimpleGraph) -> bool:
        """Recompute every recorded condition on `graph` independently of the scan that found it."""
        if self.variant is SelectorVariant.NON_QUASI_LINE:
            return (
                not self.s
                and 2 * square_degree(graph, self.v) <= _non_quasi_line_limit(self.omega)
                and clique_in_square_without(graph, graph.adj[self.v], self.v)
            )
        limit = _degenerate_limit(self.omega)
        return (
            self.s <= graph.adj[self.v]
            and all(square_degree(graph, u) <= limit for u in self.s | {self.v})
            and clique_in_square_without(graph, graph.adj[self.v] - self.s, self.v)
        )


def _non_quasi_line_limit(omega: int) -> int:
    """Twice the bound ``ω² + (ω+1)/2``, kept integral."""
    return 2 * omega * omega + omega + 1


def _degenerate_limit(omega: int) -> int:
    return omega * omega + omega


def _scan_failure(graph: SimpleGraph, what: str) -> t.NoReturn:
    instance = dump_graph(graph)
    log.error(f"{what} found no vertex, instance follows:\n{instance}")
    raise CounterexampleError(f"{what} found no vertex.", instance)


def _require_connected_claw_free(graph: SimpleGraph) -> None:
    if graph.n == 0 or not graph.is_connected():
        raise PreconditionError("Selectors need a connected nonempty graph.")
    if (claw := find_claw(graph)) is not None:
        raise PreconditionError(f"Graph contains the claw {claw}.")


def select_nonquasiline(graph: SimpleGraph) -> SelectorWitness:
    """
    Find `v` with ``deg_G²(v) <= ω² + (ω+1)/2`` whose neighbourhood is a clique in the square of ``G - v``.

    Vertices whose neighbourhood can't be covered by two cliques are scanned first.
    Raise `CounterexampleError` with the serialized instance if no vertex qualifies.
    """
    _require_connected_claw_free(graph)
    if is_quasi_line(graph):
        raise PreconditionError("Graph is quasi-line, use `select_quasiline`.")

    omega = clique_number(graph).size
    limit = _non_quasi_line_limit(omega)
    uncovered = [v for v in graph.vertices() if clique_cover_of(graph, graph.adj[v]) is None]
    uncovered_set = set(uncovered)
    order = uncovered + [v for v in graph.vertices() if v not in uncovered_set]

    for v in order:
        degree = square_degree(graph, v)
        if 2 * degree > limit:
            continue
        if clique_in_square_without(graph, graph.adj[v], v):
            log.debug(f"Non quasi-line selector picked {v} with square degree {degree}.")
            return SelectorWitness(
                SelectorVariant.NON_QUASI_LINE,
                v,
                frozenset(),
                omega,
                (RecordedCheck("2*square_degree(v)", 2 * degree, limit),),
                True,
            )
    _scan_failure(graph, "Non quasi-line selector")


def degenerate_set(graph: SimpleGraph, v: int, omega: int) -> frozenset[int]:
    """Return the neighbours of `v` with square degree at most ``ω² + ω``."""
    limit = _degenerate_limit(omega)
    return frozenset(u for u in graph.adj[v] if square_degree(graph, u) <= limit)


def select_quasiline(graph: SimpleGraph) -> SelectorWitness:
    """
    Find `v` and ``S ⊆ N(v)`` of vertices with square degree at most ``ω² + ω``.

    `v` itself has square degree at most ``ω² + ω`` and ``N(v) - S`` is a clique in the square of ``G - v``.
    `S` is taken maximal, which only shrinks the set that has to be a clique.
    """
    _require_connected_claw_free(graph)
    if not is_quasi_line(graph):
        raise PreconditionError("Graph isn't quasi-line, use `select_nonquasiline`.")
    if krausz_partition(graph) is not None:
        raise PreconditionError("Graph is a line graph of a multigraph.")

    omega = clique_number(graph).size
    limit = _degenerate_limit(omega)
    for v in graph.vertices():
        degree = square_degree(graph, v)
        if degree > limit:
            continue
        s = degenerate_set(graph, v, omega)
        if clique_in_square_without(graph, graph.adj[v] - s, v):
            log.debug(f"Quasi-line selector picked {v} with S={sorted(s)}.")
            checks = (
                RecordedCheck("square_degree(v)", degree, limit),
                *(
                    RecordedCheck(f"square_degree({u})", square_degree(graph, u), limit)
                    for u in sorted(s)
                ),
            )
            return SelectorWitness(SelectorVariant.QUASI_LINE, v, s, omega, checks, True)
    _scan_failure(graph, "Quasi-line selector")


# region two path diagnostic
@dataclasses.dataclass(frozen=True)
class TwoPathDiagnostic:
    """
    Partition of ``N(v)`` from counting paths of length two into the second neighbourhood.

    `k` is the least number of common neighbours of `v` and a vertex at distance two,
    attained first by `u_min`; `w` is the lowest of those common neighbours.
    """

    v: int
    k: int
    u_min: int
    w: int
    x: frozenset[int]
    c1: frozenset[int]
    c2: frozenset[int]
    square_degree: int
    bound: Fraction
    c1_clique: bool
    c2_clique: bool

    @property
    def holds(self) -> bool:
        """Return True if both parts are cliques and the square degree respects `bound`."""
        return self.c1_clique and self.c2_clique and self.square_degree <= self.bound


def two_path_diagnostic(graph: SimpleGraph, v: int) -> TwoPathDiagnostic:
    """Compute the partition ``N(v) = X ∪ C1 ∪ C2`` and the bound ``(1 + (ω-1)/k)·deg(v)``."""
    graph.check_vertex(v)
    if (claw := find_claw(graph)) is not None:
        raise PreconditionError(f"Graph contains the claw {claw}.")
    far = second_neighborhood(graph, v)
    if not far:
        raise PreconditionError(f"Vertex {v} has an empty second neighbourhood.")

    neighbourhood = graph.adj[v]
    k, u_min = min((len(graph.adj[u] & neighbourhood), u) for u in far)
    common = graph.adj[u_min] & neighbourhood
    w = min(common)
    x = common - {w}
    c1 = ((neighbourhood & graph.adj[w]) - x) | {w}
    c2 = neighbourhood - x - c1

    omega = clique_number(graph).size
    bound = (1 + Fraction(omega - 1, k)) * len(neighbourhood)
    return TwoPathDiagnostic(
        v,
        k,
        u_min,
        w,
        frozenset(x),
        frozenset(c1),
        frozenset(c2),
        square_degree(graph, v),
        bound,
        graph.is_clique(c1),
        graph.is_clique(c2),
    )


# endregion


def neighbourhood_dichotomy(graph: SimpleGraph, vertices: collections.abc.Iterable[int]) -> int | None:
    """
    Return the first vertex of `vertices` breaking the neighbourhood dichotomy, None if there is none.

    A vertex breaks it when its neighbourhood is neither a clique in the square of ``G - v``
    nor covered by two cliques.
    """
    for v in vertices:
        neighbourhood = graph.adj[v]
        if clique_in_square_without(graph, neighbourhood, v):
            continue
        if clique_cover_of(graph, neighbourhood) is None:
            return v
    return None
