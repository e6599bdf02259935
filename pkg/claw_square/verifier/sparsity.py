# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import collections
import dataclasses
import functools
import itertools
import logging
import typing as t
from fractions import Fraction
from math import comb

from claw_square.errors import PreconditionError
from claw_square.graph import (
    LineGraph,
    Multigraph,
    SimpleGraph,
    iter_bits,
    line_graph,
    square,
)
from claw_square.verifier.config import Config
from claw_square.verifier.rows import CheckRow

if t.TYPE_CHECKING:
    import collections.abc

log = logging.getLogger(__name__)

EdgeInstance = tuple[int, int, int]


def _choose2(value: Fraction | int) -> Fraction:
    """``x(x-1)/2`` extended to rationals, convex in `x`."""
    return Fraction(value) * (value - 1) / 2


class LineSquare:
    """The line graph of a multigraph with its square, shared by all edge reports."""

    def __init__(self, multigraph: Multigraph):
        self.multigraph = multigraph
        self.lines: LineGraph = line_graph(multigraph)
        self.square: SimpleGraph = square(self.lines.graph)
        self.index = {label: i for i, label in enumerate(self.lines.labels)}

    def vertex_of(self, edge: EdgeInstance | tuple[int, int]) -> int:
        """Return the line graph vertex of `edge`, the copy number defaults to 0."""
        u, v, *copy = edge
        label = (min(u, v), max(u, v), copy[0] if copy else 0)
        try:
            return self.index[label]
        except KeyError:
            raise PreconditionError(f"{label} is not an edge instance of the multigraph.") from None


class IdentityValues(t.NamedTuple):
    """Square degree of an edge from the counting formula and from the square itself."""

    formula: int
    direct: int


@dataclasses.dataclass(frozen=True)
class _EdgeNeighbourhood:
    """The vertex sets around an edge ``u1u2`` of a multigraph."""

    u1: int
    u2: int
    a: frozenset[int]
    b: frozenset[int]
    c: frozenset[int]
    parallel: int
    lambda_counts: tuple[tuple[int, int], ...]
    edges_within: int
    edges_to_w: dict[int, int]

    @functools.cached_property
    def w(self) -> frozenset[int]:  # noqa: D102
        return self.a | self.b

    def deficit(self, delta: int) -> int:
        """``|E(A∪B)| + (2Δ-1)|M| + Σ_{i≥2} (i-1)Δ|Λ_i|``, the amount by which the degree drops."""
        return (
            self.edges_within
            + (2 * delta - 1) * self.parallel
            + sum((i - 1) * delta * count for i, count in self.lambda_counts if i >= 2)
        )


def _neighbourhood(multigraph: Multigraph, u1: int, u2: int) -> _EdgeNeighbourhood:
    a = multigraph.neighbors(u1) - {u2}
    b = multigraph.neighbors(u2) - {u1}
    w = a | b
    ends = {u1, u2}
    c = frozenset(
        x for y in w for x in multigraph.neighbors(y) if x not in w and x not in ends
    )
    lambda_counter = collections.Counter(
        multigraph.multiplicity(x, u1) + multigraph.multiplicity(x, u2) for x in w
    )
    edges_within = sum(
        multigraph.multiplicity(x, y) for x, y in itertools.combinations(sorted(w), 2)
    )
    return _EdgeNeighbourhood(
        u1,
        u2,
        frozenset(a),
        frozenset(b),
        c,
        multigraph.multiplicity(u1, u2) - 1,
        tuple(sorted(lambda_counter.items())),
        edges_within,
        {x: multigraph.edges_between(x, w) for x in sorted(c)},
    )


def edge_square_degree_identity(
    multigraph: Multigraph,
    edge: EdgeInstance | tuple[int, int],
    *,
    context: LineSquare | None = None,
) -> IdentityValues:
    """
    Return ``2Δ(Δ-1) - (|E(A∪B)| + (2Δ-1)|M| + Σ (i-1)Δ|Λ_i|)`` and the degree of `edge` in ``L(F)²``.

    Both values are equal on a Δ-regular multigraph.
    """
    if not multigraph.is_regular():
        raise PreconditionError("The degree identity needs a regular multigraph.")
    context = context or LineSquare(multigraph)
    vertex = context.vertex_of(edge)
    u1, u2, _ = context.lines.labels[vertex]
    delta = multigraph.max_degree
    around = _neighbourhood(multigraph, u1, u2)
    formula = 2 * delta * (delta - 1) - around.deficit(delta)
    return IdentityValues(formula, context.square.degree(vertex))


@dataclasses.dataclass(frozen=True)
class SparsityReport:
    """
    The neighbourhood of edge `edge` in the square of the line graph, split along the sparsity cases.

    `a`, `b` are the other neighbours of the two ends and may intersect, `c` is the ring beyond them,
    `parallel` counts the other copies of the edge and `lambda_counts` maps ``i`` to the number of
    vertices of ``A ∪ B`` with ``i`` edges to the ends.
    `pairs_out` counts pairs ``(f, g)`` with `f` in the neighbourhood and `g` adjacent to `f` outside it,
    `walks_out` the three-edge walks leaving through the ring.
    `pair_walks` counts two-edge walks between vertices of `c_prime` through ``A ∪ B``,
    `walk_degrees` holds the number of edges from each vertex of ``A ∪ B`` into `c_prime`.
    """

    edge: EdgeInstance
    delta: int
    regular: bool
    a: frozenset[int]
    b: frozenset[int]
    c: frozenset[int]
    parallel: int
    lambda_counts: tuple[tuple[int, int], ...]
    edges_within: int
    deficit: int
    case: int
    c_prime: frozenset[int]
    pair_walks: dict[tuple[int, int], int]
    walk_degrees: tuple[int, ...]
    degree: int
    induced_edges: int
    neighbour_degree_sum: int
    pairs_out: int
    ring_pairs: int
    walks_out: int
    heavy: bool
    config: Config

    @property
    def ratio(self) -> Fraction:
        """Edges induced by the neighbourhood relative to ``C(2Δ(Δ-1), 2)``."""
        possible = comb(2 * self.delta * (self.delta - 1), 2)
        if possible == 0:
            return Fraction(0)
        return Fraction(self.induced_edges, possible)

    # region checks
    def _jensen_rows(self, instance: str) -> list[CheckRow]:
        walk_total = sum(self.pair_walks.values())
        degree_pairs = sum(comb(degree, 2) for degree in self.walk_degrees)
        rows = [CheckRow.compare(instance, "case3_pair_identity", walk_total, "==", degree_pairs)]
        if self.walk_degrees:
            average = Fraction(sum(self.walk_degrees), len(self.walk_degrees))
            rows.append(
                CheckRow.compare(
                    instance,
                    "case3_jensen_degrees",
                    degree_pairs,
                    ">=",
                    len(self.walk_degrees) * _choose2(average),
                )
            )
        if self.pair_walks:
            average = Fraction(walk_total, len(self.pair_walks))
            rows.append(
                CheckRow.compare(
                    instance,
                    "case3_jensen_pairs",
                    sum(comb(count, 2) for count in self.pair_walks.values()),
                    ">=",
                    len(self.pair_walks) * _choose2(average),
                )
            )
        return rows

    def checks(self, instance: str) -> list[CheckRow]:
        """Evaluate the exact inequalities behind the case split, applicable to this edge's case."""
        delta, deg = self.delta, self.degree
        rows = [
            CheckRow.compare(
                instance,
                "walk_handshake",
                2 * self.induced_edges,
                "==",
                self.neighbour_degree_sum - deg - self.pairs_out,
            ),
            CheckRow.compare(
                instance,
                "neighbour_degrees",
                self.neighbour_degree_sum,
                "<=",
                2 * delta * (delta - 1) * deg,
            ),
            CheckRow.compare(instance, "pairs_out_ring", self.pairs_out, ">=", self.ring_pairs),
        ]
        if not self.regular:
            return rows

        rows.append(
            CheckRow.compare(
                instance, "degree_identity", deg, "==", 2 * delta * (delta - 1) - self.deficit
            )
        )
        if self.case == 1:
            rows.append(
                CheckRow.compare(
                    instance, "case1_degree", deg, "<", (2 - self.config.eps1) * delta**2
                )
            )
            rows.append(
                CheckRow.compare(
                    instance, "case1_induced", 2 * self.induced_edges, "<=", deg * (deg - 1)
                )
            )
        elif self.case == 2:
            rows.append(
                CheckRow.compare(
                    instance, "case2_walks", self.walks_out, ">", self.config.eps2 * delta**4
                )
            )
        elif self.case == 3:
            rows.extend(self._jensen_rows(instance))
        return rows

    # endregion


def _classify(around: _EdgeNeighbourhood, delta: int, deficit: int, config: Config) -> int:
    if deficit > config.eps1 * delta**2:
        return 1
    ring_balance = sum(count * (delta - count) for count in around.edges_to_w.values())
    if ring_balance > config.eps2 * delta**3:
        return 2
    return 3


def sparsity_report(
    multigraph: Multigraph,
    edge: EdgeInstance | tuple[int, int],
    config: Config = Config(),
    *,
    context: LineSquare | None = None,
) -> SparsityReport:
    """
    Analyse the neighbourhood of `edge` in ``L(F)²``.

    Irregular multigraphs are reported too, their case split uses the maximum degree
    and skips the checks that need regularity.
    """
    context = context or LineSquare(multigraph)
    vertex = context.vertex_of(edge)
    u1, u2, copy = context.lines.labels[vertex]
    delta = multigraph.max_degree
    around = _neighbourhood(multigraph, u1, u2)
    deficit = around.deficit(delta)
    case = _classify(around, delta, deficit, config)

    masks = context.square.masks
    neighbourhood = masks[vertex]
    closed = neighbourhood | (1 << vertex)
    neighbour_masks = [masks[f] for f in iter_bits(neighbourhood)]

    w = sorted(around.w)
    c_prime = frozenset(
        c for c, count in around.edges_to_w.items() if count >= config.eps3 * delta
    )
    report = SparsityReport(
        edge=(u1, u2, copy),
        delta=delta,
        regular=multigraph.is_regular(),
        a=around.a,
        b=around.b,
        c=around.c,
        parallel=around.parallel,
        lambda_counts=around.lambda_counts,
        edges_within=around.edges_within,
        deficit=deficit,
        case=case,
        c_prime=c_prime,
        pair_walks=_pair_walks(multigraph, w, c_prime),
        walk_degrees=tuple(multigraph.edges_between(x, c_prime) for x in w),
        degree=neighbourhood.bit_count(),
        induced_edges=sum((mask & neighbourhood).bit_count() for mask in neighbour_masks) // 2,
        neighbour_degree_sum=sum(mask.bit_count() for mask in neighbour_masks),
        pairs_out=sum((mask & ~closed).bit_count() for mask in neighbour_masks),
        ring_pairs=sum(
            count * (multigraph.degree(c) - count) for c, count in around.edges_to_w.items()
        ),
        walks_out=sum(
            multigraph.multiplicity(x, c) * multigraph.degree(x) * (multigraph.degree(c) - count)
            for c, count in around.edges_to_w.items()
            for x in w
        ),
        heavy=8 * (around.parallel + 1) >= 3 * delta,
        config=config,
    )
    log.debug(f"Edge {report.edge}: case {case}, degree {report.degree}, ratio {report.ratio}.")
    return report


def _pair_walks(
    multigraph: Multigraph, w: collections.abc.Sequence[int], c_prime: frozenset[int]
) -> dict[tuple[int, int], int]:
    """
    Count two-edge walks ``c1 - x - c2`` through ``x ∈ A ∪ B`` for every pair of the heavy ring.

    Diagonal entries count pairs of distinct parallel edges from one `x` to `c`.
    """
    ordered = sorted(c_prime)
    walks: dict[tuple[int, int], int] = {}
    for index, c1 in enumerate(ordered):
        walks[(c1, c1)] = sum(comb(multigraph.multiplicity(x, c1), 2) for x in w)
        for c2 in ordered[index + 1 :]:
            walks[(c1, c2)] = sum(
                multigraph.multiplicity(x, c1) * multigraph.multiplicity(x, c2) for x in w
            )
    return walks


def sparsity_reports(
    multigraph: Multigraph, config: Config = Config()
) -> list[SparsityReport]:
    """
    Report every edge instance of `multigraph`, sharing one line graph square.

    From ``Δ >= delta0`` on, ratios above ``1 - eps`` are logged; they never fail a check.
    """
    context = LineSquare(multigraph)
    reports = [
        sparsity_report(multigraph, label, config, context=context)
        for label in context.lines.labels
    ]
    if reports and multigraph.max_degree >= config.delta0:
        worst = max(reports, key=lambda report: report.ratio)
        if worst.ratio > 1 - config.eps:
            log.warning(
                f"Edge {worst.edge} has sparsity ratio {worst.ratio} above {1 - config.eps}."
            )
    return reports
