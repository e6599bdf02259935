# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import dataclasses
import enum
import itertools
import logging
import typing as t

import networkx as nx
import numpy as np

from claw_square.errors import PreconditionError
from claw_square.graph import Multigraph, SimpleGraph, line_graph

if t.TYPE_CHECKING:
    import collections.abc

    import typing_extensions as te

log = logging.getLogger(__name__)


class IntervalKind(enum.Enum):
    """Whether an interval representation lives on a circle or on a line."""

    CIRCULAR = "circular"
    LINEAR = "linear"


class SubstitutionMode(enum.Enum):
    """What a vertex bag induces after substitution."""

    STABLE = "stable"
    CLIQUE = "clique"


@dataclasses.dataclass(frozen=True)
class IntervalRep:
    """
    Integer geometry of a circular or linear interval graph.

    Vertex `v` sits at `positions[v]`, several vertices may share a position.
    A circular interval ``(s, e)`` covers the points from `s` clockwise to `e` on ``0..period-1``,
    a linear one covers ``s..e``.
    """

    kind: IntervalKind
    positions: tuple[int, ...]
    intervals: tuple[tuple[int, int], ...]
    period: int | None = None

    def __post_init__(self):
        if self.kind is IntervalKind.CIRCULAR:
            if self.period is None or self.period < 1:
                raise PreconditionError(f"Circular rep needs a positive period, got {self.period}.")
            out_of_range = [
                point
                for point in itertools.chain(self.positions, *self.intervals)
                if not 0 <= point < self.period
            ]
            if out_of_range:
                raise PreconditionError(
                    f"Points {out_of_range} outside of the circle of period {self.period}."
                )
        else:
            if self.period is not None:
                raise PreconditionError("Linear rep can't have a period.")
            for start, end in self.intervals:
                if start > end:
                    raise PreconditionError(f"Linear interval ({start}, {end}) is reversed.")

    @property
    def n(self) -> int:  # noqa: D102
        return len(self.positions)

    def covers(self, interval: tuple[int, int], point: int) -> bool:
        """Return True if `interval` contains `point`."""
        start, end = interval
        if self.kind is IntervalKind.LINEAR:
            return start <= point <= end
        return (point - start) % self.period <= (end - start) % self.period

    def is_covered(self, point: int) -> bool:  # noqa: D102
        return any(self.covers(interval, point) for interval in self.intervals)

    def cut_at(self, point: int) -> IntervalRep:
        """
        Cut a circular rep at `point`, which no interval may cover.

        Positions and intervals are shifted so `point` becomes 0; the realized graph is unchanged.
        """
        if self.kind is not IntervalKind.CIRCULAR:
            raise PreconditionError("Only circular reps can be cut.")
        if self.is_covered(point):
            raise PreconditionError(f"Point {point} is covered by an interval.")
        shift = lambda value: (value - point) % self.period  # noqa: E731
        return IntervalRep(
            IntervalKind.LINEAR,
            tuple(shift(position) for position in self.positions),
            tuple((shift(start), shift(end)) for start, end in self.intervals),
        )


@dataclasses.dataclass(frozen=True)
class Strip:
    """A linear interval strip ``(G, a, b)``, `a` and `b` are the extreme vertices of `rep`."""

    rep: IntervalRep
    graph: SimpleGraph
    a: int
    b: int

    def __post_init__(self):
        if self.rep.kind is not IntervalKind.LINEAR:
            raise PreconditionError("Strips need a linear representation.")
        if self.a == self.b:
            raise PreconditionError(f"Strip ends coincide at vertex {self.a}.")
        positions = self.rep.positions
        if positions[self.a] != min(positions) or positions[self.b] != max(positions):
            raise PreconditionError(
                f"Strip ends {self.a}, {self.b} are not at the extreme positions."
            )
        for end in (self.a, self.b):
            if not self.graph.is_clique(self.graph.adj[end]):
                raise PreconditionError(f"Neighbourhood of strip end {end} is not a clique.")

    @classmethod
    def from_rep(cls, rep: IntervalRep, a: int, b: int) -> te.Self:  # noqa: D102
        return cls(rep, realize_interval(rep), a, b)

    @property
    def interior(self) -> list[int]:  # noqa: D102
        return [v for v in self.graph.vertices() if v not in (self.a, self.b)]


class EndSymbol(t.NamedTuple):
    """End `side` (``"a"`` or ``"b"``) of the strip at `index`."""

    side: str
    index: int

    def __str__(self):
        return f"{self.side}{self.index}"


@dataclasses.dataclass(frozen=True)
class CompositionScheme:
    """Strips glued along `base_cliques`, a partition of all end symbols."""

    strips: tuple[Strip, ...]
    base_cliques: tuple[tuple[EndSymbol, ...], ...]

    def __post_init__(self):
        if self.k < 3:
            raise PreconditionError(f"Compositions need at least 3 strips, got {self.k}.")
        symbols = [symbol for clique in self.base_cliques for symbol in clique]
        expected = {EndSymbol(side, i) for i in range(self.k) for side in "ab"}
        if len(symbols) != len(expected) or set(symbols) != expected:
            raise PreconditionError(
                "Base cliques must contain every end symbol exactly once."
            )

    @property
    def k(self) -> int:  # noqa: D102
        return len(self.strips)


class PlantedPair(t.NamedTuple):
    """A graph with a planted homogeneous pair of cliques `a`, `b`."""

    graph: SimpleGraph
    a: frozenset[int]
    b: frozenset[int]


def realize_interval(rep: IntervalRep) -> SimpleGraph:
    """Return the graph of `rep`: two vertices are adjacent iff an interval holds both positions."""
    edges = set()
    for interval in rep.intervals:
        inside = [
            vertex
            for vertex, position in enumerate(rep.positions)
            if rep.covers(interval, position)
        ]
        edges.update(itertools.combinations(inside, 2))
    return SimpleGraph.from_edges(rep.n, edges)


def f_of_delta(delta: int) -> int:
    """Edge count of the balanced five-cycle blow-up with maximum degree `delta`."""
    if delta < 2:
        raise PreconditionError(f"Delta must be at least 2, got {delta}.")
    return five_cycle_formula(delta)


def five_cycle_formula(value: int) -> int:
    """``5x²/4`` for even `value`, ``(5x²-2x+1)/4`` for odd; exact in both cases."""
    if value % 2 == 0:
        return 5 * value * value // 4
    return (5 * value * value - 2 * value + 1) // 4


def c5_bag_sizes(delta: int) -> tuple[int, ...]:
    """Stable-set sizes substituted around the five-cycle for `c5_blowup`."""
    if delta % 2 == 0:
        return (delta // 2,) * 5
    big, small = (delta + 1) // 2, (delta - 1) // 2
    return big, big, small, small, small


def c5_blowup(delta: int) -> Multigraph:
    """Return the simple five-cycle blow-up with maximum degree `delta`."""
    if delta < 2:
        raise PreconditionError(f"Delta must be at least 2, got {delta}.")
    return Multigraph.from_simple(
        substitute(SimpleGraph.cycle(5), c5_bag_sizes(delta), SubstitutionMode.STABLE)
    )


def complete_bipartite(a: int, b: int) -> Multigraph:
    """Return the simple complete bipartite graph with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise PreconditionError(f"Both sides need a vertex, got {a} and {b}.")
    return Multigraph.from_edges(
        a + b, ((u, a + v) for u in range(a) for v in range(b))
    )


def bag_offsets(sizes: collections.abc.Sequence[int]) -> list[int]:
    """Return the first vertex of every bag produced by `substitute`."""
    return list(itertools.accumulate(sizes, initial=0))[:-1]


def substitute(
    graph: SimpleGraph,
    sizes: collections.abc.Sequence[int],
    mode: SubstitutionMode,
) -> SimpleGraph:
    """
    Replace every vertex `v` by a bag of `sizes[v]` vertices.

    Bags are numbered consecutively in vertex order, two bags are fully joined iff their vertices were adjacent.
    """
    if len(sizes) != graph.n:
        raise PreconditionError(f"Got {len(sizes)} bag sizes for {graph.n} vertices.")
    if any(size < 1 for size in sizes):
        raise PreconditionError(f"Bag sizes must be positive, got {list(sizes)}.")
    offsets = bag_offsets(sizes)
    bags = [range(offset, offset + size) for offset, size in zip(offsets, sizes)]
    edges: list[tuple[int, int]] = []
    if mode is SubstitutionMode.CLIQUE:
        for bag in bags:
            edges.extend(itertools.combinations(bag, 2))
    for u, v in graph.edges():
        edges.extend(itertools.product(bags[u], bags[v]))
    return SimpleGraph.from_edges(sum(sizes), edges)


def _end_vertex(side: str, index: int) -> tuple:
    return ("end", side, index)


def _composition_graph(scheme: CompositionScheme) -> nx.Graph:
    """Run the iterated two-strip composition, interior vertices are labelled ``("s", strip, vertex)``."""
    composed = nx.Graph()
    for clique in scheme.base_cliques:
        labels = [_end_vertex(*symbol) for symbol in clique]
        composed.add_nodes_from(labels)
        composed.add_edges_from(itertools.combinations(labels, 2))

    for index, strip in enumerate(scheme.strips):
        a_end, b_end = _end_vertex("a", index), _end_vertex("b", index)
        outer_a = set(composed[a_end]) - {b_end}
        outer_b = set(composed[b_end]) - {a_end}
        label = lambda vertex: ("s", index, vertex)  # noqa: E731
        inner_a = [label(v) for v in strip.graph.adj[strip.a] if v != strip.b]
        inner_b = [label(v) for v in strip.graph.adj[strip.b] if v != strip.a]

        composed.remove_nodes_from((a_end, b_end))
        composed.add_nodes_from(label(v) for v in strip.interior)
        composed.add_edges_from(
            (label(u), label(v))
            for u, v in strip.graph.edges()
            if {u, v}.isdisjoint((strip.a, strip.b))
        )
        composed.add_edges_from(itertools.product(outer_a, inner_a))
        composed.add_edges_from(itertools.product(outer_b, inner_b))
        log.debug(
            f"Composed strip {index}: {len(outer_a)}x{len(inner_a)} and {len(outer_b)}x{len(inner_b)} joins."
        )
    return composed


def compose_strips(scheme: CompositionScheme) -> SimpleGraph:
    """Return the composition of `scheme`; vertices are ordered by strip, then by strip vertex."""
    return SimpleGraph.from_networkx(_composition_graph(scheme))[0]


def composition_labels(scheme: CompositionScheme) -> list[tuple[int, int]]:
    """Return ``(strip index, strip vertex)`` for every vertex of `compose_strips(scheme)`."""
    _, labels = SimpleGraph.from_networkx(_composition_graph(scheme))
    return [(strip, vertex) for _, strip, vertex in labels]


def case_label(strip: Strip) -> str:
    """
    Classify the interior of `strip` against its end neighbourhoods.

    ``"a"`` when some interior vertex sees neither end, ``"c"`` when every one sees both, ``"b"`` otherwise.
    """
    near_a, near_b = strip.graph.adj[strip.a], strip.graph.adj[strip.b]
    interior = strip.interior
    if any(v not in near_a and v not in near_b for v in interior):
        return "a"
    if all(v in near_a and v in near_b for v in interior):
        return "c"
    return "b"


def circular_power(n: int, reach: int) -> IntervalRep:
    """Return a circular rep of the cycle power where vertices within `reach` steps are adjacent."""
    if n < 3 or reach < 1:
        raise PreconditionError(f"Need n >= 3 and reach >= 1, got {n} and {reach}.")
    return IntervalRep(
        IntervalKind.CIRCULAR,
        tuple(range(n)),
        tuple((i, (i + reach) % n) for i in range(n)),
        period=n,
    )


def power_strip(n: int, reach: int) -> Strip:
    """Return the path power strip on `n` vertices, ends at the first and last vertex."""
    if n < 2 or reach < 1:
        raise PreconditionError(f"Need n >= 2 and reach >= 1, got {n} and {reach}.")
    reach = min(reach, n - 1)
    rep = IntervalRep(
        IntervalKind.LINEAR,
        tuple(range(n)),
        tuple((i, i + reach) for i in range(n - reach)),
    )
    return Strip.from_rep(rep, 0, n - 1)


def cyclic_scheme(strips: collections.abc.Sequence[Strip]) -> CompositionScheme:
    """Glue the b end of every strip to the a end of the next one, cyclically."""
    k = len(strips)
    return CompositionScheme(
        tuple(strips),
        tuple(
            (EndSymbol("b", i), EndSymbol("a", (i + 1) % k)) for i in range(k)
        ),
    )


def planted_homogeneous_pair(size_a: int, size_b: int) -> PlantedPair:
    """
    Build a claw-free graph with a homogeneous pair of cliques that is not a single homogeneous set.

    The first vertex of A sees all of B, the rest of A sees none of it; one extra vertex is complete to A,
    another is complete to B, and the two extras are adjacent.
    """
    if size_a < 2 or size_b < 1:
        raise PreconditionError(f"Need |A| >= 2 and |B| >= 1, got {size_a} and {size_b}.")
    a = range(size_a)
    b = range(size_a, size_a + size_b)
    to_a, to_b = size_a + size_b, size_a + size_b + 1
    edges = [
        *itertools.combinations(a, 2),
        *itertools.combinations(b, 2),
        *((0, v) for v in b),
        *((u, to_a) for u in a),
        *((v, to_b) for v in b),
        (to_a, to_b),
    ]
    return PlantedPair(
        SimpleGraph.from_edges(size_a + size_b + 2, edges), frozenset(a), frozenset(b)
    )


def random_multigraph(n: int, delta: int, max_mult: int, seed: int) -> Multigraph:
    """
    Return a random loopless multigraph with maximum degree at most `delta`.

    Pairs are visited in a random order, each receiving a random multiplicity up to `max_mult`
    clipped to the remaining degree of both ends.
    """
    if n < 2 or delta < 1 or max_mult < 1:
        raise PreconditionError(
            f"Infeasible parameters n={n}, delta={delta}, max_mult={max_mult}."
        )
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    degrees = [0] * n
    mult = {}
    for pair_index in rng.permutation(len(pairs)):
        u, v = pairs[pair_index]
        wanted = int(rng.integers(0, max_mult + 1))
        count = min(wanted, delta - degrees[u], delta - degrees[v])
        if count > 0:
            mult[(u, v)] = count
            degrees[u] += count
            degrees[v] += count
    return Multigraph(n, dict(sorted(mult.items())))


def random_regular_multigraph(n: int, delta: int, seed: int) -> Multigraph:
    """
    Return a random `delta`-regular loopless multigraph.

    For even `n` this is the union of `delta` random perfect matchings,
    for odd `n` and even `delta` the union of ``delta / 2`` random Hamiltonian cycles.
    """
    if n < 2 or delta < 1:
        raise PreconditionError(f"Infeasible parameters n={n}, delta={delta}.")
    rng = np.random.default_rng(seed)
    edges = []
    if n % 2 == 0:
        for _ in range(delta):
            order = rng.permutation(n)
            edges.extend(zip(order[::2].tolist(), order[1::2].tolist()))
    elif delta % 2 == 0 and n >= 3:
        for _ in range(delta // 2):
            order = rng.permutation(n).tolist()
            edges.extend(zip(order, order[1:] + order[:1]))
    else:
        raise PreconditionError(f"No {delta}-regular multigraph on {n} vertices.")
    return Multigraph.from_edges(n, edges)


def random_interval_rep(
    kind: IntervalKind, n: int, interval_count: int, span: int, seed: int
) -> IntervalRep:
    """Return a random rep with `n` points on ``0..span-1`` and `interval_count` random intervals."""
    if n < 1 or span < 1 or interval_count < 0:
        raise PreconditionError(
            f"Infeasible parameters n={n}, intervals={interval_count}, span={span}."
        )
    rng = np.random.default_rng(seed)
    positions = tuple(rng.integers(0, span, size=n).tolist())
    ends = rng.integers(0, span, size=(interval_count, 2)).tolist()
    if kind is IntervalKind.CIRCULAR:
        return IntervalRep(kind, positions, tuple(map(tuple, ends)), period=span)
    return IntervalRep(
        kind, positions, tuple((min(pair), max(pair)) for pair in ends)
    )


def random_strip(interior: int, interval_count: int, span: int, seed: int) -> Strip:
    """
    Return a random linear interval strip.

    The end `a` sits alone at 0 and `b` alone at ``span + 1``, interior vertices in between.
    """
    rng = np.random.default_rng(seed)
    positions = (0, span + 1, *rng.integers(1, span + 1, size=interior).tolist())
    ends = rng.integers(0, span + 2, size=(interval_count, 2)).tolist()
    rep = IntervalRep(
        IntervalKind.LINEAR,
        positions,
        tuple((min(pair), max(pair)) for pair in ends),
    )
    return Strip.from_rep(rep, 0, 1)


def random_scheme(
    k: int, interior: int, interval_count: int, span: int, seed: int
) -> CompositionScheme:
    """Return `k` random strips glued along a random partition of their end symbols."""
    rng = np.random.default_rng(seed)
    strips = tuple(
        random_strip(interior, interval_count, span, int(strip_seed))
        for strip_seed in rng.integers(0, 2**62, size=k)
    )
    symbols = [EndSymbol(side, i) for i in range(k) for side in "ab"]
    order = rng.permutation(len(symbols)).tolist()
    cliques = []
    position = 0
    while position < len(order):
        size = int(rng.integers(1, 4))
        cliques.append(tuple(symbols[i] for i in order[position : position + size]))
        position += size
    return CompositionScheme(strips, tuple(cliques))


def named_instance(name: str) -> SimpleGraph:
    """Return one of the fixed structural test instances."""
    match name:
        case "wheel5":
            return SimpleGraph.from_edges(
                6,
                [*((0, i) for i in range(1, 6)), *((i, i % 5 + 1) for i in range(1, 6))],
            )
        case "icosahedron":
            return SimpleGraph.from_networkx(nx.icosahedral_graph())[0]
        case "petersen_line":
            petersen = SimpleGraph.from_networkx(nx.petersen_graph())[0]
            return line_graph(Multigraph.from_simple(petersen)).graph
        case "c5":
            return SimpleGraph.cycle(5)
        case "paw":
            return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
        case "diamond":
            return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    raise PreconditionError(f"Unknown instance {name!r}.")
