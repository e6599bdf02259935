# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import collections
import dataclasses
import itertools
import logging
import typing as t

import more_itertools

from claw_square.errors import BudgetExceededError
from claw_square.graph import (
    Multigraph,
    SimpleGraph,
    Verdict,
    induced,
    iter_bits,
    line_graph,
)

if t.TYPE_CHECKING:
    import collections.abc

log = logging.getLogger(__name__)

MAX_HOMOGENEOUS_PAIR_VERTICES = 24


class Claw(t.NamedTuple):
    """An induced claw, `leaves` are pairwise non-adjacent neighbours of `center`."""

    center: int
    leaves: tuple[int, int, int]


class CliqueCover(t.NamedTuple):
    """A partition of a vertex set into two cliques, `second` may be empty."""

    first: frozenset[int]
    second: frozenset[int]


@dataclasses.dataclass(frozen=True)
class KrauszCertificate:
    """
    Certificate that a graph is the line graph of `root`.

    Root vertex ``i`` stands for ``cliques[i]``; graph vertex ``v`` is the root edge joining its two cliques,
    and `vertex_map[v]` is its vertex in ``line_graph(root)``.
    """

    cliques: tuple[frozenset[int], ...]
    root: Multigraph
    vertex_map: tuple[int, ...]

    @classmethod
    def from_cliques(
        cls, n: int, cliques: collections.abc.Sequence[frozenset[int]]
    ) -> KrauszCertificate:
        """Build the root and the vertex correspondence from a clique list where every vertex is in two cliques."""
        memberships: list[list[int]] = [[] for _ in range(n)]
        for index, clique in enumerate(cliques):
            for vertex in clique:
                memberships[vertex].append(index)
        pairs = [tuple(sorted(indices)) for indices in memberships]
        root = Multigraph.from_edges(len(cliques), pairs)

        copies: collections.Counter[tuple[int, ...]] = collections.Counter()
        label_index = {label: i for i, label in enumerate(root.edge_instances())}
        vertex_map = []
        for pair in pairs:
            vertex_map.append(label_index[(*pair, copies[pair])])
            copies[pair] += 1
        return cls(tuple(cliques), root, tuple(vertex_map))

    def verify(self, graph: SimpleGraph) -> bool:
        """Check every certificate invariant against `graph`, including the exact label round-trip."""
        memberships = collections.Counter(
            vertex for clique in self.cliques for vertex in clique
        )
        if any(memberships[v] != 2 for v in graph.vertices()):
            return False
        if not all(graph.is_clique(clique) for clique in self.cliques):
            return False
        if not all(
            any(u in clique and v in clique for clique in self.cliques)
            for u, v in graph.edges()
        ):
            return False

        line = line_graph(self.root).graph
        if line.n != graph.n or sorted(self.vertex_map) != list(range(graph.n)):
            return False
        return all(
            graph.has_edge(u, v)
            == line.has_edge(self.vertex_map[u], self.vertex_map[v])
            for u, v in itertools.combinations(graph.vertices(), 2)
        )


@dataclasses.dataclass(frozen=True)
class HomogeneousPair:
    """
    A homogeneous pair of cliques.

    `witnesses` holds ``(a1, a2, b)`` with ``a1 b`` an edge and ``a2 b`` a non-edge, when such vertices exist.
    """

    a: frozenset[int]
    b: frozenset[int]
    witnesses: tuple[int, int, int] | None = None


def find_claw(graph: SimpleGraph) -> Claw | None:
    """Return the first induced claw in vertex order, or None for claw-free graphs."""
    masks = graph.masks
    for center in graph.vertices():
        neighbours = masks[center]
        for x in iter_bits(neighbours):
            beyond_x = neighbours & ~masks[x] & ~((2 << x) - 1)
            for y in iter_bits(beyond_x):
                beyond_y = beyond_x & ~masks[y] & ~((2 << y) - 1)
                if beyond_y:
                    z = more_itertools.first(iter_bits(beyond_y))
                    return Claw(center, (x, y, z))
    return None


def find_stable_triple(graph: SimpleGraph) -> tuple[int, int, int] | None:
    """Return the first three pairwise non-adjacent vertices in lexicographic order."""
    masks = graph.masks
    full = (1 << graph.n) - 1
    for x in graph.vertices():
        beyond_x = full & ~masks[x] & ~((2 << x) - 1)
        for y in iter_bits(beyond_x):
            beyond_y = beyond_x & ~masks[y] & ~((2 << y) - 1)
            if beyond_y:
                return x, y, more_itertools.first(iter_bits(beyond_y))
    return None


def _two_color_complement(
    graph: SimpleGraph, vertices: collections.abc.Collection[int]
) -> list[list[tuple[int, int]]] | None:
    """
    Properly two-colour the complement of ``graph[vertices]``.

    Returns the complement components as ``(vertex, side)`` lists with the smallest vertex on side 0,
    or None if some component has an odd cycle.
    """
    remaining = set(vertices)
    components = []
    for start in sorted(vertices):
        if start not in remaining:
            continue
        remaining.discard(start)
        side = {start: 0}
        queue = collections.deque([start])
        while queue:
            vertex = queue.popleft()
            for other in sorted(vertices):
                if other == vertex or other in graph.adj[vertex]:
                    continue
                if other in side:
                    if side[other] == side[vertex]:
                        return None
                else:
                    side[other] = 1 - side[vertex]
                    remaining.discard(other)
                    queue.append(other)
        components.append(sorted(side.items()))
    return components


def clique_cover_of(
    graph: SimpleGraph, vertices: collections.abc.Collection[int]
) -> CliqueCover | None:
    """Partition `vertices` into two cliques of `graph`, or return None if impossible."""
    components = _two_color_complement(graph, vertices)
    if components is None:
        return None
    sides: tuple[set[int], set[int]] = (set(), set())
    for component in components:
        for vertex, side in component:
            sides[side].add(vertex)
    return CliqueCover(frozenset(sides[0]), frozenset(sides[1]))


def two_clique_cover(graph: SimpleGraph) -> CliqueCover | None:
    """Partition all vertices of `graph` into two cliques, possible iff its complement is bipartite."""
    return clique_cover_of(graph, range(graph.n))


def is_quasi_line(graph: SimpleGraph) -> Verdict:
    """Check that every neighbourhood splits into two cliques; the witness is the first failing vertex."""
    for vertex in graph.vertices():
        if clique_cover_of(graph, graph.adj[vertex]) is None:
            return Verdict(False, vertex)
    return Verdict(True)


# region Krausz search
class _KrauszState:
    """Mutable search state over a twin-free graph, copied on branching."""

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        self.count = [0] * graph.n
        self.uncovered = [set(neighbours) for neighbours in graph.adj]
        self.cliques: list[frozenset[int]] = []

    def copy(self) -> _KrauszState:
        state = _KrauszState.__new__(_KrauszState)
        state.graph = self.graph
        state.count = self.count.copy()
        state.uncovered = [vertex_set.copy() for vertex_set in self.uncovered]
        state.cliques = self.cliques.copy()
        return state

    def add(self, clique: frozenset[int]) -> bool:
        """Add `clique`, returning False when a membership or coverage constraint breaks."""
        for vertex in clique:
            self.count[vertex] += 1
            if self.count[vertex] > 2:
                return False
            self.uncovered[vertex] -= clique
        self.cliques.append(clique)
        for vertex in clique:
            left = self.uncovered[vertex]
            if left and (self.count[vertex] == 2 or not self.graph.is_clique(left)):
                return False
        return True


def _krausz_search(state: _KrauszState) -> _KrauszState | None:
    graph = state.graph
    forced = more_itertools.first(
        (
            v
            for v in graph.vertices()
            if state.count[v] == 1 and state.uncovered[v]
        ),
        None,
    )
    if forced is not None:
        # Twin-free, so the second clique is exactly the vertex with its uncovered neighbours.
        clique = frozenset(state.uncovered[forced]) | {forced}
        if not state.add(clique):
            return None
        return _krausz_search(state)

    free = more_itertools.first(
        (v for v in graph.vertices() if state.count[v] == 0 and state.uncovered[v]),
        None,
    )
    if free is None:
        return state

    neighbourhood = sorted(graph.adj[free])
    components = _two_color_complement(graph, neighbourhood)
    if components is None:
        return None
    # The component of the smallest neighbour keeps its orientation, the others are tried both ways.
    for flips in itertools.product((0, 1), repeat=len(components) - 1):
        first: set[int] = set()
        second: set[int] = set()
        for component, flip in zip(components, (0, *flips)):
            for vertex, side in component:
                (first if side ^ flip == 0 else second).add(vertex)
        branch = state.copy()
        if not branch.add(frozenset(first | {free})):
            continue
        if second and not branch.add(frozenset(second | {free})):
            continue
        result = _krausz_search(branch)
        if result is not None:
            return result
    return None


def _split_twin_cliques(cliques: list[frozenset[int]]) -> list[frozenset[int]]:
    """
    Trade parallel root edges coming from twins for simple ones where a local exchange allows it.

    Two cliques sharing the twins `shared` give parallel root edges. When one of them holds nothing else
    it is replaced by singletons, when it holds one more vertex `w` whose other clique is a singleton,
    the pair is traded for the triangle ``{u, w}``, ``{v, w}``.
    """
    cliques = list(cliques)
    while True:
        for i, j in itertools.combinations(range(len(cliques)), 2):
            shared = cliques[i] & cliques[j]
            if len(shared) < 2:
                continue
            replacement = _exchange(cliques, i, j, shared) or _exchange(cliques, j, i, shared)
            if replacement is not None:
                dropped, added = replacement
                cliques = [clique for k, clique in enumerate(cliques) if k not in dropped] + added
                break
        else:
            return cliques


def _exchange(
    cliques: list[frozenset[int]], keep: int, other: int, shared: frozenset[int]
) -> tuple[set[int], list[frozenset[int]]] | None:
    rest = cliques[other] - shared
    if not rest:
        return {other}, [frozenset({vertex}) for vertex in sorted(shared)]
    if len(shared) != 2 or len(rest) != 1:
        return None
    (w,) = rest
    singleton = more_itertools.first(
        (k for k, clique in enumerate(cliques) if clique == {w} and k != other), None
    )
    if singleton is None:
        return None
    u, v = sorted(shared)
    return {other, singleton}, [frozenset({u, w}), frozenset({v, w})]


def _twin_classes(graph: SimpleGraph) -> list[list[int]]:
    """Group vertices with equal closed neighbourhoods, classes ordered by their smallest vertex."""
    classes: dict[frozenset[int], list[int]] = {}
    for vertex in graph.vertices():
        classes.setdefault(graph.adj[vertex] | {vertex}, []).append(vertex)
    return sorted(classes.values())


def krausz_partition(graph: SimpleGraph) -> KrauszCertificate | None:
    """
    Return a certificate that `graph` is the line graph of a loopless multigraph, or None.

    True twins are collapsed first, a graph is such a line graph iff its twin quotient is,
    twins then join the two cliques of their class representative.
    Parallel root edges left by twins are exchanged for simple ones where a local exchange allows it,
    so the diamond gets the paw as its root; other twin classes keep their parallel edges.
    Vertices short of two cliques receive singleton cliques, in vertex order.
    """
    classes = _twin_classes(graph)
    representatives = [members[0] for members in classes]
    quotient = induced(graph, representatives)
    state = _krausz_search(_KrauszState(quotient.graph))
    if state is None:
        log.debug(f"Krausz search rejected graph with {graph.n} vertices.")
        return None

    cliques = list(state.cliques)
    for vertex in quotient.graph.vertices():
        cliques.extend(frozenset({vertex}) for _ in range(2 - state.count[vertex]))

    expanded = [
        frozenset(
            member for vertex in clique for member in classes[vertex]
        )
        for clique in cliques
    ]
    expanded = _split_twin_cliques(expanded)
    certificate = KrauszCertificate.from_cliques(graph.n, expanded)
    log.debug(
        f"Krausz search found {len(expanded)} cliques for {graph.n} vertices"
        f" ({graph.n - len(classes)} twins collapsed)."
    )
    return certificate


# endregion


def is_homogeneous_pair(
    graph: SimpleGraph, a: collections.abc.Set[int], b: collections.abc.Set[int]
) -> bool:
    """Check the homogeneous pair of cliques conditions for `a` and `b`."""
    if a & b or (len(a) < 2 and len(b) < 2) or not a or not b:
        return False
    if not (graph.is_clique(a) and graph.is_clique(b)):
        return False
    for vertex in graph.vertices():
        if vertex in a or vertex in b:
            continue
        for part in (a, b):
            seen = len(graph.adj[vertex] & part)
            if 0 < seen < len(part):
                return False
    return True


def _refinement_witnesses(
    graph: SimpleGraph, a: frozenset[int], b: frozenset[int]
) -> tuple[int, int, int] | None:
    for b_vertex in sorted(b):
        seen = sorted(a & graph.adj[b_vertex])
        unseen = sorted(a - graph.adj[b_vertex])
        if seen and unseen:
            return seen[0], unseen[0], b_vertex
    return None


def _grow_pair(
    graph: SimpleGraph,
    a: frozenset[int],
    b: frozenset[int],
    visited: set[tuple[frozenset[int], frozenset[int]]],
) -> tuple[frozenset[int], frozenset[int]] | None:
    if (a, b) in visited:
        return None
    visited.add((a, b))
    mixed = more_itertools.first(
        (
            vertex
            for vertex in graph.vertices()
            if vertex not in a
            and vertex not in b
            and any(0 < len(graph.adj[vertex] & part) < len(part) for part in (a, b))
        ),
        None,
    )
    if mixed is None:
        return a, b
    for grown_a, grown_b in ((a | {mixed}, b), (a, b | {mixed})):
        if graph.is_clique(grown_a) and graph.is_clique(grown_b):
            result = _grow_pair(graph, grown_a, grown_b, visited)
            if result is not None:
                return result
    return None


def find_homogeneous_pair(
    graph: SimpleGraph,
    require_refinement: bool = False,
    *,
    max_vertices: int = MAX_HOMOGENEOUS_PAIR_VERTICES,
) -> HomogeneousPair | None:
    """
    Search for a homogeneous pair of cliques ``(A, B)`` with ``|A| >= 2``.

    Seeds ``A = {a1, a2}``, ``B = {b}`` are grown by adding every vertex that is mixed on A or B to one of them.
    With `require_refinement`, only seeds where `b` sees `a1` but not `a2` are used.
    """
    if graph.n > max_vertices:
        raise BudgetExceededError(
            f"Homogeneous pair search is limited to {max_vertices} vertices, got {graph.n}."
        )
    visited: set[tuple[frozenset[int], frozenset[int]]] = set()
    for a1, a2 in itertools.permutations(graph.vertices(), 2):
        if a2 not in graph.adj[a1]:
            continue
        if not require_refinement and a1 > a2:
            continue
        for b in graph.vertices():
            if b in (a1, a2):
                continue
            if require_refinement and not (
                b in graph.adj[a1] and b not in graph.adj[a2]
            ):
                continue
            grown = _grow_pair(graph, frozenset((a1, a2)), frozenset((b,)), visited)
            if grown is not None:
                a, b_part = grown
                return HomogeneousPair(a, b_part, _refinement_witnesses(graph, a, b_part))
    return None
