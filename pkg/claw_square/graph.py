# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import collections
import dataclasses
import functools
import itertools
import typing as t

import more_itertools
import networkx as nx

from claw_square.errors import PreconditionError

if t.TYPE_CHECKING:
    import collections.abc

    import typing_extensions as te

Edge = tuple[int, int]


def _pair(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclasses.dataclass(frozen=True)
class SimpleGraph:
    """Undirected loopless simple graph on the vertices ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise PreconditionError(
                f"Adjacency has {len(self.adj)} entries for {self.n} vertices."
            )
        for vertex, neighbours in enumerate(self.adj):
            if vertex in neighbours:
                raise PreconditionError(f"Vertex {vertex} is adjacent to itself.")
            for neighbour in neighbours:
                if not 0 <= neighbour < self.n or vertex not in self.adj[neighbour]:
                    raise PreconditionError(
                        f"Adjacency is not symmetric at {vertex}-{neighbour}."
                    )

    @classmethod
    def from_edges(
        cls, n: int, edges: collections.abc.Iterable[tuple[int, int]]
    ) -> te.Self:
        """Create a graph on `n` vertices from `edges`, repeated edges are merged."""
        neighbours: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"Edge {u}-{v} out of range for {n} vertices.")
            if u == v:
                raise PreconditionError(f"Loop at vertex {u}.")
            neighbours[u].add(v)
            neighbours[v].add(u)
        return cls(n, tuple(frozenset(vertex_set) for vertex_set in neighbours))

    @classmethod
    def from_masks(cls, masks: collections.abc.Sequence[int]) -> te.Self:
        """Create a graph from per-vertex adjacency bitmasks."""
        return cls(
            len(masks),
            tuple(frozenset(iter_bits(mask)) for mask in masks),
        )

    @classmethod
    def complete(cls, n: int) -> te.Self:  # noqa: D102
        return cls.from_edges(n, itertools.combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> te.Self:  # noqa: D102
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> te.Self:  # noqa: D102
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @functools.cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency of every vertex as an integer bitmask."""
        return tuple(
            functools.reduce(lambda mask, v: mask | 1 << v, neighbours, 0)
            for neighbours in self.adj
        )

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(neighbours) for neighbours in self.adj) // 2

    def vertices(self) -> range:  # noqa: D102
        return range(self.n)

    def edges(self) -> collections.abc.Iterator[Edge]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v

    def check_vertex(self, v: int) -> None:
        """Raise a `PreconditionError` if `v` is not a vertex."""
        if not 0 <= v < self.n:
            raise PreconditionError(f"Vertex {v} out of range for {self.n} vertices.")

    def degree(self, v: int) -> int:  # noqa: D102
        self.check_vertex(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:  # noqa: D102
        self.check_vertex(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:  # noqa: D102
        return v in self.adj[u]

    @property
    def max_degree(self) -> int:  # noqa: D102
        return max((len(neighbours) for neighbours in self.adj), default=0)

    def is_clique(self, vertices: collections.abc.Iterable[int]) -> bool:
        """Return True if `vertices` are pairwise adjacent."""
        vertices = list(vertices)
        return all(
            v in self.adj[u] for u, v in itertools.combinations(vertices, 2)
        )

    def is_stable(self, vertices: collections.abc.Iterable[int]) -> bool:
        """Return True if `vertices` are pairwise non-adjacent."""
        vertices = list(vertices)
        return not any(
            v in self.adj[u] for u, v in itertools.combinations(vertices, 2)
        )

    def is_complete(self) -> bool:  # noqa: D102
        return self.m == self.n * (self.n - 1) // 2

    def complement(self) -> SimpleGraph:  # noqa: D102
        full = (1 << self.n) - 1
        return SimpleGraph.from_masks(
            [full & ~mask & ~(1 << v) for v, mask in enumerate(self.masks)]
        )

    def components(self) -> list[list[int]]:
        """Return the connected components as sorted vertex lists, ordered by their smallest vertex."""
        seen = [False] * self.n
        components = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            component = [start]
            queue = collections.deque([start])
            while queue:
                vertex = queue.popleft()
                for neighbour in self.adj[vertex]:
                    if not seen[neighbour]:
                        seen[neighbour] = True
                        component.append(neighbour)
                        queue.append(neighbour)
            components.append(sorted(component))
        return components

    def is_connected(self) -> bool:  # noqa: D102
        return len(self.components()) <= 1

    def to_networkx(self) -> nx.Graph:  # noqa: D102
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> tuple[te.Self, list[t.Hashable]]:
        """
        Convert a networkx graph with arbitrary node labels.

        Nodes are numbered in sorted label order; the labels are returned alongside.
        """
        labels = sorted(graph.nodes)
        index = {label: i for i, label in enumerate(labels)}
        return (
            cls.from_edges(
                len(labels), ((index[u], index[v]) for u, v in graph.edges)
            ),
            labels,
        )


@dataclasses.dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph; `mult` maps each vertex pair ``(u, v)``, ``u < v`` to its multiplicity."""

    n: int
    mult: collections.abc.Mapping[Edge, int]

    def __post_init__(self):
        for (u, v), multiplicity in self.mult.items():
            if u == v:
                raise PreconditionError(f"Loop at vertex {u}.")
            if not (0 <= u < v < self.n):
                raise PreconditionError(f"Pair {u}-{v} is not ordered or out of range.")
            if multiplicity < 1:
                raise PreconditionError(f"Pair {u}-{v} has multiplicity {multiplicity}.")

    @classmethod
    def from_edges(
        cls, n: int, edges: collections.abc.Iterable[tuple[int, int]]
    ) -> te.Self:
        """Create a multigraph where each repeated pair in `edges` adds one to its multiplicity."""
        counter = collections.Counter(_pair(u, v) for u, v in edges)
        return cls(n, dict(sorted(counter.items())))

    @classmethod
    def from_simple(cls, graph: SimpleGraph) -> te.Self:  # noqa: D102
        return cls.from_edges(graph.n, graph.edges())

    def pairs(self) -> list[Edge]:
        """Return the vertex pairs with at least one edge, sorted."""
        return sorted(self.mult)

    def multiplicity(self, u: int, v: int) -> int:  # noqa: D102
        return self.mult.get(_pair(u, v), 0)

    @functools.cached_property
    def _degrees(self) -> tuple[int, ...]:
        degrees = [0] * self.n
        for (u, v), multiplicity in self.mult.items():
            degrees[u] += multiplicity
            degrees[v] += multiplicity
        return tuple(degrees)

    @functools.cached_property
    def _neighbours(self) -> tuple[frozenset[int], ...]:
        neighbours: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.mult:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(vertex_set) for vertex_set in neighbours)

    def degree(self, v: int) -> int:
        """Degree of `v`, counting parallel edges."""
        if not 0 <= v < self.n:
            raise PreconditionError(f"Vertex {v} out of range for {self.n} vertices.")
        return self._degrees[v]

    def neighbors(self, v: int) -> frozenset[int]:
        """Distinct vertices joined to `v` by at least one edge."""
        return self._neighbours[v]

    @property
    def max_degree(self) -> int:  # noqa: D102
        return max(self._degrees, default=0)

    @property
    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self.mult.values())

    def is_regular(self, degree: int | None = None) -> bool:
        """Return True if every vertex has degree `degree`, or the same degree when None."""
        if degree is None:
            return len(set(self._degrees)) <= 1
        return all(vertex_degree == degree for vertex_degree in self._degrees)

    def is_simple(self) -> bool:  # noqa: D102
        return all(multiplicity == 1 for multiplicity in self.mult.values())

    def edge_instances(self) -> list[tuple[int, int, int]]:
        """Return every edge as ``(u, v, copy)``, sorted by pair then copy number."""
        return [
            (u, v, copy)
            for (u, v) in self.pairs()
            for copy in range(self.mult[(u, v)])
        ]

    def edges_between(
        self, vertex: int, others: collections.abc.Container[int]
    ) -> int:
        """Number of edges, with multiplicity, from `vertex` into `others`."""
        return sum(
            self.multiplicity(vertex, other)
            for other in self._neighbours[vertex]
            if other in others
        )


@dataclasses.dataclass(frozen=True)
class Coloring:
    """A total vertex colouring; `color[v]` is the colour of vertex `v`."""

    color: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        for vertex, colour in enumerate(self.color):
            if not 0 <= colour < self.palette_size:
                raise PreconditionError(
                    f"Vertex {vertex} has colour {colour} outside palette of {self.palette_size}."
                )

    @property
    def colors_used(self) -> int:  # noqa: D102
        return len(set(self.color))


class LineGraph(t.NamedTuple):
    """A line graph with the ``(u, v, copy)`` edge instance behind every vertex."""

    graph: SimpleGraph
    labels: tuple[tuple[int, int, int], ...]


class Subgraph(t.NamedTuple):
    """An induced subgraph; `vertices[i]` is the original vertex of new vertex ``i``."""

    graph: SimpleGraph
    vertices: tuple[int, ...]


def iter_bits(mask: int) -> collections.abc.Iterator[int]:
    """Yield the indices of the set bits of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def square(graph: SimpleGraph) -> SimpleGraph:
    """Return G², adjacency is distance one or two in `graph`."""
    masks = graph.masks
    square_masks = []
    for vertex, mask in enumerate(masks):
        reach = mask
        for neighbour in iter_bits(mask):
            reach |= masks[neighbour]
        square_masks.append(reach & ~(1 << vertex))
    return SimpleGraph.from_masks(square_masks)


def _square_mask(graph: SimpleGraph, v: int) -> int:
    graph.check_vertex(v)
    masks = graph.masks
    reach = masks[v]
    for neighbour in iter_bits(masks[v]):
        reach |= masks[neighbour]
    return reach & ~(1 << v)


def second_neighborhood(graph: SimpleGraph, v: int) -> frozenset[int]:
    """Return the vertices at distance exactly two from `v`."""
    return frozenset(iter_bits(_square_mask(graph, v) & ~graph.masks[v]))


def square_degree(graph: SimpleGraph, v: int) -> int:
    """Return the degree of `v` in the square of `graph`."""
    return _square_mask(graph, v).bit_count()


def line_graph(multigraph: Multigraph) -> LineGraph:
    """
    Return the line graph of `multigraph`.

    Every edge instance becomes one vertex, numbered in `Multigraph.edge_instances` order.
    """
    labels = tuple(multigraph.edge_instances())
    incident: collections.defaultdict[int, list[int]] = collections.defaultdict(list)
    for index, (u, v, _) in enumerate(labels):
        incident[u].append(index)
        incident[v].append(index)
    edges = (
        pair
        for vertex_edges in incident.values()
        for pair in itertools.combinations(vertex_edges, 2)
    )
    return LineGraph(SimpleGraph.from_edges(len(labels), edges), labels)


def induced(graph: SimpleGraph, vertices: collections.abc.Iterable[int]) -> Subgraph:
    """Return the subgraph induced by `vertices`, renumbered in increasing vertex order."""
    kept = tuple(sorted(set(vertices)))
    for vertex in kept:
        graph.check_vertex(vertex)
    index = {vertex: i for i, vertex in enumerate(kept)}
    return Subgraph(
        SimpleGraph(
            len(kept),
            tuple(
                frozenset(index[u] for u in graph.adj[vertex] if u in index)
                for vertex in kept
            ),
        ),
        kept,
    )


def delete_vertex(graph: SimpleGraph, v: int) -> Subgraph:
    """Return ``G \\ v`` with the map back to the original vertices."""
    graph.check_vertex(v)
    return induced(graph, (u for u in graph.vertices() if u != v))


def underlying_simple(multigraph: Multigraph) -> SimpleGraph:
    """Return the simple graph with an edge for every pair of positive multiplicity."""
    return SimpleGraph.from_edges(multigraph.n, multigraph.mult)


def clique_in_square_without(
    graph: SimpleGraph, vertices: collections.abc.Iterable[int], removed: int
) -> bool:
    """
    Return True if `vertices` are pairwise within distance two in ``graph \\ removed``.

    Computed directly on `graph`: two vertices qualify when adjacent or sharing a neighbour other than `removed`.
    """
    masks = graph.masks
    keep = ~(1 << removed)
    return all(
        v in graph.adj[u] or masks[u] & masks[v] & keep
        for u, v in itertools.combinations(sorted(vertices), 2)
    )


def lowest_free_color(used: collections.abc.Container[int]) -> int:
    """Return the smallest nonnegative colour not in `used`."""
    return more_itertools.first(
        colour for colour in itertools.count() if colour not in used
    )


@dataclasses.dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate, `witness` explains a negative answer."""

    ok: bool
    witness: t.Any = None

    def __bool__(self):
        return self.ok
