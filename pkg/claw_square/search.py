# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import logging
import typing as t

from claw_square.constants import DEFAULT_MAX_EXACT_VERTICES, DEFAULT_MAX_SEARCH_NODES
from claw_square.errors import BudgetExceededError
from claw_square.graph import Coloring, SimpleGraph, iter_bits, lowest_free_color

if t.TYPE_CHECKING:
    import collections.abc

log = logging.getLogger(__name__)


class SolverBudget(t.NamedTuple):
    """Limits of the exact colouring search."""

    max_vertices: int = DEFAULT_MAX_EXACT_VERTICES
    max_nodes: int = DEFAULT_MAX_SEARCH_NODES


class CliqueResult(t.NamedTuple):
    """Clique number with one maximum clique."""

    size: int
    clique: tuple[int, ...]


class ChromaticResult(t.NamedTuple):
    """Chromatic number with an optimal colouring."""

    chi: int
    coloring: Coloring
    nodes: int


def _color_classes(masks: tuple[int, ...], candidates: int) -> list[tuple[int, int]]:
    """Greedily split `candidates` into stable sets; return ``(vertex, class number)`` in class order."""
    ordered = []
    colour = 0
    uncoloured = candidates
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            vertex = low.bit_length() - 1
            available &= ~masks[vertex] & ~low
            uncoloured &= ~low
            ordered.append((vertex, colour))
    return ordered


def clique_number(graph: SimpleGraph) -> CliqueResult:
    """
    Return the clique number of `graph` and a witness clique.

    Branch and bound over candidate bitmasks, greedy colour classes bound the clique still reachable.
    """
    masks = graph.masks
    best: list[int] = []

    def expand(current: list[int], candidates: int) -> None:
        nonlocal best
        for vertex, bound in reversed(_color_classes(masks, candidates)):
            if len(current) + bound <= len(best):
                return
            current.append(vertex)
            remaining = candidates & masks[vertex]
            if remaining:
                expand(current, remaining)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            candidates &= ~(1 << vertex)

    expand([], (1 << graph.n) - 1)
    return CliqueResult(len(best), tuple(sorted(best)))


def smallest_last_order(graph: SimpleGraph) -> list[int]:
    """Return vertices in removal order, repeatedly taking a minimum degree vertex of what is left."""
    remaining = (1 << graph.n) - 1
    masks = graph.masks
    order = []
    while remaining:
        vertex = min(
            iter_bits(remaining), key=lambda v: ((masks[v] & remaining).bit_count(), v)
        )
        order.append(vertex)
        remaining &= ~(1 << vertex)
    return order


def greedy_color(
    graph: SimpleGraph, order: collections.abc.Iterable[int]
) -> list[int]:
    """Give every vertex of `order` the lowest colour unused by its already coloured neighbours."""
    colours: list[int | None] = [None] * graph.n
    for vertex in order:
        colours[vertex] = lowest_free_color(
            {colours[u] for u in graph.adj[vertex] if colours[u] is not None}
        )
    return t.cast(list[int], colours)


def dsatur_color(graph: SimpleGraph) -> list[int]:
    """Colour greedily, always picking the vertex with the most distinct neighbour colours."""
    colours: list[int | None] = [None] * graph.n
    neighbour_colours: list[set[int]] = [set() for _ in range(graph.n)]
    for _ in range(graph.n):
        vertex = max(
            (v for v in graph.vertices() if colours[v] is None),
            key=lambda v: (len(neighbour_colours[v]), len(graph.adj[v]), -v),
        )
        colour = lowest_free_color(neighbour_colours[vertex])
        colours[vertex] = colour
        for neighbour in graph.adj[vertex]:
            neighbour_colours[neighbour].add(colour)
    return t.cast(list[int], colours)


def chromatic_exact(
    graph: SimpleGraph,
    upper_bound_hint: collections.abc.Sequence[int] | None = None,
    *,
    budget: SolverBudget = SolverBudget(),
) -> ChromaticResult:
    """
    Return the chromatic number of `graph` with an optimal colouring.

    A maximum clique is coloured first and bounds from below, DSATUR greedy (or the proper colouring
    `upper_bound_hint`) bounds from above; the search branches on the most saturated vertex.
    Raise `BudgetExceededError` when the graph or the search tree exceeds `budget`.
    """
    n = graph.n
    if n == 0:
        return ChromaticResult(0, Coloring((), 0), 0)
    if graph.is_complete():
        return ChromaticResult(n, Coloring(tuple(range(n)), n), 0)
    if n > budget.max_vertices:
        raise BudgetExceededError(
            f"Exact colouring is limited to {budget.max_vertices} vertices, got {n}."
        )

    best = dsatur_color(graph)
    if upper_bound_hint is not None and max(upper_bound_hint) < max(best):
        best = list(upper_bound_hint)
    best_k = max(best) + 1
    lower, clique = clique_number(graph)
    if lower == best_k:
        return ChromaticResult(best_k, Coloring(tuple(best), best_k), 0)

    colours = [-1] * n
    counts: list[dict[int, int]] = [{} for _ in range(n)]
    nodes = 0

    def assign(vertex: int, colour: int) -> None:
        colours[vertex] = colour
        for neighbour in graph.adj[vertex]:
            counts[neighbour][colour] = counts[neighbour].get(colour, 0) + 1

    def unassign(vertex: int) -> None:
        colour = colours[vertex]
        colours[vertex] = -1
        for neighbour in graph.adj[vertex]:
            left = counts[neighbour][colour] - 1
            if left:
                counts[neighbour][colour] = left
            else:
                del counts[neighbour][colour]

    def search(coloured: int, in_use: int) -> bool:
        """Return True once a colouring meeting the lower bound is found."""
        nonlocal best, best_k, nodes
        nodes += 1
        if nodes > budget.max_nodes:
            raise BudgetExceededError(
                f"Exact colouring exceeded {budget.max_nodes} search nodes.", nodes=nodes
            )
        if in_use >= best_k:
            return False
        if coloured == n:
            best, best_k = colours.copy(), in_use
            log.debug(f"Improved colouring to {in_use} colours after {nodes} nodes.")
            return best_k == lower

        vertex = max(
            (v for v in range(n) if colours[v] == -1),
            key=lambda v: (
                len(counts[v]),
                sum(colours[u] == -1 for u in graph.adj[v]),
                -v,
            ),
        )
        for colour in range(in_use):
            if colour in counts[vertex]:
                continue
            assign(vertex, colour)
            done = search(coloured + 1, in_use)
            unassign(vertex)
            if done:
                return True
        if in_use + 1 < best_k:
            assign(vertex, in_use)
            done = search(coloured + 1, in_use + 1)
            unassign(vertex)
            if done:
                return True
        return False

    for colour, vertex in enumerate(clique):
        assign(vertex, colour)
    search(len(clique), len(clique))
    log.debug(f"Exact colouring of {n} vertices: {best_k} colours, {nodes} nodes.")
    return ChromaticResult(best_k, Coloring(tuple(best), best_k), nodes)
