# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

import networkx as nx
import pytest
from hypothesis import given

from claw_square.coloring import verify_coloring
from claw_square.errors import BudgetExceededError
from claw_square.generators import c5_blowup, named_instance
from claw_square.graph import SimpleGraph, line_graph, square
from claw_square.search import (
    SolverBudget,
    chromatic_exact,
    clique_number,
    dsatur_color,
    greedy_color,
    smallest_last_order,
)

from .strategies import PROPERTY_SETTINGS, simple_graphs


@pytest.mark.parametrize(
    ("graph", "omega"),
    [
        (SimpleGraph.complete(5), 5),
        (SimpleGraph.cycle(5), 2),
        (named_instance("wheel5"), 3),
        (named_instance("icosahedron"), 3),
        (SimpleGraph.from_edges(3, []), 1),
    ],
)
def test_clique_number(graph: SimpleGraph, omega: int):
    result = clique_number(graph)
    assert result.size == omega
    assert graph.is_clique(result.clique)


def test_clique_number_of_empty_graph():
    assert clique_number(SimpleGraph.from_edges(0, [])).size == 0


@pytest.mark.parametrize(
    ("graph", "chi"),
    [
        (SimpleGraph.complete(5), 5),
        (SimpleGraph.cycle(5), 3),
        (SimpleGraph.cycle(6), 2),
        (SimpleGraph.from_networkx(nx.petersen_graph())[0], 3),
        (square(named_instance("wheel5")), 6),
        (square(line_graph(c5_blowup(2)).graph), 5),
    ],
)
def test_chromatic_exact(graph: SimpleGraph, chi: int):
    result = chromatic_exact(graph)
    assert result.chi == chi
    assert result.coloring.colors_used == chi
    assert verify_coloring(graph, result.coloring)


def test_chromatic_exact_vertex_budget():
    with pytest.raises(BudgetExceededError):
        chromatic_exact(SimpleGraph.cycle(9), budget=SolverBudget(max_vertices=8))


def test_chromatic_exact_node_budget():
    graph = SimpleGraph.from_networkx(nx.mycielski_graph(5))[0]
    with pytest.raises(BudgetExceededError) as excinfo:
        chromatic_exact(graph, budget=SolverBudget(max_vertices=60, max_nodes=10))
    assert excinfo.value.nodes > 10


def test_smallest_last_order_is_permutation():
    graph = named_instance("icosahedron")
    assert sorted(smallest_last_order(graph)) == list(graph.vertices())


@given(simple_graphs())
@PROPERTY_SETTINGS
def test_greedy_colorings_are_proper(graph: SimpleGraph):
    assert verify_coloring(graph, dsatur_color(graph))
    assert verify_coloring(graph, greedy_color(graph, reversed(smallest_last_order(graph))))


@given(simple_graphs(max_vertices=9))
@PROPERTY_SETTINGS
def test_chromatic_exact_between_clique_and_dsatur(graph: SimpleGraph):
    result = chromatic_exact(graph)
    assert verify_coloring(graph, result.coloring)
    assert clique_number(graph).size <= result.chi <= max(dsatur_color(graph)) + 1


@given(simple_graphs(max_vertices=8))
@PROPERTY_SETTINGS
def test_clique_number_matches_networkx(graph: SimpleGraph):
    expected = max(len(clique) for clique in nx.find_cliques(graph.to_networkx()))
    assert clique_number(graph).size == expected
