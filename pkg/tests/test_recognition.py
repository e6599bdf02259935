# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

import networkx as nx
import pytest
from hypothesis import given

from claw_square.errors import BudgetExceededError
from claw_square.generators import (
    circular_power,
    compose_strips,
    cyclic_scheme,
    named_instance,
    planted_homogeneous_pair,
    power_strip,
    realize_interval,
)
from claw_square.graph import Multigraph, SimpleGraph, line_graph, underlying_simple
from claw_square.recognition import (
    clique_cover_of,
    find_claw,
    find_homogeneous_pair,
    find_stable_triple,
    is_homogeneous_pair,
    is_quasi_line,
    krausz_partition,
    two_clique_cover,
)

from .strategies import PROPERTY_SETTINGS, line_graphs, multigraphs

CLAW = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_find_claw():
    claw = find_claw(CLAW)
    assert claw is not None
    assert claw.center == 0
    assert sorted(claw.leaves) == [1, 2, 3]
    assert find_claw(named_instance("wheel5")) is None


def test_find_stable_triple():
    assert find_stable_triple(SimpleGraph.complete(4)) is None
    triple = find_stable_triple(SimpleGraph.cycle(6))
    assert triple is not None
    assert SimpleGraph.cycle(6).is_stable(triple)


def test_two_clique_cover():
    cover = two_clique_cover(SimpleGraph.from_edges(4, [(0, 1), (2, 3)]))
    assert cover is not None
    assert {cover.first, cover.second} == {frozenset({0, 1}), frozenset({2, 3})}
    assert two_clique_cover(SimpleGraph.cycle(5)) is None


def test_clique_cover_of_neighbourhood():
    wheel = named_instance("wheel5")
    assert clique_cover_of(wheel, wheel.adj[0]) is None
    assert clique_cover_of(wheel, wheel.adj[1]) is not None


def test_non_quasi_line_instances():
    verdict = is_quasi_line(named_instance("wheel5"))
    assert not verdict
    assert verdict.witness == 0
    assert not is_quasi_line(named_instance("icosahedron"))


def test_quasi_line_graphs_that_are_not_line_graphs():
    cycle_power = realize_interval(circular_power(7, 2))
    assert is_quasi_line(cycle_power)
    assert krausz_partition(cycle_power) is None

    composed = compose_strips(cyclic_scheme([power_strip(6, 2)] * 3))
    assert is_quasi_line(composed)
    assert krausz_partition(composed) is None


def test_krausz_rejects_claw_and_wheel():
    assert krausz_partition(CLAW) is None
    assert krausz_partition(named_instance("wheel5")) is None


def test_krausz_of_single_vertex():
    certificate = krausz_partition(SimpleGraph.complete(1))
    assert certificate is not None
    assert certificate.root.edge_count == 1
    assert certificate.verify(SimpleGraph.complete(1))


def test_krausz_of_parallel_edges():
    triangle = line_graph(Multigraph(2, {(0, 1): 3})).graph
    certificate = krausz_partition(triangle)
    assert certificate is not None
    assert certificate.verify(triangle)
    assert certificate.root.edge_count == 3


def test_krausz_root_of_diamond_is_paw():
    diamond = named_instance("diamond")
    certificate = krausz_partition(diamond)
    assert certificate is not None
    assert certificate.verify(diamond)
    assert max(certificate.root.mult.values()) == 1
    root = underlying_simple(certificate.root).to_networkx()
    assert nx.is_isomorphic(root, named_instance("paw").to_networkx())


def test_krausz_root_of_triangle_is_simple():
    certificate = krausz_partition(SimpleGraph.complete(3))
    assert certificate is not None
    assert max(certificate.root.mult.values()) == 1
    assert sorted(certificate.root.degree(v) for v in range(certificate.root.n)) == [1, 1, 1, 3]


def test_krausz_keeps_parallel_edges_without_exchange():
    multigraph = Multigraph(4, {(0, 1): 3, (0, 2): 1, (1, 3): 1})
    graph = line_graph(multigraph).graph
    certificate = krausz_partition(graph)
    assert certificate is not None
    assert certificate.verify(graph)
    assert sorted(certificate.root.mult.values()) == [1, 1, 3]


@given(line_graphs())
@PROPERTY_SETTINGS
def test_line_graphs_are_claw_free_and_quasi_line(graph: SimpleGraph):
    assert find_claw(graph) is None
    assert is_quasi_line(graph)


@given(multigraphs(max_vertices=6, max_multiplicity=3))
@PROPERTY_SETTINGS
def test_krausz_certificate_verifies(multigraph: Multigraph):
    graph = line_graph(multigraph).graph
    certificate = krausz_partition(graph)
    assert certificate is not None
    assert certificate.verify(graph)
    assert certificate.root.edge_count == graph.n


def test_planted_homogeneous_pair_found():
    planted = planted_homogeneous_pair(3, 2)
    pair = find_homogeneous_pair(planted.graph)
    assert pair is not None
    assert is_homogeneous_pair(planted.graph, pair.a, pair.b)


def test_refining_homogeneous_pair():
    planted = planted_homogeneous_pair(3, 2)
    pair = find_homogeneous_pair(planted.graph, require_refinement=True)
    assert pair is not None
    assert pair.witnesses is not None
    a1, a2, b = pair.witnesses
    assert planted.graph.has_edge(a1, b)
    assert not planted.graph.has_edge(a2, b)


def test_is_homogeneous_pair_rejects_mixed_vertex():
    path = SimpleGraph.path(5)
    assert not is_homogeneous_pair(path, {1, 2}, {3})
    assert not is_homogeneous_pair(path, {1}, {3})


def test_homogeneous_pair_search_budget():
    with pytest.raises(BudgetExceededError):
        find_homogeneous_pair(SimpleGraph.cycle(10), max_vertices=8)
