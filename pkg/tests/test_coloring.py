# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given

from claw_square.coloring import (
    ColoringMethod,
    StrongMode,
    conflicting_edges,
    greedy_trivial_square_coloring,
    main_square_coloring,
    palette_margins,
    palette_size,
    strong_edge_coloring,
    target_palette,
    trivial_bound,
    verify_coloring,
)
from claw_square.errors import PreconditionError
from claw_square.generators import (
    c5_blowup,
    circular_power,
    named_instance,
    realize_interval,
)
from claw_square.graph import Coloring, Multigraph, SimpleGraph, square
from claw_square.search import SolverBudget

from .strategies import PROPERTY_SETTINGS, claw_free_graphs, line_graphs, multigraphs

EPS = Fraction(1, 36)


def test_palette_sizes():
    assert trivial_bound(1) == 3
    assert trivial_bound(3) == 13
    assert target_palette(3, EPS) == 17
    assert palette_size(6, EPS) == 61
    assert palette_size(2, EPS) == 5
    assert palette_size(1, EPS) == 1


def test_palette_margins_hold_from_six():
    margins = palette_margins(6, EPS)
    assert margins.degenerate == 43
    assert margins.non_quasi_line == Fraction(79, 2)
    assert margins.holds


@pytest.mark.parametrize("eps", [Fraction(0), Fraction(1), Fraction(-1, 2)])
def test_epsilon_range(eps: Fraction):
    with pytest.raises(PreconditionError):
        palette_size(3, eps)


def test_verify_coloring():
    cycle = SimpleGraph.cycle(4)
    assert verify_coloring(cycle, [0, 1, 0, 1])
    verdict = verify_coloring(cycle, Coloring((0, 0, 1, 1), 2))
    assert not verdict
    assert verdict.witness == (0, 1)
    with pytest.raises(PreconditionError):
        verify_coloring(cycle, [0, 1, None, 1])


def test_main_procedure_on_wheel():
    wheel = named_instance("wheel5")
    result = main_square_coloring(wheel, EPS)
    assert result.method is ColoringMethod.MAIN_PROCEDURE
    assert result.colors_used == 6
    assert result.bound_certificate == 13
    assert [step.case for step in result.trace] == ["a", "c"]
    assert result.trace[-1].vertex == 0
    assert verify_coloring(square(wheel), result.coloring)


def test_main_procedure_on_quasi_line_graph():
    graph = realize_interval(circular_power(7, 2))
    result = main_square_coloring(graph, EPS)
    recoloured = [step for step in result.trace if step.case == "b" and step.s]
    assert recoloured
    assert all(step.available >= len(step.s) for step in recoloured)
    assert result.bound_certificate == trivial_bound(result.omega) == 13
    assert result.colors_used <= 13
    assert verify_coloring(square(graph), result.coloring)


def test_main_procedure_on_icosahedron():
    graph = named_instance("icosahedron")
    result = main_square_coloring(graph, EPS, budget=SolverBudget(40, 20_000))
    assert result.trace[-1].case == "c"
    assert verify_coloring(square(graph), result.coloring)


def test_main_procedure_rejects_claw():
    claw = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(PreconditionError):
        main_square_coloring(claw)
    with pytest.raises(PreconditionError):
        greedy_trivial_square_coloring(claw)


def test_greedy_on_five_cycle():
    result = greedy_trivial_square_coloring(SimpleGraph.cycle(5))
    assert result.colors_used == 5
    assert result.bound_certificate == 5


@pytest.mark.parametrize("mode", list(StrongMode))
def test_strong_edge_coloring_of_extremal_graph(mode: StrongMode):
    blowup = c5_blowup(2)
    result = strong_edge_coloring(blowup, mode)
    assert result.colors_used == 5
    assert len(result.edge_labels) == 5
    assert conflicting_edges(blowup, result) == []


def test_conflicting_edges_reported():
    multigraph = Multigraph(3, {(0, 1): 1, (1, 2): 1})
    result = strong_edge_coloring(multigraph)
    forced = dataclasses.replace(result, coloring=Coloring((0, 0), 1))
    assert conflicting_edges(multigraph, forced) == [((0, 1, 0), (1, 2, 0))]


@given(line_graphs(max_vertices=5))
@PROPERTY_SETTINGS
def test_main_procedure_within_palette(graph: SimpleGraph):
    result = main_square_coloring(graph, EPS, budget=SolverBudget(30, 20_000))
    assert verify_coloring(square(graph), result.coloring)
    assert result.colors_used <= result.bound_certificate
    assert result.bound_certificate <= trivial_bound(result.omega)


@given(line_graphs(max_vertices=6))
@PROPERTY_SETTINGS
def test_greedy_within_trivial_bound(graph: SimpleGraph):
    result = greedy_trivial_square_coloring(graph)
    assert verify_coloring(square(graph), result.coloring)
    assert result.colors_used <= trivial_bound(result.omega)


@given(multigraphs(max_vertices=5, max_multiplicity=2))
@PROPERTY_SETTINGS
def test_greedy_strong_edge_coloring(multigraph: Multigraph):
    result = strong_edge_coloring(multigraph, StrongMode.GREEDY)
    assert conflicting_edges(multigraph, result) == []
    delta = multigraph.max_degree
    assert result.colors_used <= 2 * delta * delta - 2 * delta + 1


@given(claw_free_graphs())
@PROPERTY_SETTINGS
def test_main_procedure_within_trivial_bound(graph: SimpleGraph):
    result = main_square_coloring(graph, EPS, budget=SolverBudget(30, 20_000))
    assert verify_coloring(square(graph), result.coloring)
    assert result.bound_certificate <= trivial_bound(result.omega)
    assert result.colors_used <= 2 * result.omega**2 - 2 * result.omega + 1
