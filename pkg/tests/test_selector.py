# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

import dataclasses
from fractions import Fraction

import pytest

from claw_square.errors import PreconditionError
from claw_square.generators import (
    circular_power,
    compose_strips,
    cyclic_scheme,
    named_instance,
    power_strip,
    realize_interval,
)
from claw_square.graph import SimpleGraph
from claw_square.selector import (
    SelectorVariant,
    degenerate_set,
    neighbourhood_dichotomy,
    select_nonquasiline,
    select_quasiline,
    two_path_diagnostic,
)


def test_nonquasiline_selector_on_wheel():
    wheel = named_instance("wheel5")
    witness = select_nonquasiline(wheel)
    assert witness.variant is SelectorVariant.NON_QUASI_LINE
    assert witness.v == 0
    assert witness.s == frozenset()
    assert witness.omega == 3
    assert all(check.holds for check in witness.checks)
    assert witness.revalidate(wheel)


def test_nonquasiline_selector_on_icosahedron():
    icosahedron = named_instance("icosahedron")
    witness = select_nonquasiline(icosahedron)
    assert witness.checks[0].value == 20
    assert witness.revalidate(icosahedron)


def test_quasiline_selector_on_cycle_power():
    graph = realize_interval(circular_power(7, 2))
    witness = select_quasiline(graph)
    assert witness.variant is SelectorVariant.QUASI_LINE
    assert witness.v == 0
    assert witness.s == graph.adj[0]
    assert witness.revalidate(graph)


def test_quasiline_selector_on_composition():
    graph = compose_strips(cyclic_scheme([power_strip(6, 2)] * 4))
    witness = select_quasiline(graph)
    assert witness.s <= graph.adj[witness.v]
    assert witness.revalidate(graph)


def test_tampered_witness_fails_revalidation():
    graph = realize_interval(circular_power(7, 2))
    witness = select_quasiline(graph)
    assert not dataclasses.replace(witness, s=frozenset({3})).revalidate(graph)


def test_selector_preconditions():
    with pytest.raises(PreconditionError):
        select_nonquasiline(SimpleGraph.cycle(5))
    with pytest.raises(PreconditionError):
        select_quasiline(named_instance("wheel5"))
    with pytest.raises(PreconditionError):
        select_quasiline(SimpleGraph.cycle(5))
    with pytest.raises(PreconditionError):
        select_nonquasiline(SimpleGraph.from_edges(4, [(0, 1), (2, 3)]))


def test_degenerate_set():
    graph = realize_interval(circular_power(7, 2))
    assert degenerate_set(graph, 0, 3) == graph.adj[0]
    assert degenerate_set(graph, 0, 1) == frozenset()


def test_two_path_diagnostic_on_six_cycle():
    diagnostic = two_path_diagnostic(SimpleGraph.cycle(6), 0)
    assert diagnostic.k == 1
    assert diagnostic.u_min == 2
    assert diagnostic.w == 1
    assert diagnostic.x == frozenset()
    assert diagnostic.c1 == {1}
    assert diagnostic.c2 == {5}
    assert diagnostic.square_degree == 4
    assert diagnostic.bound == Fraction(4)
    assert diagnostic.holds


def test_two_path_diagnostic_needs_second_neighbourhood():
    with pytest.raises(PreconditionError):
        two_path_diagnostic(SimpleGraph.complete(3), 0)


@pytest.mark.parametrize("name", ["wheel5", "icosahedron", "petersen_line", "paw", "diamond"])
def test_neighbourhood_dichotomy_holds(name: str):
    graph = named_instance(name)
    assert neighbourhood_dichotomy(graph, graph.vertices()) is None
