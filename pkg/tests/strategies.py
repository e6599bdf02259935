# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

from hypothesis import HealthCheck, settings, strategies as st

from claw_square.generators import (
    IntervalKind,
    SubstitutionMode,
    circular_power,
    named_instance,
    random_interval_rep,
    realize_interval,
    substitute,
)
from claw_square.graph import Multigraph, SimpleGraph, line_graph

PROPERTY_SETTINGS = settings(
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)


@st.composite
def simple_graphs(draw: st.DrawFn, max_vertices: int = 8) -> SimpleGraph:
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph.from_edges(n, chosen)


@st.composite
def multigraphs(
    draw: st.DrawFn, max_vertices: int = 6, max_multiplicity: int = 3, min_edges: int = 1
) -> Multigraph:
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min_edges))
    multiplicities = draw(
        st.lists(
            st.integers(min_value=1, max_value=max_multiplicity),
            min_size=len(chosen),
            max_size=len(chosen),
        )
    )
    return Multigraph(n, dict(sorted(zip(chosen, multiplicities))))


@st.composite
def line_graphs(draw: st.DrawFn, max_vertices: int = 6, max_multiplicity: int = 2) -> SimpleGraph:
    """Line graphs of small multigraphs, claw-free by construction."""
    return line_graph(draw(multigraphs(max_vertices, max_multiplicity))).graph


@st.composite
def claw_free_graphs(draw: st.DrawFn) -> SimpleGraph:
    """Cycle powers, random circular interval graphs and clique substitutions of the wheel."""
    kind = draw(st.sampled_from(["power", "circular", "wheel"]))
    if kind == "power":
        n = draw(st.integers(min_value=7, max_value=10))
        return realize_interval(circular_power(n, draw(st.integers(min_value=2, max_value=3))))
    if kind == "circular":
        n = draw(st.integers(min_value=4, max_value=9))
        count = draw(st.integers(min_value=2, max_value=8))
        seed = draw(st.integers(min_value=0, max_value=2**32))
        return realize_interval(random_interval_rep(IntervalKind.CIRCULAR, n, count, n + 2, seed))
    sizes = draw(st.lists(st.integers(min_value=1, max_value=2), min_size=6, max_size=6))
    return substitute(named_instance("wheel5"), sizes, SubstitutionMode.CLIQUE)
