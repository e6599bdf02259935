# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from fractions import Fraction

import pytest
from hypothesis import given

from claw_square.errors import PreconditionError
from claw_square.generators import (
    c5_blowup,
    circular_power,
    complete_bipartite,
    named_instance,
    power_strip,
)
from claw_square.graph import Multigraph, SimpleGraph
from claw_square.verifier import (
    Branch,
    CheckRow,
    Config,
    blowup_table_rows,
    check_cgtt,
    check_cgtt_exhaustive,
    check_conjecture_and_diameter2,
    check_dichotomy,
    check_interval_bounds,
    check_lemma_cliquesecond,
    edge_square_degree_identity,
    extremal_square_rows,
    is_2k2_free,
    max_square_degree_bound,
    rows_to_csv,
    small_2k2_free_multigraphs,
    sparsity_report,
    sparsity_reports,
    summarize,
    two_path_rows,
)
from claw_square.verifier.rows import CSV_HEADER

from .strategies import PROPERTY_SETTINGS, line_graphs, multigraphs

TRIPLE_EDGE = Multigraph(2, {(0, 1): 3})


# region rows
def test_check_row_margin_and_flags():
    row = CheckRow.compare("x", "bound", 3, "<=", 5)
    assert row.passed
    assert row.margin == 2
    flag = CheckRow.flag("x", "flag", False)
    assert not flag.passed
    assert flag.margin == -1
    assert str(flag) == "FAIL x flag: 0/1 == 1/1"


def test_rows_to_csv():
    rows = [CheckRow.compare("g", "half", Fraction(1, 2), "<", 1)]
    lines = rows_to_csv(rows).splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == "g,half,pass,1/2,1/1,1/2"


def test_summarize():
    rows = [CheckRow.flag("g", "a", True), CheckRow.flag("g", "b", False)]
    total, failed = summarize(rows)
    assert total == 2
    assert [row.check for row in failed] == ["b"]


# endregion


# region config
def test_default_config_is_feasible():
    assert all(row.passed for row in Config().feasibility_rows())


def test_infeasible_config_rejected():
    with pytest.raises(PreconditionError):
        Config(eps1=Fraction(5))
    with pytest.raises(PreconditionError):
        Config(eps=Fraction(1))
    with pytest.raises(PreconditionError):
        Config(eps3=Fraction(1))


def test_config_replace_ignores_none():
    config = Config().replace(eps=None, eps1=Fraction(1, 20))
    assert config.eps == Config().eps
    assert config.eps1 == Fraction(1, 20)


def test_config_from_settings(settings_file):
    assert Config.from_settings() == Config()


# endregion


# region bounds
def test_interval_bound_of_circular_rep():
    bound = check_interval_bounds(circular_power(5, 1))
    assert (bound.omega, bound.max_square_degree, bound.bound) == (2, 4, 4)
    assert bound.holds
    assert bound.row("c5").check == "circular_square_degree"


def test_interval_bound_of_strip():
    bound = check_interval_bounds(power_strip(4, 1))
    assert bound.kind == "strip"
    assert (bound.max_square_degree, bound.bound) == (3, 3)
    assert bound.holds


def test_max_square_degree_bound():
    row = max_square_degree_bound(named_instance("wheel5"), "wheel5")
    assert (row.lhs, row.rhs) == (5, 12)
    assert row.passed
    with pytest.raises(PreconditionError):
        max_square_degree_bound(SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))


@pytest.mark.parametrize("name", ["wheel5", "icosahedron", "petersen_line", "paw"])
def test_structural_lemmas(name: str):
    graph = named_instance(name)
    assert check_lemma_cliquesecond(graph)
    assert check_dichotomy(graph)
    assert all(row.passed for row in two_path_rows(graph, name))


def test_conjecture_on_wheel():
    report = check_conjecture_and_diameter2(named_instance("wheel5"))
    assert (report.omega, report.chi, report.bound) == (3, 6, 10)
    assert report.diameter_two
    rows = report.rows("wheel5")
    assert len(rows) == 1
    assert rows[0].passed


def test_diameter_two_rows_on_complete_graph():
    report = check_conjecture_and_diameter2(SimpleGraph.complete(6))
    assert (report.omega, report.chi, report.bound) == (6, 6, 45)
    rows = report.rows("k6")
    assert [row.check for row in rows] == ["conjecture", "diameter_two", "diameter_two_min_degree"]
    assert all(row.passed for row in rows)


@given(line_graphs(max_vertices=5))
@PROPERTY_SETTINGS
def test_bounds_hold_on_line_graphs(graph: SimpleGraph):
    assert max_square_degree_bound(graph).passed
    assert check_lemma_cliquesecond(graph)
    assert check_dichotomy(graph)


# endregion


# region sparsity
def test_identity_on_five_cycle():
    values = edge_square_degree_identity(Multigraph.from_simple(SimpleGraph.cycle(5)), (0, 1))
    assert values.formula == values.direct == 4


def test_identity_and_report_on_parallel_edges():
    values = edge_square_degree_identity(TRIPLE_EDGE, (0, 1, 0))
    assert values.formula == values.direct == 2
    report = sparsity_report(TRIPLE_EDGE, (0, 1, 0))
    assert report.parallel == 2
    assert report.degree == 2
    assert report.induced_edges == 1
    assert report.case == 1
    assert report.heavy
    assert all(row.passed for row in report.checks("triple"))


def test_identity_needs_regular_multigraph():
    with pytest.raises(PreconditionError):
        edge_square_degree_identity(Multigraph(3, {(0, 1): 1, (1, 2): 1}), (0, 1))


def test_unknown_edge_rejected():
    with pytest.raises(PreconditionError):
        sparsity_report(TRIPLE_EDGE, (0, 1, 3))


@given(multigraphs(max_vertices=6, max_multiplicity=3))
@PROPERTY_SETTINGS
def test_sparsity_checks_hold(multigraph: Multigraph):
    for report in sparsity_reports(multigraph):
        assert all(row.passed for row in report.checks("random"))
        if report.regular:
            values = edge_square_degree_identity(multigraph, report.edge)
            assert values.formula == values.direct


# endregion


# region extremal
def test_is_2k2_free():
    assert is_2k2_free(SimpleGraph.path(4))
    assert is_2k2_free(SimpleGraph.cycle(5))
    verdict = is_2k2_free(SimpleGraph.from_edges(4, [(0, 1), (2, 3)]))
    assert not verdict
    assert verdict.witness == ((0, 1), (2, 3))


def test_cgtt_bipartite_equality():
    verdict = check_cgtt(complete_bipartite(3, 3))
    assert verdict.branch is Branch.BIPARTITE
    assert verdict.bound == 9
    assert verdict.equality
    assert verdict.extremal
    assert verdict.passed


def test_cgtt_blowup_equality():
    verdict = check_cgtt(c5_blowup(4))
    assert verdict.branch is Branch.TRIANGLE_FREE
    assert (verdict.edges, verdict.bound) == (20, 20)
    assert verdict.equality
    assert verdict.extremal
    assert all(row.passed for row in verdict.rows("c5_blowup-4"))


def test_cgtt_strict_on_multigraph():
    doubled = Multigraph(5, {(0, 1): 2, (1, 2): 1, (2, 3): 1, (3, 4): 1, (0, 4): 1})
    verdict = check_cgtt(doubled)
    assert verdict.branch is Branch.TRIANGLE_FREE
    assert (verdict.delta, verdict.edges, verdict.bound) == (3, 6, 10)
    assert not verdict.equality
    assert verdict.passed


def test_cgtt_skips_graphs_with_induced_matching():
    assert check_cgtt(Multigraph(4, {(0, 1): 1, (2, 3): 1})) is None
    assert check_cgtt(Multigraph(6, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 5): 1})) is None


def test_blowup_and_extremal_rows():
    assert all(row.passed for row in blowup_table_rows(range(2, 9)))
    assert all(row.passed for row in extremal_square_rows(range(2, 6)))


def test_small_multigraphs_limited_by_atlas():
    with pytest.raises(PreconditionError):
        list(small_2k2_free_multigraphs(max_vertices=8))


def test_small_multigraphs_within_limits():
    found = list(small_2k2_free_multigraphs(4, 3, 2))
    assert found
    assert all(multigraph.max_degree <= 3 for multigraph in found)
    assert all(max(multigraph.mult.values()) <= 2 for multigraph in found)


def test_cgtt_exhaustive_small():
    rows = check_cgtt_exhaustive(4, 3, 2)
    assert rows
    assert all(row.passed for row in rows)


@pytest.mark.slow
def test_cgtt_exhaustive_default_limits():
    assert all(row.passed for row in check_cgtt_exhaustive())


# endregion
