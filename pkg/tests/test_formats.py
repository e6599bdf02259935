# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

import pytest

from claw_square.errors import GraphFormatError
from claw_square.formats import (
    dump_coloring,
    dump_graph,
    dump_instance,
    dump_interval_rep,
    dump_multigraph,
    dump_scheme,
    is_multigraph_text,
    parse_coloring,
    parse_graph,
    parse_instance,
    parse_interval_rep,
    parse_multigraph,
    parse_scheme,
    parse_strip,
    read_text,
    write_text,
)
from claw_square.generators import (
    IntervalKind,
    IntervalRep,
    Strip,
    compose_strips,
    cyclic_scheme,
    power_strip,
    realize_interval,
)
from claw_square.graph import Coloring, Multigraph, SimpleGraph

PATH_REP = """\
linear
v 0 0
v 1 1
v 2 2
interval 0 1
interval 1 2
"""


def test_parse_graph_with_comments():
    graph = parse_graph("# a path\n3 2\n0 1  # first\n\n1 2\n")
    assert graph == SimpleGraph.path(3)


def test_dump_graph_sorts_edges():
    assert dump_graph(SimpleGraph.cycle(4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n"


@pytest.mark.parametrize(
    ("text", "line_number"),
    [
        ("3 1\n1 0\n", 2),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 1 2 3\n", 2),
        ("3 1\n0 1\n1 2\n", 3),
        ("-1 0\n", 1),
    ],
)
def test_graph_errors_carry_line_numbers(text: str, line_number: int):
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph(text)
    assert excinfo.value.line_number == line_number
    assert str(excinfo.value).startswith(f"line {line_number}: ")


def test_truncated_graph():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph("3 2\n0 1\n")
    assert excinfo.value.line_number is None


def test_parse_multigraph():
    multigraph = parse_multigraph("3 2\n0 1 2\n1 2 1\n")
    assert multigraph == Multigraph(3, {(0, 1): 2, (1, 2): 1})
    assert multigraph.edge_count == 3
    assert dump_multigraph(multigraph) == "multigraph\n3 2\n0 1 2\n1 2 1\n"
    assert parse_multigraph(dump_multigraph(multigraph)) == multigraph
    with pytest.raises(GraphFormatError):
        parse_multigraph("2 1\n0 1 0\n")
    with pytest.raises(GraphFormatError):
        parse_multigraph("3 2\n0 1 1\n0 1 2\n")


def test_parse_interval_rep():
    rep = parse_interval_rep(PATH_REP)
    assert rep.kind is IntervalKind.LINEAR
    assert realize_interval(rep) == SimpleGraph.path(3)
    circular = parse_interval_rep("circular 4\nv 0 0\nv 1 3\ninterval 3 0\n")
    assert circular.period == 4
    assert realize_interval(circular).m == 1


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("linear\n0 0\n1 1\n2 2\n3 3\ninterval 0 3\n", SimpleGraph.complete(4)),
        (
            "linear\n0 0\n1 1\n2 2\n3 3\ninterval 0 1\ninterval 1 2\ninterval 2 3\n",
            SimpleGraph.path(4),
        ),
        (
            "circular 5\n0 0\n1 1\n2 2\n3 3\n4 4\n"
            "interval 0 1\ninterval 1 2\ninterval 2 3\ninterval 3 4\ninterval 4 0\n",
            SimpleGraph.cycle(5),
        ),
    ],
)
def test_interval_rep_position_lines(text: str, expected: SimpleGraph):
    assert realize_interval(parse_interval_rep(text)) == expected


def test_dump_interval_rep_writes_position_lines():
    assert dump_interval_rep(parse_interval_rep(PATH_REP)).startswith("linear\n0 0\n1 1\n2 2\n")


def test_interval_rep_errors():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_interval_rep("linear\nv 1 0\n")
    assert excinfo.value.line_number == 2
    with pytest.raises(GraphFormatError) as excinfo:
        parse_interval_rep("linear\nv 0 0\nv 1 3\ninterval 3 0\n")
    assert excinfo.value.line_number == 4
    with pytest.raises(GraphFormatError):
        parse_interval_rep("spiral\n")


def test_parse_strip():
    strip = parse_strip(f"strip 0 2\n{PATH_REP}")
    assert (strip.a, strip.b) == (0, 2)
    with pytest.raises(GraphFormatError):
        parse_strip(f"strip 1 2\n{PATH_REP}")


def test_scheme_text_realizes_same_graph():
    scheme = cyclic_scheme([power_strip(3, 1)] * 5)
    text = dump_scheme(scheme)
    assert text.startswith("scheme 5\nbase b0 a1\n")
    parsed = parse_scheme(text)
    assert parsed.k == 5
    assert compose_strips(parsed) == compose_strips(scheme)


def test_scheme_errors():
    with pytest.raises(GraphFormatError):
        parse_scheme("scheme 1\nbase c0\n")
    with pytest.raises(GraphFormatError):
        parse_scheme(f"scheme 2\nbase a0 b0\nstrip 1 0 2\n{PATH_REP}")
    # ends b1 and a1 missing from the base cliques
    with pytest.raises(GraphFormatError):
        parse_scheme(
            f"scheme 2\nbase a0 b0\nstrip 0 0 2\n{PATH_REP}strip 1 0 2\n{PATH_REP}"
        )


def test_edgeless_multigraph_keeps_its_type():
    text = dump_multigraph(Multigraph(3, {}))
    assert text == "multigraph\n3 0\n"
    assert isinstance(parse_instance(text), Multigraph)
    assert isinstance(parse_instance("3 0\n"), SimpleGraph)


def test_parse_instance_sniffs_format():
    assert isinstance(parse_instance("3 2\n0 1\n1 2\n"), SimpleGraph)
    assert isinstance(parse_instance("3 2\n0 1 2\n1 2 1\n"), Multigraph)
    assert isinstance(parse_instance(PATH_REP), IntervalRep)
    assert isinstance(parse_instance(f"strip 0 2\n{PATH_REP}"), Strip)
    assert is_multigraph_text("2 1\n0 1 3\n")
    assert not is_multigraph_text("2 0\n")
    with pytest.raises(GraphFormatError):
        parse_instance("# nothing here\n")


def test_dump_instance_rejects_unknown_types():
    with pytest.raises(TypeError):
        dump_instance([1, 2])


def test_coloring_text():
    text = dump_coloring(Coloring((0, 1, 0), 5), "exact")
    assert text == "0 0\n1 1\n2 0\ncolors 2 method exact\n"
    coloring, method = parse_coloring("# from a run\n" + text)
    assert coloring.color == (0, 1, 0)
    assert method == "exact"


def test_coloring_text_errors():
    with pytest.raises(GraphFormatError):
        parse_coloring("0 0\n1 1\n")
    with pytest.raises(GraphFormatError) as excinfo:
        parse_coloring("0 0\n2 1\ncolors 2 method main\n")
    assert excinfo.value.line_number == 2


def test_read_text_rejects_undecodable_bytes(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_bytes(b"2 1\n0 1\xff\n")
    with pytest.raises(GraphFormatError):
        read_text(path)


def test_write_and_read_text(tmp_path, capsys):
    path = tmp_path / "nested" / "graph.txt"
    write_text(path, "1 0\n")
    assert read_text(path) == "1 0\n"
    write_text(None, "2 0\n")
    assert capsys.readouterr().out == "2 0\n"
