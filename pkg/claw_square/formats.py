# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import logging
import typing as t
from pathlib import Path

import more_itertools

from claw_square.errors import GraphFormatError, PreconditionError
from claw_square.generators import (
    CompositionScheme,
    EndSymbol,
    IntervalKind,
    IntervalRep,
    Strip,
)
from claw_square.graph import Coloring, Multigraph, SimpleGraph

if t.TYPE_CHECKING:
    import collections.abc

    LineReader = more_itertools.peekable[tuple[int, list[str]]]

log = logging.getLogger(__name__)

MULTIGRAPH_KEYWORD = "multigraph"


def _tokenized_lines(text: str) -> LineReader:
    """Return a reader of ``(line number, fields)`` pairs with comments and blank lines dropped."""

    def lines() -> collections.abc.Iterator[tuple[int, list[str]]]:
        for number, line in enumerate(text.splitlines(), start=1):
            fields = line.partition("#")[0].split()
            if fields:
                yield number, fields

    return more_itertools.peekable(lines())


def _ints(fields: list[str], count: int, line_number: int) -> list[int]:
    if len(fields) != count:
        raise GraphFormatError(
            f"Expected {count} fields, got {len(fields)}: {' '.join(fields)!r}.",
            line_number,
        )
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise GraphFormatError(
            f"Non integer field in {' '.join(fields)!r}.", line_number
        ) from None


def _next_line(reader: LineReader, what: str) -> tuple[int, list[str]]:
    try:
        return next(reader)
    except StopIteration:
        raise GraphFormatError(f"Unexpected end of input, expected {what}.") from None


def _header(reader: LineReader) -> tuple[int, int]:
    line_number, fields = _next_line(reader, "the `n m` header")
    n, m = _ints(fields, 2, line_number)
    if n < 0 or m < 0:
        raise GraphFormatError("Header values must be nonnegative.", line_number)
    return n, m


def _check_pair(u: int, v: int, n: int, line_number: int) -> None:
    if not 0 <= u < v < n:
        raise GraphFormatError(f"Edge {u} {v} must satisfy 0 <= u < v < {n}.", line_number)


def _expect_end(reader: LineReader) -> None:
    if reader:
        line_number, fields = reader.peek()
        raise GraphFormatError(f"Unexpected trailing line {' '.join(fields)!r}.", line_number)


# region graphs
def _read_graph(reader: LineReader) -> SimpleGraph:
    n, m = _header(reader)
    edges = []
    seen = set()
    for _ in range(m):
        line_number, fields = _next_line(reader, "an edge line")
        u, v = _ints(fields, 2, line_number)
        _check_pair(u, v, n, line_number)
        if (u, v) in seen:
            raise GraphFormatError(f"Duplicate edge {u} {v}.", line_number)
        seen.add((u, v))
        edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)


def parse_graph(text: str) -> SimpleGraph:
    """Parse the simple graph format: header ``n m`` followed by `m` lines ``u v`` with ``u < v``."""
    reader = _tokenized_lines(text)
    graph = _read_graph(reader)
    _expect_end(reader)
    return graph


def dump_graph(graph: SimpleGraph) -> str:
    """Serialize `graph` in the simple graph format with sorted edges."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_multigraph(text: str) -> Multigraph:
    """
    Parse the multigraph format: header ``n m`` followed by `m` lines ``u v k``, pairs distinct.

    The header may be preceded by a ``multigraph`` line, which `dump_multigraph` always writes.
    """
    reader = _tokenized_lines(text)
    if reader and reader.peek()[1] == [MULTIGRAPH_KEYWORD]:
        next(reader)
    n, m = _header(reader)
    mult: dict[tuple[int, int], int] = {}
    for _ in range(m):
        line_number, fields = _next_line(reader, "an edge line")
        u, v, k = _ints(fields, 3, line_number)
        _check_pair(u, v, n, line_number)
        if k < 1:
            raise GraphFormatError(f"Multiplicity must be positive, got {k}.", line_number)
        if (u, v) in mult:
            raise GraphFormatError(f"Duplicate pair {u} {v}.", line_number)
        mult[(u, v)] = k
    _expect_end(reader)
    return Multigraph(n, mult)


def dump_multigraph(multigraph: Multigraph) -> str:
    """Serialize `multigraph` after a ``multigraph`` line, one line per distinct pair with its multiplicity."""
    pairs = multigraph.pairs()
    lines = [MULTIGRAPH_KEYWORD, f"{multigraph.n} {len(pairs)}"]
    lines.extend(f"{u} {v} {multigraph.multiplicity(u, v)}" for u, v in pairs)
    return "\n".join(lines) + "\n"


def is_multigraph_text(text: str) -> bool:
    """Return True if `text` starts with the ``multigraph`` line or its first edge line has three fields."""
    reader = _tokenized_lines(text)
    first = next(reader, None)
    if first is not None and first[1] == [MULTIGRAPH_KEYWORD]:
        return True
    return bool(reader) and len(reader.peek()[1]) == 3


# endregion


# region interval representations
def _is_rep_line(fields: list[str]) -> bool:
    return fields[0] in {"v", "interval"} or fields[0].removeprefix("-").isdigit()


def _read_interval_rep(reader: LineReader) -> IntervalRep:
    line_number, fields = _next_line(reader, "`circular P` or `linear`")
    match fields:
        case ["circular", period]:
            kind = IntervalKind.CIRCULAR
            (period,) = _ints([period], 1, line_number)
        case ["linear"]:
            kind = IntervalKind.LINEAR
            period = None
        case _:
            raise GraphFormatError(
                f"Expected `circular P` or `linear`, got {' '.join(fields)!r}.", line_number
            )

    positions: dict[int, int] = {}
    intervals = []
    while reader and _is_rep_line(reader.peek()[1]):
        line_number, fields = next(reader)
        if fields[0] != "interval":
            # `vertex position`, optionally prefixed with `v`
            vertex, position = _ints(fields[1:] if fields[0] == "v" else fields, 2, line_number)
            if vertex != len(positions):
                raise GraphFormatError(
                    f"Vertex lines must be in order, expected {len(positions)}.", line_number
                )
            positions[vertex] = position
        else:
            intervals.append(tuple(_ints(fields[1:], 2, line_number)))

    try:
        return IntervalRep(kind, tuple(positions.values()), tuple(intervals), period)
    except PreconditionError as e:
        raise GraphFormatError(str(e), line_number) from e


def parse_interval_rep(text: str) -> IntervalRep:
    """
    Parse ``circular P`` or ``linear``, then ``vertex position`` lines and ``interval s e`` lines.

    Position lines may carry a leading ``v``, vertices have to be listed in order.
    """
    reader = _tokenized_lines(text)
    rep = _read_interval_rep(reader)
    _expect_end(reader)
    return rep


def dump_interval_rep(rep: IntervalRep) -> str:  # noqa: D103
    if rep.kind is IntervalKind.CIRCULAR:
        lines = [f"circular {rep.period}"]
    else:
        lines = ["linear"]
    lines.extend(f"{vertex} {position}" for vertex, position in enumerate(rep.positions))
    lines.extend(f"interval {start} {end}" for start, end in rep.intervals)
    return "\n".join(lines) + "\n"


def _parse_symbol(field: str, line_number: int) -> EndSymbol:
    side, index = field[:1], field[1:]
    if side not in {"a", "b"} or not index.isdigit():
        raise GraphFormatError(f"Invalid end symbol {field!r}.", line_number)
    return EndSymbol(side, int(index))


def parse_scheme(text: str) -> CompositionScheme:
    """
    Parse a composition scheme.

    The ``scheme k`` header is followed by one ``base`` line per base clique listing end symbols
    like ``a0 b2``, then `k` blocks of ``strip i a b`` followed by the strip's linear rep.
    """
    reader = _tokenized_lines(text)
    line_number, fields = _next_line(reader, "`scheme k`")
    if fields[0] != "scheme":
        raise GraphFormatError(f"Expected `scheme k`, got {' '.join(fields)!r}.", line_number)
    (k,) = _ints(fields[1:], 1, line_number)

    base_cliques = []
    while reader and reader.peek()[1][0] == "base":
        line_number, fields = next(reader)
        base_cliques.append(tuple(_parse_symbol(field, line_number) for field in fields[1:]))

    strips = []
    for expected in range(k):
        line_number, fields = _next_line(reader, f"`strip {expected} a b`")
        if fields[0] != "strip":
            raise GraphFormatError(f"Expected a strip block, got {fields[0]!r}.", line_number)
        index, a, b = _ints(fields[1:], 3, line_number)
        if index != expected:
            raise GraphFormatError(f"Strip {expected} expected, got {index}.", line_number)
        rep = _read_interval_rep(reader)
        try:
            strips.append(Strip.from_rep(rep, a, b))
        except PreconditionError as e:
            raise GraphFormatError(str(e), line_number) from e
    _expect_end(reader)

    try:
        return CompositionScheme(tuple(strips), tuple(base_cliques))
    except PreconditionError as e:
        raise GraphFormatError(str(e)) from e


def dump_scheme(scheme: CompositionScheme) -> str:  # noqa: D103
    lines = [f"scheme {scheme.k}"]
    lines.extend(
        " ".join(["base", *(str(symbol) for symbol in clique)])
        for clique in scheme.base_cliques
    )
    for index, strip in enumerate(scheme.strips):
        lines.append(f"strip {index} {strip.a} {strip.b}")
        lines.append(dump_interval_rep(strip.rep).rstrip("\n"))
    return "\n".join(lines) + "\n"


def parse_strip(text: str) -> Strip:
    """Parse a single strip, a ``strip a b`` line followed by its linear rep."""
    reader = _tokenized_lines(text)
    line_number, fields = _next_line(reader, "`strip a b`")
    if fields[0] != "strip":
        raise GraphFormatError(f"Expected `strip a b`, got {' '.join(fields)!r}.", line_number)
    a, b = _ints(fields[1:], 2, line_number)
    rep = _read_interval_rep(reader)
    _expect_end(reader)
    try:
        return Strip.from_rep(rep, a, b)
    except PreconditionError as e:
        raise GraphFormatError(str(e), line_number) from e


def dump_strip(strip: Strip) -> str:  # noqa: D103
    return f"strip {strip.a} {strip.b}\n{dump_interval_rep(strip.rep)}"


# endregion


def parse_instance(
    text: str,
) -> SimpleGraph | Multigraph | IntervalRep | Strip | CompositionScheme:
    """Parse `text` in whichever of the formats its first line announces."""
    reader = _tokenized_lines(text)
    if not reader:
        raise GraphFormatError("Empty input.")
    match reader.peek()[1][0]:
        case "circular" | "linear":
            return parse_interval_rep(text)
        case "strip":
            return parse_strip(text)
        case "scheme":
            return parse_scheme(text)
    if is_multigraph_text(text):
        return parse_multigraph(text)
    return parse_graph(text)


def dump_instance(
    instance: SimpleGraph | Multigraph | IntervalRep | Strip | CompositionScheme,
) -> str:
    """Serialize `instance` in its own format, the inverse of `parse_instance`."""
    match instance:
        case SimpleGraph():
            return dump_graph(instance)
        case Multigraph():
            return dump_multigraph(instance)
        case IntervalRep():
            return dump_interval_rep(instance)
        case Strip():
            return dump_strip(instance)
        case CompositionScheme():
            return dump_scheme(instance)
    raise TypeError(f"Can't serialize {type(instance).__name__}.")


def dump_coloring(coloring: Coloring, method: str) -> str:
    """Serialize `coloring` as ``v c`` lines and a ``colors k method m`` summary."""
    lines = [f"{vertex} {colour}" for vertex, colour in enumerate(coloring.color)]
    lines.append(f"colors {coloring.colors_used} method {method}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> tuple[Coloring, str]:
    """Parse the output of `dump_coloring`, returning the colouring and its method name."""
    colours: list[int] = []
    method = None
    for line_number, fields in _tokenized_lines(text):
        if fields[0] == "colors":
            if len(fields) != 4 or fields[2] != "method":
                raise GraphFormatError("Malformed summary line.", line_number)
            method = fields[3]
            continue
        vertex, colour = _ints(fields, 2, line_number)
        if vertex != len(colours) or colour < 0:
            raise GraphFormatError(f"Unexpected colouring line {vertex} {colour}.", line_number)
        colours.append(colour)
    if method is None:
        raise GraphFormatError("Missing `colors k method m` summary line.")
    return Coloring(tuple(colours), max(colours, default=-1) + 1), method


def read_text(path: Path) -> str:
    """Read `path` as UTF-8, undecodable input raises `GraphFormatError`."""
    try:
        return path.read_text(encoding="utf8")
    except UnicodeDecodeError as e:
        raise GraphFormatError(f"{path} is not UTF-8 text, {e.reason} at byte {e.start}.") from None


def write_text(path: Path | None, text: str) -> None:
    """Write `text` to `path`, or to stdout when `path` is None."""
    if path is None:
        print(text, end="")
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf8", newline="\n")
    log.info(f"Wrote {len(text)} characters to {path}.")
