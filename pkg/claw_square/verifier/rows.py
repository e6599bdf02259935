# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import csv
import io
import logging
import operator
import typing as t
from fractions import Fraction

from claw_square.utils.utils import format_rational

if t.TYPE_CHECKING:
    import collections.abc
    from pathlib import Path

    import typing_extensions as te

log = logging.getLogger(__name__)

Relation = t.Literal["<", "<=", "==", ">=", ">"]

CSV_HEADER = ("instance", "check", "result", "lhs", "rhs", "margin")

_RELATIONS: dict[str, collections.abc.Callable[[t.Any, t.Any], bool]] = {
    "<": operator.lt,
    "<=": operator.le,
    "==": operator.eq,
    ">=": operator.ge,
    ">": operator.gt,
}


class CheckRow(t.NamedTuple):
    """One evaluated comparison ``lhs relation rhs`` of a named check on an instance."""

    instance: str
    check: str
    passed: bool
    lhs: Fraction
    relation: Relation
    rhs: Fraction

    @classmethod
    def compare(
        cls,
        instance: str,
        check: str,
        lhs: Fraction | int,
        relation: Relation,
        rhs: Fraction | int,
    ) -> te.Self:
        """Evaluate ``lhs relation rhs`` exactly and record it."""
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(instance, check, _RELATIONS[relation](lhs, rhs), lhs, relation, rhs)

    @classmethod
    def flag(cls, instance: str, check: str, passed: bool) -> te.Self:
        """Record a yes/no check as ``1 == 1`` or ``0 == 1``."""
        return cls.compare(instance, check, int(passed), "==", 1)

    @property
    def margin(self) -> Fraction:
        """Slack of the comparison, nonnegative for passing inequalities."""
        if self.relation in {"<", "<="}:
            return self.rhs - self.lhs
        return self.lhs - self.rhs

    def to_csv(self) -> list[str]:  # noqa: D102
        return [
            self.instance,
            self.check,
            "pass" if self.passed else "fail",
            format_rational(self.lhs),
            format_rational(self.rhs),
            format_rational(self.margin),
        ]

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        return (
            f"{status} {self.instance} {self.check}: "
            f"{format_rational(self.lhs)} {self.relation} {format_rational(self.rhs)}"
        )


def write_rows(path: Path, rows: collections.abc.Iterable[CheckRow]) -> None:
    """Save `rows` to a CSV file at `path`."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf8", newline="") as csv_file:
        writer = csv.writer(csv_file, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(row.to_csv() for row in rows)
    log.info(f"Wrote check rows to {path}.")


def rows_to_csv(rows: collections.abc.Iterable[CheckRow]) -> str:
    """Render `rows` in the same CSV layout as `write_rows`."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(row.to_csv() for row in rows)
    return buffer.getvalue()


def summarize(rows: collections.abc.Sequence[CheckRow]) -> tuple[int, list[CheckRow]]:
    """Return the number of rows and the failing ones."""
    return len(rows), [row for row in rows if not row.passed]
