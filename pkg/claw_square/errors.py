# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations


class ClawSquareError(Exception):
    """Base for errors raised by the package."""


class GraphFormatError(ClawSquareError, ValueError):
    """A graph, interval or scheme text could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class PreconditionError(ClawSquareError, ValueError):
    """The input does not satisfy the operation's precondition."""


class BudgetExceededError(ClawSquareError, RuntimeError):
    """Exact search ran out of its vertex or node budget; use a greedy method instead."""

    def __init__(self, message: str, *, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class CounterexampleError(ClawSquareError, AssertionError):
    """
    A check realizing a structural theorem failed.

    `instance` holds the offending input in its text format so it can be stored and replayed.
    """

    def __init__(self, message: str, instance: str = ""):
        super().__init__(message)
        self.instance = instance
