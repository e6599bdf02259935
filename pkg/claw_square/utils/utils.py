# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import logging
import typing as t
from fractions import Fraction

if t.TYPE_CHECKING:
    from types import TracebackType

log = logging.getLogger(__name__)


class ExceptionHandler:
    """Handles exceptions when linked to sys.excepthook."""

    def __init__(self):
        self.triggered = 0

    def handler(
        self,
        exctype: type[BaseException],
        value: BaseException,
        tb: TracebackType | None,
    ) -> None:
        """Log the raised exception, the interpreter then exits with a failing status."""
        if issubclass(exctype, KeyboardInterrupt):
            log.info("Interrupted.")
            return

        self.triggered += 1
        log.critical("Uncaught exception:", exc_info=(exctype, value, tb))


def parse_rational(text: str | Fraction | int) -> Fraction:
    """
    Parse an exact rational written as ``p/q`` or an integer.

    Floats are rejected so that no rounded value enters a bound comparison.
    """
    if isinstance(text, Fraction | int):
        return Fraction(text)
    numerator, slash, denominator = text.strip().partition("/")
    try:
        if not slash:
            return Fraction(int(numerator))
        return Fraction(int(numerator), int(denominator))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Expected a rational like 1/36, got {text!r}.") from None


def format_rational(value: Fraction | int) -> str:
    """Render `value` as ``p/q``, integers included."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
