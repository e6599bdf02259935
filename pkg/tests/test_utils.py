# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

import logging
from fractions import Fraction

import pytest

from claw_square.utils.logging import SessionBackupHandler
from claw_square.utils.utils import ExceptionHandler, format_rational, parse_rational


@pytest.mark.parametrize(
    ("text", "value"),
    [("1/36", Fraction(1, 36)), (" 3 ", Fraction(3)), ("-2/4", Fraction(-1, 2)), (5, Fraction(5))],
)
def test_parse_rational(text: str | int, value: Fraction):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1/0", "a/b", ""])
def test_parse_rational_rejects(text: str):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(2, 4)) == "1/2"
    assert format_rational(3) == "3/1"


def test_session_backup_handler_rotates(tmp_path):
    path = tmp_path / "session.log"
    for session in range(3):
        handler = SessionBackupHandler(path, encoding="utf8", backup_count=2)
        handler.emit(logging.makeLogRecord({"msg": f"session {session}"}))
        handler.close()
    assert path.read_text(encoding="utf8").strip() == "session 2"
    assert (tmp_path / "session.log.1").read_text(encoding="utf8").strip() == "session 1"
    assert (tmp_path / "session.log.2").read_text(encoding="utf8").strip() == "session 0"


def test_exception_handler_logs(caplog):
    handler = ExceptionHandler()
    try:
        raise RuntimeError("boom")
    except RuntimeError as e:
        handler.handler(RuntimeError, e, e.__traceback__)
    handler.handler(KeyboardInterrupt, KeyboardInterrupt(), None)
    assert handler.triggered == 1
    assert "Uncaught exception:" in caplog.text
