# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import logging
import os
import sys
import typing as t
from logging import handlers
from pathlib import Path

LOG_FORMAT = "{asctime} | {name:>40} | {levelname:>7} | {message}"

log = logging.getLogger(__name__)


class SessionBackupHandler(logging.FileHandler):
    """Rotate log files for every session that uses this class, up to `backup_count` backup log files are created."""

    def __init__(
        self,
        filename: os.PathLike[str] | str,
        encoding: str | None = None,
        backup_count: int = 0,
        delay: bool = False,
        errors: str | None = None,
    ):
        self.backup_count = backup_count
        super().__init__(filename, "w", encoding, delay, errors)

    def _open(self) -> t.TextIO:
        base_path = Path(self.baseFilename)
        Path(f"{self.baseFilename}.{self.backup_count}").unlink(missing_ok=True)
        for i in range(self.backup_count - 1, 0, -1):
            source_path = Path(f"{self.baseFilename}.{i}")
            if source_path.exists():
                source_path.rename(f"{self.baseFilename}.{i + 1}")

        if self.backup_count and base_path.exists():
            base_path.rename(f"{self.baseFilename}.1")

        return base_path.open("w", encoding=self.encoding, errors=self.errors)


def init_logging(log_dir: Path, *, verbose: bool = False) -> None:
    """
    Attach the stderr and file handlers to the root logger.

    The stream shows INFO and above unless `verbose` is set, the file always gets everything.
    Debug runs log to a size rotated ``logs/log.log``, optimized runs to a per-session log in `log_dir`.
    """
    root_logger = logging.getLogger()
    log_format = logging.Formatter(LOG_FORMAT, datefmt="%H:%M:%S", style="{")
    root_logger.setLevel(logging.DEBUG)

    stream_handler = logging.StreamHandler(stream=sys.stderr)
    stream_handler.setFormatter(log_format)
    stream_handler.setLevel(logging.DEBUG if verbose else logging.INFO)
    root_logger.addHandler(stream_handler)

    if __debug__:
        logger_path = Path("logs/log.log")
        logger_path.parent.mkdir(exist_ok=True)
        file_handler = handlers.RotatingFileHandler(
            logger_path, maxBytes=1024 * 1024 // 4, backupCount=3, encoding="utf8"
        )
    else:
        log_dir.mkdir(parents=True, exist_ok=True)
        file_handler = SessionBackupHandler(
            log_dir / "Claw_Square.log", encoding="utf8", backup_count=2
        )
    file_handler.setFormatter(log_format)
    root_logger.addHandler(file_handler)
