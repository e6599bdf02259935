# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import typing as t

import pytest

from claw_square.settings import set_settings
from claw_square.settings.toml_settings import TOMLSettings

if t.TYPE_CHECKING:
    import collections.abc
    from pathlib import Path


@pytest.fixture()
def settings_file(tmp_path: Path) -> collections.abc.Iterator[TOMLSettings]:
    """Install a settings object backed by a fresh file for every test."""
    toml_settings = TOMLSettings(tmp_path / "config.toml")
    set_settings(toml_settings)
    yield toml_settings
    set_settings(None)
