# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import typing as t

from .toml_settings import TOMLSettings

if t.TYPE_CHECKING:
    from pathlib import Path

_settings: TOMLSettings | None = None


def set_settings(settings: TOMLSettings | None) -> None:
    """Set the `settings` object every category reads from, None detaches the current one."""
    global _settings
    _settings = settings


def get_settings() -> TOMLSettings:
    """Return the settings object installed by `set_settings` or `load_settings`."""
    assert _settings is not None, "Global settings uninitialized."
    return _settings


def load_settings(path: Path) -> TOMLSettings:
    """Read the TOML file at `path` (a missing file gives defaults) and install it for all categories."""
    settings = TOMLSettings(path)
    set_settings(settings)
    return settings
