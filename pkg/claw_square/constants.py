# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import os
from fractions import Fraction
from pathlib import Path

VERSION = "v1.0.0"
APP = "Claw_Square"
ORG = "Numerlor"

DEFAULT_EPS = Fraction(1, 36)
DEFAULT_EPS1 = Fraction(1, 30)
DEFAULT_EPS2 = Fraction(1, 9)
DEFAULT_EPS3 = Fraction(2, 3)
DEFAULT_DELTA0 = 8
MAX_EPS = Fraction(3, 4)

DEFAULT_MAX_EXACT_VERTICES = 60
DEFAULT_MAX_SEARCH_NODES = 2_000_000

NAMED_INSTANCES = ("wheel5", "icosahedron", "petersen_line", "c5", "paw", "diamond")


def get_config_dir() -> Path:
    """Return the per-user configuration directory of the app."""
    base = os.environ.get("XDG_CONFIG_HOME")
    if base:
        return Path(base) / APP
    return Path.home() / ".config" / APP
