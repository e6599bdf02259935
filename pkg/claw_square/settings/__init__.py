# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from .default_settings_obj import get_settings, load_settings, set_settings  # isort:skip
from .categories import Batch, Bounds, Solver
from .category_meta import SettingsCategory, SettingsParams

__all__ = [
    "Bounds",
    "Solver",
    "Batch",
    "SettingsParams",
    "SettingsCategory",
    "set_settings",
    "get_settings",
    "load_settings",
]
