# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

import typing as t
from fractions import Fraction

from claw_square.constants import (
    DEFAULT_DELTA0,
    DEFAULT_EPS,
    DEFAULT_EPS1,
    DEFAULT_EPS2,
    DEFAULT_EPS3,
    DEFAULT_MAX_EXACT_VERTICES,
    DEFAULT_MAX_SEARCH_NODES,
)
from claw_square.utils.utils import format_rational, parse_rational

from .category_meta import SettingsCategory, SettingsParams


def _rational_params(default: Fraction) -> SettingsParams:
    return SettingsParams(default, on_save=format_rational, on_load=parse_rational)


class Bounds(metaclass=SettingsCategory):  # noqa: D101
    eps: t.Annotated[Fraction, _rational_params(DEFAULT_EPS)]
    eps1: t.Annotated[Fraction, _rational_params(DEFAULT_EPS1)]
    eps2: t.Annotated[Fraction, _rational_params(DEFAULT_EPS2)]
    eps3: t.Annotated[Fraction, _rational_params(DEFAULT_EPS3)]
    delta0: t.Annotated[int, SettingsParams(DEFAULT_DELTA0)]


class Solver(metaclass=SettingsCategory):  # noqa: D101
    max_exact_vertices: t.Annotated[int, SettingsParams(DEFAULT_MAX_EXACT_VERTICES)]
    max_search_nodes: t.Annotated[int, SettingsParams(DEFAULT_MAX_SEARCH_NODES)]


class Batch(metaclass=SettingsCategory):  # noqa: D101
    workers: t.Annotated[int, SettingsParams(1)]
    default_seed: t.Annotated[int, SettingsParams(0)]


CATEGORIES: tuple[SettingsCategory, ...] = (Bounds, Solver, Batch)
