# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import copy
import logging
import shutil
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
import typing as t
from contextlib import suppress

import tomli_w

if t.TYPE_CHECKING:
    import collections.abc
    from pathlib import Path

    TOMLType = bool | int | float | str | list | tuple | dict

_MISSING_SENTINEL = t.cast(t.Any, object())

log = logging.getLogger(__name__)


def _split_path(
    categories: collections.abc.Iterable[str] | str, key: str | None
) -> tuple[list[str], str]:
    """Accept either a dotted ``"Category.key"`` path or explicit `categories` with `key`."""
    if key is None:
        *path, key = t.cast(str, categories).split(".")
        return path, key
    return list(categories), key


def _merge(target: dict, source: collections.abc.Mapping) -> None:
    """Recursively copy `source` into `target`, values of `source` win."""
    for key, value in source.items():
        if isinstance(value, dict) and isinstance(target.get(key), dict):
            _merge(target[key], value)
        else:
            target[key] = copy.deepcopy(value)


class TOMLSettings:
    """Provide an interface to a TOML settings file."""

    def __init__(self, file_path: Path):
        self.path = file_path
        self._settings_dict: dict[str, t.Any] = {}
        with suppress(FileNotFoundError):
            self.load_from_file()

    def value(
        self,
        categories: collections.abc.Iterable[str] | str,
        key: str | None = None,
        *,
        default: t.Any = _MISSING_SENTINEL,
    ) -> TOMLType:
        """
        Get the value of `key` inside `categories`.

        With a single argument, it's a dotted path like ``"Bounds.eps"``.
        Raise `KeyError` when the value is missing and no `default` is given.
        """
        path, key = _split_path(categories, key)
        node: t.Any = self._settings_dict
        for category in path:
            node = node.get(category) if isinstance(node, dict) else None
        if isinstance(node, dict) and key in node:
            return node[key]
        if default is _MISSING_SENTINEL:
            raise KeyError(".".join((*path, key)))
        return default

    def set_value(self, *args) -> None:
        """
        Set a value from ``(categories, key, value)`` or ``(dotted_key, value)`` arguments.

        Missing categories are created.
        """
        if len(args) == 2:
            dotted, value = args
            path, key = _split_path(dotted, None)
        else:
            categories, key, value = args
            path, key = _split_path(categories, key)
        node = self._settings_dict
        for category in path:
            node = node.setdefault(category, {})
        node[key] = value

    def sync(self) -> None:
        """
        Merge the settings into the file, values set on this object overwrite those in the file.

        The contents are written to a temporary file and then moved to the target path.
        """
        log.info(f"Syncing settings to {self.path}.")
        merged: dict[str, t.Any] = {}
        with suppress(FileNotFoundError):  # noqa: SIM117
            with self.path.open("rb") as settings_file:
                merged = tomllib.load(settings_file)
        _merge(merged, self._settings_dict)
        self._settings_dict = merged

        self.path.parent.mkdir(parents=True, exist_ok=True)
        temp_path = self.path.with_stem("_TEMP" + self.path.stem)
        with temp_path.open("wb") as settings_file:
            tomli_w.dump(self._settings_dict, settings_file)
        shutil.move(temp_path, self.path)

    def load_from_file(self) -> None:
        """Replace the in memory settings with the contents of the file."""
        log.info(f"Loading settings from {self.path}.")
        with self.path.open("rb") as settings_file:
            self._settings_dict = tomllib.load(settings_file)
