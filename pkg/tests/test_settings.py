# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
import typing as t
from fractions import Fraction

import pytest

from claw_square import settings
from claw_square.constants import DEFAULT_EPS, DEFAULT_MAX_SEARCH_NODES
from claw_square.settings import SettingsCategory, SettingsParams
from claw_square.settings.toml_settings import TOMLSettings


def test_value_and_set_value(tmp_path):
    toml_settings = TOMLSettings(tmp_path / "config.toml")
    assert toml_settings.value("Bounds.eps", default=None) is None
    toml_settings.set_value("Bounds.eps", "1/40")
    toml_settings.set_value(("Solver",), "max_search_nodes", 10)
    assert toml_settings.value(("Bounds",), "eps") == "1/40"
    assert toml_settings.value("Solver.max_search_nodes") == 10
    with pytest.raises(KeyError):
        toml_settings.value("Batch.workers")


def test_sync_merges_with_file(tmp_path):
    path = tmp_path / "config.toml"
    path.write_text('[Batch]\nworkers = 4\n\n[Bounds]\neps = "1/50"\n', encoding="utf8")
    toml_settings = TOMLSettings(path)
    toml_settings.set_value("Bounds.eps", "1/40")
    toml_settings.sync()
    with path.open("rb") as settings_file:
        written = tomllib.load(settings_file)
    assert written == {"Batch": {"workers": 4}, "Bounds": {"eps": "1/40"}}
    assert not path.with_stem("_TEMPconfig").exists()


def test_categories_fall_back_to_defaults(settings_file):
    assert settings.Bounds.eps == DEFAULT_EPS
    assert settings.Solver.max_search_nodes == DEFAULT_MAX_SEARCH_NODES
    assert settings.Batch.workers == 1


def test_rational_settings_are_stored_as_text(settings_file):
    settings.Bounds.eps = Fraction(1, 40)
    assert settings_file.value("Bounds.eps") == "1/40"
    assert settings.Bounds.eps == Fraction(1, 40)
    reloaded = TOMLSettings(settings_file.path)
    assert reloaded.value("Bounds.eps") == "1/40"


def test_setting_names_and_params():
    assert settings.Bounds.setting_names() == ["eps", "eps1", "eps2", "eps3", "delta0"]
    assert settings.Batch.params("workers").default == 1
    assert settings.Batch.params("missing") is None


def test_custom_category_without_auto_sync(tmp_path):
    toml_settings = TOMLSettings(tmp_path / "config.toml")
    toml_settings.set_value("Example.seed", 7)

    class Example(
        metaclass=SettingsCategory, settings_getter=lambda: toml_settings, auto_sync=False
    ):
        seed: t.Annotated[int, SettingsParams(0)]
        label: t.Annotated[str, SettingsParams("x", on_save=str.upper)]

    assert Example.seed == 7
    Example.seed = 9
    Example.label = "abc"
    assert Example.seed == 9
    assert Example.label == "ABC"
    assert not toml_settings.path.exists()
    with pytest.raises(AttributeError):
        Example.missing  # noqa: B018
