# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import typing as t

import claw_square.settings as settings

if t.TYPE_CHECKING:
    import collections.abc

    from .toml_settings import TOMLSettings

_MISSING = object()


class SettingsParams(t.NamedTuple):
    """
    Metadata for a setting in `SettingsCategory`.

    `default` is the value used when the file doesn't define the setting
    `on_save` is applied to a value before it's written to the settings
    `on_load` is applied to a value read from the settings before it's returned
    """

    default: t.Any
    on_save: collections.abc.Callable[[t.Any], t.Any] | None = None
    on_load: collections.abc.Callable[[t.Any], t.Any] | None = None


class SettingsCategory(type):
    """
    Proxy annotated class attributes into a category of the settings object.

    >>> class Category(metaclass=SettingsCategory):
    ...     setting: typing.Annotated[int, SettingsParams(1)]

    reads and writes ``Category.setting`` in the TOML document.
    `settings_getter` returns the settings object, `settings.get_settings` by default.
    With `auto_sync` the file is written on every assignment.
    """

    auto_sync_: bool
    settings_getter_: collections.abc.Callable[[], TOMLSettings]

    def __new__(
        metacls,
        name: str,
        bases: tuple[type, ...],
        namespace: dict[str, t.Any],
        *,
        auto_sync: bool = True,
        settings_getter: collections.abc.Callable[
            [], TOMLSettings
        ] = settings.get_settings,
        **kwargs,
    ):
        """Create the category object and set its attributes."""
        obj = super().__new__(metacls, name, bases, namespace, **kwargs)
        obj.settings_getter_ = settings_getter
        obj.auto_sync_ = auto_sync
        return obj

    def __getattr__(cls, key: str):
        """Fetch an annotated setting from the settings object, falling back to its default."""
        params = cls.params(key)
        if params is None:
            raise AttributeError(key)

        settings_obj = cls.settings_getter_()
        value = settings_obj.value((cls.__name__,), key, default=_MISSING)
        if value is _MISSING:
            return params.default

        if params.on_load is not None:
            return params.on_load(value)
        return value

    def __setattr__(cls, key: str, value: t.Any):
        """Write an annotated setting to the settings object, other attributes are set normally."""
        params = cls.params(key)
        if params is None:
            super().__setattr__(key, value)
            return

        if params.on_save is not None:
            value = params.on_save(value)
        cls.settings_getter_().set_value((cls.__name__,), key, value)
        if cls.auto_sync_:
            cls.settings_getter_().sync()

    def params(cls, key: str) -> SettingsParams | None:
        """Return the `SettingsParams` of the setting `key`, None for other attributes."""
        annotation = cls.__dict__.get("__annotations__", {}).get(key)
        if annotation is None:
            return None
        return next(
            (arg for arg in t.get_args(annotation) if isinstance(arg, SettingsParams)),
            None,
        )

    def setting_names(cls) -> list[str]:  # noqa: D102
        return [name for name in cls.__dict__.get("__annotations__", {}) if cls.params(name)]
