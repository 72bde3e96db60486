# SPDX-License-Identifier: BSD-3-Clause
# SPDX-License-Identifier: LicenseRef-BSD3-Clause-Django
# Copyright (c) 2023, Stephane Capponi and Others
# Copyright (c) 2026, iwasawa contributors

"""
Settings and configuration for iwasawa.

Values are read from iwasawa.conf.global_settings and then, if the
IWASAWA_SETTINGS_MODULE environment variable names a module, from that
module. The global defaults alone are a complete configuration.

The dictionary settings of MERGED_SETTINGS are merged key by key with their
defaults, so a settings module can change one quadrature parameter without
repeating the others. Tolerances, the divergence grid and the thread cap are
checked when the settings are loaded.
"""
from __future__ import annotations

import copy
import importlib
import inspect
import numbers
import os

from typing import Any, Dict, Iterable, Optional, Set, Union

from iwasawa.conf import global_settings
from iwasawa.core.exceptions import ImproperlyConfigured

ENVIRONMENT_VARIABLE = "IWASAWA_SETTINGS_MODULE"

# Dictionary settings a user module updates instead of replacing
MERGED_SETTINGS = ("QUADRATURE", "VERDICT", "VERIFY")

empty = object()


def module_settings(module: Any) -> Dict[str, Any]:
    """The UPPERCASE, non-module attributes of a settings module"""
    return {
        name: getattr(module, name)
        for name in dir(module)
        if name.isupper() and not inspect.ismodule(getattr(module, name))
    }


def _is_real(value: Any) -> bool:
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


def check_settings(values: Dict[str, Any]) -> None:
    """Raise ImproperlyConfigured for values no computation can run with"""
    for name, value in values.items():
        positive = name.endswith(("_TOLERANCE", "_LIMIT"))
        if positive and not (_is_real(value) and value > 0):
            raise ImproperlyConfigured(
                "{} must be a positive number, got {!r}".format(name, value)
            )

    grid = values.get("DIVERGENCE_GRID_EXPONENTS")
    if grid is not None:
        try:
            k_min, k_max = (int(k) for k in grid)
        except (TypeError, ValueError):
            raise ImproperlyConfigured(
                "DIVERGENCE_GRID_EXPONENTS must be a pair (k_min, k_max), "
                "got {!r}".format(grid)
            )
        if not 0 <= k_min < k_max:
            raise ImproperlyConfigured(
                "DIVERGENCE_GRID_EXPONENTS needs 0 <= k_min < k_max, "
                "got {!r}".format(grid)
            )

    threads = values.get("THREADS")
    if threads is not None and not (
        isinstance(threads, int) and not isinstance(threads, bool) and threads >= 1
    ):
        raise ImproperlyConfigured(
            "THREADS must be None or an integer >= 1, got {!r}".format(threads)
        )


class Settings:
    """The global defaults overlaid with one settings module"""

    def __init__(self, settings_module: Optional[str]) -> None:
        self._settings_module = settings_module
        self._explicit_settings: Set[str] = set()

    def _load_settings(self) -> None:
        values = module_settings(global_settings)
        if self._settings_module:
            module = importlib.import_module(self._settings_module)
            for name, value in module_settings(module).items():
                if name in MERGED_SETTINGS:
                    value = self._merge(name, values[name], value)
                values[name] = value
                self._explicit_settings.add(name)
        check_settings(values)
        for name, value in values.items():
            setattr(self, name, value)

    def _merge(self, name: str, default: Dict[str, Any], value: Any) -> Dict[str, Any]:
        if not isinstance(value, dict):
            raise ImproperlyConfigured(
                "{} must be a dict, got {!r}".format(name, type(value).__name__)
            )
        unknown = sorted(set(value) - set(default))
        if unknown:
            raise ImproperlyConfigured(
                "Unknown {} key(s) {} in '{}'; expected some of {}".format(
                    name, ", ".join(unknown), self._settings_module, sorted(default)
                )
            )
        return {**default, **value}

    def is_overridden(self, setting: str) -> bool:
        return setting in self._explicit_settings

    @property
    def SETTINGS_MODULE(self) -> Optional[str]:
        return self._settings_module

    def __repr__(self) -> str:
        return '<{} "{}">'.format(self.__class__.__name__, self.SETTINGS_MODULE)


class UserSettingsHolder:
    """
    Settings set in code, by ``LazySettings.configure`` or
    ``override_settings``. Anything not set here is read from
    ``default_settings``.
    """

    SETTINGS_MODULE = None

    def __init__(self, default_settings: Any) -> None:
        self.__dict__["_deleted"] = set()
        self.default_settings = default_settings

    def __getattr__(self, name: str) -> Any:
        if not name.isupper() or name in self._deleted:
            raise AttributeError(name)
        return getattr(self.default_settings, name)

    def __setattr__(self, name: str, value: Any) -> None:
        self._deleted.discard(name)
        super().__setattr__(name, value)

    def __delattr__(self, name: str) -> None:
        self._deleted.add(name)
        if hasattr(self, name):
            super().__delattr__(name)

    def __dir__(self) -> Iterable[str]:
        names = {*self.__dict__, *dir(self.default_settings)}
        return sorted(names - self._deleted)

    def is_overridden(self, setting: str) -> bool:
        if setting in self._deleted or setting in self.__dict__:
            return True
        is_overridden = getattr(self.default_settings, "is_overridden", None)
        return bool(is_overridden and is_overridden(setting))

    def __repr__(self) -> str:
        return "<{}>".format(self.__class__.__name__)


class LazySettings:
    """
    Proxy of the iwasawa settings. The settings module is read from
    IWASAWA_SETTINGS_MODULE on first access, unless ``configure`` was called
    before. Values are cached once read.
    """

    _wrapped: Any = None

    def __init__(self) -> None:
        self._wrapped = empty

    def _setup(self) -> None:
        module = os.environ.get(ENVIRONMENT_VARIABLE) or None
        wrapper = Settings(module)
        try:
            wrapper._load_settings()
        except ImportError as e:
            raise ImproperlyConfigured(
                "Cannot import the settings module '{}' named by {}: {}".format(
                    module, ENVIRONMENT_VARIABLE, e
                )
            ) from e
        self._wrapped = wrapper

    def _get_wrapped(self) -> Any:
        if self._wrapped is empty:
            self._setup()
        return self._wrapped

    def __repr__(self) -> str:
        if self._wrapped is empty:
            return "<LazySettings [Unevaluated]>"
        return '<LazySettings "{}">'.format(self._wrapped.SETTINGS_MODULE)

    def __getattr__(self, name: str) -> Any:
        value = getattr(self._get_wrapped(), name)
        self.__dict__[name] = value
        return value

    def __setattr__(self, name: str, value: Any) -> None:
        # Swapping the wrapped settings (override_settings) drops the cache
        if name == "_wrapped":
            self.__dict__.clear()
            self.__dict__[name] = value
            return
        self.__dict__.pop(name, None)
        setattr(self._get_wrapped(), name, value)

    def __delattr__(self, name: str) -> None:
        if name == "_wrapped":
            raise TypeError("can't delete _wrapped.")
        delattr(self._get_wrapped(), name)
        self.__dict__.pop(name, None)

    def __dir__(self) -> Iterable[str]:
        return dir(self._get_wrapped())

    def configure(self, default_settings: Any, **options: Any) -> None:
        """
        Configure the settings by hand instead of from IWASAWA_SETTINGS_MODULE.
        Unset values are read from ``default_settings``.
        """
        if self._wrapped is not empty:
            raise RuntimeError("Settings already configured.")
        holder = UserSettingsHolder(default_settings)
        for name, value in options.items():
            if not name.isupper():
                raise TypeError("Setting %r must be uppercase." % name)
            setattr(holder, name, value)
        self._wrapped = holder

    @property
    def configured(self) -> bool:
        return self._wrapped is not empty

    def __copy__(self) -> Union[LazySettings, Settings, UserSettingsHolder]:
        if self._wrapped is empty:
            return type(self)()
        return copy.copy(self._wrapped)

    def __deepcopy__(
        self, memo: dict
    ) -> Union[LazySettings, Settings, UserSettingsHolder]:
        if self._wrapped is empty:
            result = type(self)()
            memo[id(self)] = result
            return result
        return copy.deepcopy(self._wrapped, memo)


settings = LazySettings()
