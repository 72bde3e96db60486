# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2023, Stephane Capponi and Others
# Copyright (c) 2026, iwasawa contributors

from contextlib import ContextDecorator
from typing import Any

from iwasawa.conf import MERGED_SETTINGS, UserSettingsHolder, settings


class override_settings(ContextDecorator):
    """
    Change settings for the duration of a test, as a context manager, a
    function decorator or a class decorator:

        with override_settings(UNITARITY_TOLERANCE=1e-6):
            ...

    Dictionary settings such as QUADRATURE are merged with their current
    value, the way a settings module is:

        @override_settings(QUADRATURE={"SPHERE_SAMPLES": 64})
        def test_small_budget():
            ...
    """

    def __init__(self, **options: Any) -> None:
        self.options = options
        self._saved = []

    def __call__(self, decorated: Any) -> Any:
        if isinstance(decorated, type):
            return self._decorate_class(decorated)
        return super().__call__(decorated)

    def _decorate_class(self, cls: type) -> type:
        override = self

        class Overridden(cls):
            @classmethod
            def setup_class(cls):
                override.enable()

            @classmethod
            def teardown_class(cls):
                override.disable()

        Overridden.__name__ = cls.__name__
        Overridden.__qualname__ = cls.__qualname__
        return Overridden

    def __enter__(self) -> None:
        self.enable()

    def __exit__(self, *exc_info: Any) -> None:
        self.disable()

    def enable(self) -> None:
        # Loads the settings on first use
        current = settings._get_wrapped()
        holder = UserSettingsHolder(current)
        for name, value in self.options.items():
            if name in MERGED_SETTINGS and isinstance(value, dict):
                value = {**getattr(current, name), **value}
            setattr(holder, name, value)
        self._saved.append(current)
        settings._wrapped = holder

    def disable(self) -> None:
        settings._wrapped = self._saved.pop()
