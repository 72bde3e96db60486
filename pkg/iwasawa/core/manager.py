# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2023, Stephane Capponi and Others
# Copyright (c) 2026, iwasawa contributors

"""
Plugin-style registration of commands. A ``BaseManager`` subclass names a
package; every non-abstract ``Hook`` subclass defined in a module of that
package registers itself with the manager when the module is imported.
"""
from __future__ import annotations

import pkgutil

from importlib import import_module
from typing import Dict, List, Optional, Type

from iwasawa.core.exceptions import (
    HookNotFound,
    ImproperlyConfigured,
    ManagerNotFound,
)

__all__ = ["managers", "BaseManager", "Hook"]


class ManagerRegistry:
    """Every manager, by name"""

    def __init__(self) -> None:
        self.managers: Dict[str, BaseManager] = {}

    def get_manager(self, name: str) -> BaseManager:
        if name not in self.managers:
            raise ManagerNotFound(
                "No manager named '{}'; known managers: {}".format(
                    name, ", ".join(sorted(self.managers))
                )
            )
        return self.managers[name]

    def add_manager(self, manager: BaseManager) -> None:
        if manager.name in self.managers:
            raise ImproperlyConfigured(
                "A manager named '{}' already exists".format(manager.name)
            )
        self.managers[manager.name] = manager


# Filled by BaseManager.__init_subclass__
managers = ManagerRegistry()


class Hook:
    """
    Something a manager collects, commands for now. ``manager`` names the
    manager the subclass registers with; ``abstract=True`` in the class
    statement skips the registration.
    """

    manager: Optional[str] = None

    def __init_subclass__(cls, abstract: bool = False) -> None:
        if abstract:
            return
        if cls.manager is None:
            raise ImproperlyConfigured(
                "{} sets no manager to register with".format(cls.__name__)
            )
        managers.get_manager(cls.manager).add_hook_impl(cls)


class BaseManager:
    """
    A named collection of hooks living in the package ``lookup_module``.
    Both can be given as class attributes or as class keywords::

        class CommandManager(BaseManager, name="commands"):
            lookup_module = "iwasawa.core.management.commands"
    """

    name: Optional[str] = None

    lookup_module: Optional[str] = None

    def __init__(self) -> None:
        self.hooks: Dict[str, Type[Hook]] = {}
        self._imported = False

    def __init_subclass__(
        cls, name: Optional[str] = None, lookup: Optional[str] = None
    ) -> None:
        cls.name = cls.name or name
        cls.lookup_module = cls.lookup_module or lookup
        missing = [attr for attr in ("name", "lookup_module") if not getattr(cls, attr)]
        if missing:
            raise ImproperlyConfigured(
                "{} is missing {}".format(cls.__name__, " and ".join(missing))
            )
        managers.add_manager(cls())

    def get_modules(self) -> List[str]:
        """Every public module of the lookup package"""
        package = import_module(self.lookup_module)
        return [
            "{}.{}".format(self.lookup_module, info.name)
            for info in pkgutil.iter_modules(package.__path__)
            if not info.ispkg and not info.name.startswith("_")
        ]

    def find_all(self) -> BaseManager:
        """Import the hook modules once, registering their hooks"""
        if not self._imported:
            self._imported = True
            for module in self.get_modules():
                import_module(module)
        return self

    def search_hook_impl(self, name: str) -> Type[Hook]:
        if name not in self.hooks:
            raise HookNotFound(
                "The '{}' manager has no hook named '{}'".format(self.name, name)
            )
        return self.hooks[name]

    def get_hooks_name(self) -> List[str]:
        return sorted(self.hooks)

    def add_hook_impl(self, hook: Type[Hook]) -> None:
        name = getattr(hook, "name", hook.__name__)
        if name in self.hooks:
            raise ImproperlyConfigured(
                "The '{}' manager already has a hook named '{}'".format(
                    self.name, name
                )
            )
        self.hooks[name] = hook
