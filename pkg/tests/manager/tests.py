from importlib import import_module

import pytest

from iwasawa.core.exceptions import HookNotFound, ImproperlyConfigured, ManagerNotFound
from iwasawa.core.management.base import BaseCommand, command_name
from iwasawa.core.manager import managers


@pytest.fixture(scope="class")
def default_manager():
    import_module("manager.managers")
    yield managers.get_manager("default").find_all()


class BaseManagerTests:
    def test_hook_is_linked(self):
        """Only hooks linked to a manager can be registered"""
        msg = "NotLinkedToManager sets no manager to register with"
        with pytest.raises(ImproperlyConfigured, match=msg):
            import_module("manager.hook_not_linked")

    def test_register_only_no_abstract_hook(self, default_manager):
        assert default_manager.search_hook_impl("foo") is not None
        with pytest.raises(HookNotFound):
            default_manager.search_hook_impl("abstract")

    def test_private_modules_are_skipped(self, default_manager):
        assert default_manager.get_modules() == ["manager.lookup.hooks"]
        assert "private" not in default_manager.get_hooks_name()


class ManagerRegistryTests:
    def test_mandatory_attribute(self):
        msg = "FooManager is missing lookup_module"
        with pytest.raises(ImproperlyConfigured, match=msg):
            import_module("manager.missing_attr")

    def test_duplicate_manager(self, default_manager):
        msg = "A manager named 'default' already exists"
        with pytest.raises(ImproperlyConfigured, match=msg):
            import_module("manager.duplicate_managers")

    def test_get_manager(self, default_manager):
        assert default_manager.name == "default"
        assert managers.get_manager("commands").name == "commands"

    def test_unknown_manager(self):
        with pytest.raises(ManagerNotFound, match="known managers: .*commands"):
            managers.get_manager("does_not_exist")

    def test_search_hook_impl(self, default_manager):
        hook = default_manager.search_hook_impl("foo")
        assert hook().execute() == "Execute from manager"
        msg = "The 'default' manager has no hook named 'will_not_exist'"
        with pytest.raises(HookNotFound, match=msg):
            default_manager.search_hook_impl("will_not_exist")

    def test_get_all_hooks_name(self, default_manager):
        assert default_manager.get_hooks_name() == ["bar", "foo"]

    def test_add_hook_with_duplicate(self, default_manager):
        msg = "already has a hook named 'foo'"
        with pytest.raises(ImproperlyConfigured, match=msg):
            import_module("manager.duplicate_hooks")


class CommandManagerTests:
    def test_every_command_is_registered(self):
        commands = managers.get_manager("commands").find_all()
        assert commands.get_hooks_name() == [
            "cocycle-norm",
            "factor",
            "orbit-classify",
            "scan",
            "verdict",
            "verify-group",
        ]

    def test_command_name(self):
        assert command_name("VerifyGroupCommand") == "verify-group"
        assert command_name("ScanCommand") == "scan"
        assert command_name("OrbitClassify") == "orbit-classify"

    def test_commands_usage(self):
        usage = managers.get_manager("commands").find_all().get_commands_usage("iw")
        lines = usage.splitlines()
        assert "Type 'iw help <subcommand>' for help on a specific subcommand." in lines
        verify_group = next(line for line in lines if "verify-group" in line)
        assert verify_group.startswith("    verify-group      Check the group law of P")
        assert verify_group.endswith("[...]")
        assert all(len(line) <= 80 for line in lines if line.startswith("    "))
        assert lines[-1].startswith("Exit codes: 0")

    def test_abstract_commands_are_not_registered(self):
        commands = managers.get_manager("commands").find_all()
        assert issubclass(commands.search_command("scan"), BaseCommand)
        assert "experiment" not in commands.get_hooks_name()
        assert "base" not in commands.get_hooks_name()
