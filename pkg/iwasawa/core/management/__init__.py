# SPDX-License-Identifier: BSD-3-Clause
# SPDX-License-Identifier: LicenseRef-BSD3-Clause-Django
# Copyright (c) 2023, Stephane Capponi and Others
# Copyright (c) 2026, iwasawa contributors

"""
The ``iwasawa`` command line: ``iwasawa <command> [options]``, ``iwasawa help
[command]`` and ``iwasawa version``.
"""
from __future__ import annotations

import os
import sys

from difflib import get_close_matches
from typing import TYPE_CHECKING, Any, List, Optional

import iwasawa

from iwasawa.conf import settings
from iwasawa.core.exceptions import CommandNotFound, ImproperlyConfigured
from iwasawa.core.management.base import (
    CommandError,
    CommandParser,
    ConfigError,
    apply_settings_option,
)
from iwasawa.core.manager import managers
from iwasawa.utils.terminal import terminal

if TYPE_CHECKING:
    from iwasawa.core.management.base import (
        BaseCommand,
        CommandManager,
        CommandReport,
    )

HELP_ARGS = (["--help"], ["-h"])


def get_commands(manager: str = "commands") -> CommandManager:
    """The command manager, with every module of its lookup package imported"""
    return managers.get_manager(manager).find_all()


class ManagementUtility:
    """Dispatch the command line to help, version or a command"""

    def __init__(self, argv: Optional[List[str]] = None) -> None:
        self.argv = argv or sys.argv[:]
        self.prog_name = os.path.basename(self.argv[0])
        if self.prog_name == "__main__.py":
            self.prog_name = "python -m iwasawa"
        self.settings_exception: Optional[Exception] = None

    def main_help_text(self) -> None:
        terminal.write("iwasawa {}\n".format(iwasawa.get_version()))
        terminal.write(get_commands().get_commands_usage(self.prog_name) + "\n")

        if self.settings_exception is not None:
            terminal.write("\n")
            terminal.sep("-", "Settings error")
            terminal.line(
                "Every command exits with code 2 until {} is fixed: {}".format(
                    "IWASAWA_SETTINGS_MODULE", self.settings_exception
                )
            )

        terminal.write("\n")

    def fetch_command(self, subcommand: str) -> BaseCommand:
        """
        The command called ``subcommand``. Exit 1 with the closest command
        name when there is no such command.
        """
        commands = get_commands()
        try:
            command = commands.search_command(subcommand)
        except CommandNotFound:
            message = "Unknown command: '{}'".format(subcommand)
            matches = get_close_matches(subcommand, commands.get_hooks_name(), n=1)
            if matches:
                message += ". Did you mean {}?".format(matches[0])
            sys.stderr.write(
                "{}\nType '{} help' for usage.\n".format(message, self.prog_name)
            )
            sys.exit(1)
        return command()

    def load_settings(self, args: List[str]) -> None:
        # --settings must be applied before any setting is read
        parser = CommandParser(add_help=False, allow_abbrev=False)
        parser.add_argument("--settings")
        try:
            options, _ = parser.parse_known_args(args)
        except CommandError:
            pass
        else:
            apply_settings_option(options)

        try:
            settings.QUADRATURE
        except (ImproperlyConfigured, ImportError) as e:
            self.settings_exception = e
        else:
            iwasawa.setup()

    def execute(self) -> None:
        args = self.argv[1:]
        subcommand = args[0] if args else "help"
        self.load_settings(args[1:])

        if subcommand == "help" or args in HELP_ARGS:
            names = [arg for arg in args[1:] if not arg.startswith("-")]
            if subcommand == "help" and names:
                self.fetch_command(names[0]).print_help(self.prog_name, names[0])
            else:
                self.main_help_text()
        elif subcommand == "version" or args == ["--version"]:
            sys.stdout.write(iwasawa.get_version() + "\n")
        else:
            command = self.fetch_command(subcommand)
            if self.settings_exception is not None:
                error = ConfigError(str(self.settings_exception))
                sys.stderr.write("{}: {}\n".format(error.__class__.__name__, error))
                sys.exit(error.returncode)
            command.run_from_argv(self.argv)


def call_command(name: str, *args: Any) -> CommandReport:
    """
    Run a command from Python and return its report:

        report = call_command("verdict", "--p", 1, "--samples", 512)

    Options are given as on the command line. Errors are raised, not turned
    into exit codes.
    """
    command: BaseCommand = get_commands().search_command(name)()
    config = command.parse_args(("", name, *(str(arg) for arg in args)))
    return command.execute(config)


def execute_from_command_line(argv: Optional[List[str]] = None) -> None:
    ManagementUtility(argv).execute()
