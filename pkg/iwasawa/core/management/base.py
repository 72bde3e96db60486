# SPDX-License-Identifier: BSD-3-Clause
# SPDX-License-Identifier: LicenseRef-BSD3-Clause-Django
# Copyright (c) 2023, Stephane Capponi and Others
# Copyright (c) 2026, iwasawa contributors

from __future__ import annotations

import logging
import os
import re
import sys
import textwrap

from argparse import Action, ArgumentParser, HelpFormatter, Namespace
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional, Sequence, Tuple, Type, Union

import numpy as np

import iwasawa

from iwasawa.core.exceptions import (
    CommandNotFound,
    HookNotFound,
    ImproperlyConfigured,
    IwasawaError,
    PreconditionViolation,
)
from iwasawa.core.manager import BaseManager, Hook
from iwasawa.quadrature.divergence import geometric_grid
from iwasawa.quadrature.spec import QuadratureSpec, RadialRule
from iwasawa.reports.render import render_csv, render_json
from iwasawa.reports.runconfig import load_runconfig, validate_runconfig
from iwasawa.utils.func import get_option, set_env
from iwasawa.utils.log import set_verbosity
from iwasawa.utils.terminal import TerminalWriter
from iwasawa.utils.version import get_report_version

logger = logging.getLogger(__name__)


class Config:
    """Parsed options of one command run"""

    def __init__(self, options: Namespace) -> None:
        self.options = options

    def getoption(
        self, name: str, default: Optional[Any] = None, required: bool = False
    ) -> Any:
        """Command line option value, ``default`` when unset"""
        return get_option(self.options, name, default, required)


# Run configuration fields that have a command line flag
FLAG_FIELDS = ("p", "seed")


class RunConfig(Config):
    """
    Configuration of an experiment command: the JSON config file named by
    --config, overridden by the command line flags, validated against the
    run configuration schema. Call `load` before reading `data`.
    """

    def __init__(self, options: Namespace) -> None:
        super().__init__(options)
        self.data: Dict[str, Any] = {}

    def load(self, fields: Sequence[str] = ()) -> RunConfig:
        """
        Build and validate `data`. `fields` names the command specific options
        that override the config field of the same name. Raises ConfigError.
        """
        path = self.getoption("config")
        try:
            data = load_runconfig(path) if path else {}
            if not isinstance(data, dict):
                raise ImproperlyConfigured("A run configuration is a JSON object")
            for name in (*FLAG_FIELDS, *fields):
                value = self.getoption(name)
                if value is not None:
                    data[name] = value
            samples = self.getoption("samples")
            if samples is not None:
                data.setdefault("quadrature", {})["sphere_samples"] = samples
            output = dict(data.get("output", {}))
            for name in ("output", "format"):
                value = self.getoption(name)
                if value is not None:
                    output["path" if name == "output" else name] = value
            if output:
                data["output"] = output
            self.data = validate_runconfig(data)
        except ImproperlyConfigured as e:
            raise ConfigError(str(e)) from e
        return self

    @property
    def p(self) -> int:
        return self.data["p"]

    @property
    def seed(self) -> Optional[int]:
        return self.data.get("seed")

    def get(self, name: str, default: Any = None) -> Any:
        return self.data.get(name, default)

    @property
    def output_path(self) -> Optional[Path]:
        path = self.data.get("output", {}).get("path")
        return Path(path) if path else None

    @property
    def output_format(self) -> str:
        return self.data.get("output", {}).get("format", "json")

    def quadrature_spec(self) -> QuadratureSpec:
        """settings.QUADRATURE, overridden by the config and then by --seed"""
        fields = dict(self.data.get("quadrature", {}))
        overrides: Dict[str, Any] = {}
        rule_fields = {"radial_epsabs", "radial_epsrel", "radial_limit"}
        if rule_fields & fields.keys():
            base = QuadratureSpec.from_settings().radial_rule
            overrides["radial_rule"] = RadialRule(
                fields.get("radial_epsabs", base.epsabs),
                fields.get("radial_epsrel", base.epsrel),
                fields.get("radial_limit", base.limit),
            )
        for name in ("sphere_samples", "delta_min", "r_max", "block_size"):
            if name in fields:
                overrides[name] = fields[name]
        overrides["seed"] = self.seed
        try:
            return QuadratureSpec.from_settings(**overrides)
        except ImproperlyConfigured as e:
            raise ConfigError(str(e)) from e

    def delta_grid(self) -> np.ndarray:
        """Truncation points of the divergence fits"""
        grid = self.data.get("divergence_grid", {})
        try:
            return geometric_grid(grid.get("k_min"), grid.get("k_max"))
        except PreconditionViolation as e:
            raise ConfigError(str(e)) from e

    def default_random(self, count: int, offset: int) -> str:
        """Shorthand for count random elements seeded from --seed"""
        return "random:{}:{}".format(count, (self.seed or 0) + offset)


class CommandError(Exception):
    """
    A command cannot finish. It reaches the user as one ``ClassName: message``
    line on stderr and the exit code ``returncode``, unless ``--traceback``
    is given.
    """

    returncode = 1

    def __init__(self, *args: Any, returncode: Optional[int] = None) -> None:
        super().__init__(*args)
        if returncode is not None:
            self.returncode = returncode


class ConfigError(CommandError):
    """Invalid arguments, run configuration or settings"""

    returncode = 2


class CheckFailed(CommandError):
    """A numerical check did not pass"""

    returncode = 1


class CommandParser(ArgumentParser):
    """
    Raises ConfigError on bad arguments. Only a parser built for the command
    line exits, with argparse's own code 2.
    """

    def __init__(self, *, from_command_line: bool = False, **kwargs: Any) -> None:
        self.from_command_line = from_command_line
        super().__init__(**kwargs)

    def error(self, message: str) -> NoReturn:
        if self.from_command_line:
            super().error(message)
        raise ConfigError("Error: {}".format(message))


def apply_settings_option(options: Namespace) -> None:
    """--settings wins over the environment for the rest of the process"""
    if getattr(options, "settings", None):
        os.environ["IWASAWA_SETTINGS_MODULE"] = options.settings


COMMON_OPTIONS = frozenset({"--version", "--verbosity", "--traceback", "--settings"})


class CommonOptionsLastFormatter(HelpFormatter):
    """Lists a command's own options before the ones every command has"""

    @staticmethod
    def _common_last(actions: Sequence[Action]) -> List[Action]:
        def is_common(action: Action) -> bool:
            return not COMMON_OPTIONS.isdisjoint(action.option_strings)

        return sorted(actions, key=is_common)

    def add_usage(self, usage, actions, *args, **kwargs) -> None:
        super().add_usage(usage, self._common_last(actions), *args, **kwargs)

    def add_arguments(self, actions) -> None:
        super().add_arguments(self._common_last(actions))


class CommandManager(BaseManager, name="commands"):
    lookup_module = "iwasawa.core.management.commands"

    def get_commands_usage(self, prog_name: str) -> str:
        """Command list of the main help, one shortened help line each"""
        usage = [
            "",
            "Type '{} help <subcommand>' for help on a specific subcommand.".format(
                prog_name
            ),
            "",
            "Available subcommands:",
            "",
        ]
        if not self.hooks:
            usage.append("No available commands")
            return "\n".join(usage)
        width = max(len(name) for name in self.hooks) + 4
        for name in self.get_hooks_name():
            summary = textwrap.shorten(self.hooks[name].help, 76 - width)
            usage.append("    {}{}".format(name.ljust(width), summary).rstrip())
        usage.extend(
            [
                "",
                "Exit codes: 0 every check passed, 1 a check failed, "
                "2 invalid configuration.",
            ]
        )
        return "\n".join(usage)

    def search_command(self, name: str) -> Type[BaseCommand]:
        try:
            return self.search_hook_impl(name)
        except HookNotFound as e:
            raise CommandNotFound("No command named '{}'".format(name)) from e


def command_name(class_name: str) -> str:
    """VerifyGroupCommand -> verify-group"""
    if class_name.endswith("Command"):
        class_name = class_name[: -len("Command")]
    return re.sub(r"(?<!^)(?=[A-Z])", "-", class_name).lower()


class BaseCommand(Hook, abstract=True):
    """
    A subcommand of ``iwasawa``. Subclasses set ``help``, add their options
    in ``add_arguments`` and implement ``handle(config)``. The name comes
    from the class name, ``VerifyGroupCommand`` is ``verify-group``, unless
    the class sets ``name``.

    ``run_from_argv`` parses the command line, calls ``execute`` and turns a
    CommandError into its exit code. ``call_command`` calls ``execute``
    directly and lets the error propagate.
    """

    help: str = ""

    manager = "commands"

    # Built from the parsed options and handed to handle()
    baseconfig: Type[Config] = Config

    def __init__(self) -> None:
        self.config: Optional[Config] = None
        self._from_command_line = False

    def __init_subclass__(cls, **kwargs: Any) -> None:
        if "name" not in cls.__dict__:
            cls.name = command_name(cls.__name__)
        super().__init_subclass__(**kwargs)

    def create_parser(
        self, prog_name: str, subcommand: str, **kwargs: Any
    ) -> ArgumentParser:
        prog = " ".join(filter(None, (os.path.basename(prog_name), subcommand)))
        parser = CommandParser(
            prog=prog,
            description=self.help or None,
            formatter_class=CommonOptionsLastFormatter,
            from_command_line=self._from_command_line,
            **kwargs,
        )
        parser.add_argument(
            "--version", action="version", version=iwasawa.get_version()
        )
        parser.add_argument(
            "--settings",
            help=(
                "Python path of a settings module, e.g. mylab.iwasawa_settings. "
                "Defaults to the IWASAWA_SETTINGS_MODULE environment variable."
            ),
        )
        parser.add_argument(
            "--traceback",
            action="store_true",
            help="Show the traceback of a command error instead of one line",
        )
        parser.add_argument(
            "-v",
            "--verbosity",
            default=1,
            type=int,
            choices=[0, 1, 2, 3],
            help=(
                "Verbosity level; 0=errors only, 1=warnings, 2=progress, "
                "3=quadrature diagnostics"
            ),
        )
        self.add_arguments(parser)
        return parser

    def add_arguments(self, parser: ArgumentParser) -> None:
        """Hook for the options of a command"""

    def print_help(self, prog_name: str, subcommand: str) -> None:
        self.create_parser(prog_name, subcommand).print_help()

    def parse_args(self, argv: Sequence[str]) -> Config:
        """``argv`` is ``[prog_name, subcommand, *arguments]``"""
        options = self.create_parser(argv[0], argv[1]).parse_args(argv[2:])
        apply_settings_option(options)
        self.config = self.baseconfig(options)
        return self.config

    def run_from_argv(self, argv: Sequence[str]) -> Any:
        self._from_command_line = True
        config = self.parse_args(argv)
        try:
            return self.execute(config)
        except CommandError as e:
            if config.getoption("traceback"):
                raise
            sys.stderr.write("{}: {}\n".format(e.__class__.__name__, e))
            sys.exit(e.returncode)

    def execute(self, config: Config) -> Any:
        set_verbosity(config.getoption("verbosity", 1))
        return self.handle(config)

    def handle(self, config: Config) -> Any:
        raise NotImplementedError(
            "subclasses of BaseCommand must provide a handle() method"
        )


@dataclass
class CommandReport:
    """What an experiment command hands back to ExperimentCommand.execute"""

    payload: Dict[str, Any]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    # (check name, passed, detail) lines of the human readable summary
    checks: List[Tuple[str, bool, str]] = field(default_factory=list)
    headline: Optional[str] = None
    passed: bool = True
    failure: str = "check failed"


class ExperimentCommand(BaseCommand, abstract=True):
    """
    Base class of the scientific subcommands. It adds the shared run
    configuration flags, validates the configuration, runs ``handle`` with
    the requested thread cap and writes the report:

    - JSON or CSV to stdout, or to the --output file;
    - a human readable summary to stderr, or to stdout with --output.

    Exit codes: 0 success, 1 a check failed, 2 invalid configuration.
    """

    baseconfig = RunConfig

    # Options of the command that map onto run configuration fields
    config_fields: Tuple[str, ...] = ()

    def create_parser(
        self, prog_name: str, subcommand: str, **kwargs: Any
    ) -> ArgumentParser:
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        group = parser.add_argument_group("run configuration")
        group.add_argument("--p", type=int, help="Order p of the matrices")
        group.add_argument(
            "--seed", type=int, help="Seed of the quadrature and of random elements"
        )
        group.add_argument(
            "--samples", type=int, help="Monte Carlo sample directions on the sphere"
        )
        group.add_argument("--config", help="JSON run configuration file")
        group.add_argument("--output", help="Write the report to this file")
        group.add_argument(
            "--format", choices=["json", "csv"], help="Report format (default json)"
        )
        group.add_argument(
            "--no-timestamp",
            action="store_true",
            help="Leave generated_at out of JSON reports, making them byte-stable",
        )
        group.add_argument(
            "--threads",
            type=int,
            help="Worker threads, as IWASAWA_THREADS. Never changes a result.",
        )
        return parser

    def execute(self, config: RunConfig) -> CommandReport:
        set_verbosity(config.getoption("verbosity", 1))
        config.load(self.config_fields)
        logger.info("%s: p=%d", self.name, config.p)
        threads = config.getoption("threads")
        if threads is not None and threads < 1:
            raise ConfigError("--threads must be >= 1, got {}".format(threads))
        environ = {"IWASAWA_THREADS": str(threads)} if threads else {}
        with set_env(**environ):
            try:
                report = self.handle(config)
            except ImproperlyConfigured as e:
                raise ConfigError(str(e)) from e
            except IwasawaError as e:
                raise CheckFailed("{}: {}".format(e.__class__.__name__, e)) from e
        self.emit(config, report)
        if not report.passed:
            raise CheckFailed(report.failure)
        return report

    def emit(self, config: RunConfig, report: CommandReport) -> None:
        if config.output_format == "csv":
            text = render_csv(report.rows)
        else:
            payload = dict(report.payload)
            payload.setdefault("command", self.name)
            payload.setdefault("version", get_report_version())
            text = render_json(payload, timestamp=not config.getoption("no_timestamp"))

        path = config.output_path
        if path is None:
            sys.stdout.write(text)
            writer = TerminalWriter(sys.stderr)
        else:
            path.write_text(text, encoding="utf-8")
            writer = TerminalWriter(sys.stdout)
        self.summarize(writer, report)

    def summarize(self, writer: TerminalWriter, report: CommandReport) -> None:
        writer.sep("-", self.name)
        for name, passed, detail in report.checks:
            writer.check(name, passed, detail)
        if report.headline:
            writer.line(report.headline)

    def handle(self, config: RunConfig) -> CommandReport:
        raise NotImplementedError(
            "subclasses of ExperimentCommand must provide a handle() method"
        )


def elements_or_default(
    config: RunConfig, name: str, count: int, offset: int
) -> Union[str, list]:
    """The element list `name` of the config, or count random ones"""
    return config.get(name, config.default_random(count, offset))
