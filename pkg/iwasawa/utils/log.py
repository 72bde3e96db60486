# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2023, Stephane Capponi and Others
# Copyright (c) 2026, iwasawa contributors

import logging
import logging.config

from importlib import import_module
from typing import Any, Callable, Optional

from iwasawa.core.exceptions import ImproperlyConfigured

# Reports are written to stdout, so every log record goes to stderr.
DEFAULT_LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "iwasawa.plain": {"format": "%(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "iwasawa.stderr": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "iwasawa.plain",
        },
    },
    "loggers": {
        "iwasawa": {
            "handlers": ["iwasawa.stderr"],
            "level": "WARNING",
            "propagate": False,
        },
    },
}

VERBOSITY_LEVELS = {
    0: logging.ERROR,
    1: logging.WARNING,
    2: logging.INFO,
    3: logging.DEBUG,
}


def logging_callable(dotted_path: str) -> Callable[[Any], Any]:
    """The callable named by LOGGING_CONFIG, e.g. logging.config.dictConfig"""
    module_path, _, name = dotted_path.rpartition(".")
    if not module_path:
        raise ImproperlyConfigured(
            "LOGGING_CONFIG must be a dotted path, got {!r}".format(dotted_path)
        )
    try:
        func = getattr(import_module(module_path), name)
    except (ImportError, AttributeError) as e:
        raise ImproperlyConfigured(
            "Cannot import LOGGING_CONFIG {!r}: {}".format(dotted_path, e)
        ) from e
    if not callable(func):
        raise ImproperlyConfigured(
            "LOGGING_CONFIG {!r} is not callable".format(dotted_path)
        )
    return func


def configure_logging(logging_config: str, logging_settings: Optional[dict]) -> None:
    """Configure logging on load"""
    if logging_config:
        # First find the logging configuration function ...
        logging_config_func = logging_callable(logging_config)

        logging.config.dictConfig(DEFAULT_LOGGING)

        # ... then invoke it with the logging settings
        if logging_settings:
            logging_config_func(logging_settings)


def set_verbosity(verbosity: int) -> None:
    """Map the --verbosity option of a command onto the iwasawa logger"""
    level = VERBOSITY_LEVELS.get(verbosity, logging.DEBUG)
    logging.getLogger("iwasawa").setLevel(level)
