# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2023, Stephane Capponi and Others
# Copyright (c) 2026, iwasawa contributors

from iwasawa.utils.version import get_version

VERSION = (0, 1, 0, "final", 0)

__version__ = get_version(VERSION)


def setup() -> None:
    """
    Configure the settings (this happens as a side effect of accessing the
    first setting) and configure logging.
    """
    from iwasawa.conf import settings
    from iwasawa.utils.log import configure_logging

    configure_logging(settings.LOGGING_CONFIG, settings.LOGGING)
