# SPDX-License-Identifier: BSD-3-Clause
# SPDX-License-Identifier: LicenseRef-BSD3-Clause-Django
# Copyright (c) 2023, Stephane Capponi and Others
# Copyright (c) 2026, iwasawa contributors

"""
Version strings built from a ``VERSION`` tuple
``(major, minor, micro, releaselevel, serial)``.
"""
from typing import Optional, Tuple

VersionTuple = Tuple[int, int, int, str, int]

RELEASE_LEVELS = {"alpha": "a", "beta": "b", "rc": "rc", "final": ""}


def get_complete_version(version: Optional[VersionTuple] = None) -> VersionTuple:
    """``version`` after a sanity check, or iwasawa's own VERSION"""
    if version is None:
        from iwasawa import VERSION

        return VERSION
    assert len(version) == 5
    assert version[3] in RELEASE_LEVELS
    return version


def get_main_version(version: Optional[VersionTuple] = None) -> str:
    """X.Y, or X.Y.Z when there is a micro version"""
    major, minor, micro, *_ = get_complete_version(version)
    if micro:
        return "{}.{}.{}".format(major, minor, micro)
    return "{}.{}".format(major, minor)


def get_version(version: Optional[VersionTuple] = None) -> str:
    """
    PEP 440 version: ``0.1``, ``0.2a1``, ``0.2rc2``. An alpha with serial 0
    is a development snapshot, ``0.2.dev0``.
    """
    version = get_complete_version(version)
    level, serial = version[3:]
    main = get_main_version(version)
    if level == "alpha" and serial == 0:
        return main + ".dev0"
    if level == "final":
        return main
    return "{}{}{}".format(main, RELEASE_LEVELS[level], serial)


def get_report_version(version: Optional[VersionTuple] = None) -> str:
    """
    Version stamped into JSON reports. Anything but a final release reports
    "dev" so that two checkouts of the same tree produce identical reports.
    """
    version = get_complete_version(version)
    return get_main_version(version) if version[3] == "final" else "dev"
