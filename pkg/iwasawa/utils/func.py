# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2023, Stephane Capponi and Others
# Copyright (c) 2026, iwasawa contributors

import contextlib
import os

from argparse import Namespace
from typing import Any, Iterator, Optional


def get_option(
    options: Namespace, name: str, default: Any = None, required: bool = False
) -> Any:
    """
    Value of a parsed option. An option left at None counts as missing:
    ``default`` is returned, or ValueError raised when ``required``.
    """
    value = getattr(options, name, None)
    if value is not None:
        return value
    if required:
        raise ValueError("No option named {}".format(name))
    return default


@contextlib.contextmanager
def set_env(**environ: Optional[str]) -> Iterator[None]:
    """
    Set environment variables for the duration of the block. None removes
    the variable.
    """
    saved = {key: os.environ.get(key) for key in environ}
    for key, value in environ.items():
        if value is None:
            os.environ.pop(key, None)
        else:
            os.environ[key] = value
    try:
        yield
    finally:
        for key, value in saved.items():
            if value is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = value
