import copy
import os

import numpy as np
import pytest

try:
    import iwasawa
except ImportError as e:
    raise RuntimeError(
        "iwasawa module not found, reference tests/README.rst for instructions."
    ) from e

from iwasawa.conf import ENVIRONMENT_VARIABLE, settings
from iwasawa.quadrature.spec import QuadratureSpec
from iwasawa.utils.log import DEFAULT_LOGGING


def pytest_addoption(parser):
    parser.addoption(
        "--settings",
        help=(
            'Python path to a settings module, e.g. "mylab.settings". The '
            "global defaults are used otherwise."
        ),
    )


def pytest_configure(config):
    settings_module = config.getoption("settings")
    if settings_module:
        os.environ[ENVIRONMENT_VARIABLE] = settings_module
    else:
        os.environ.pop(ENVIRONMENT_VARIABLE, None)
    # A thread cap from the shell must not leak into the results
    os.environ.pop("IWASAWA_THREADS", None)

    if config.getoption("verbose") >= 1:
        print(
            "Testing against iwasawa installed in '{}'".format(
                os.path.dirname(iwasawa.__file__)
            )
        )
    config.saved_logging = settings.LOGGING
    settings.LOGGING = copy.deepcopy(DEFAULT_LOGGING)
    iwasawa.setup()


def pytest_unconfigure(config):
    settings.LOGGING = config.saved_logging


@pytest.fixture()
def rng():
    return np.random.default_rng(20260101)


@pytest.fixture()
def small_spec():
    """Enough samples for statistical agreement, few enough to stay fast"""
    return QuadratureSpec.from_settings(sphere_samples=512, block_size=128, seed=7)


@pytest.fixture()
def test_dir(tmp_path):
    """Working directory of a command run"""
    path = tmp_path / "runs"
    path.mkdir()
    return path
