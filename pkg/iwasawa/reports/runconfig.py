# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Run configurations: loading, schema validation and expansion of element
lists.

Element lists are either explicit matrices or the shorthand
"random:count:seed", which makes a report reproducible from its own config.
"""
import argparse
import json
import re

from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple, Union

import numpy as np

from jsonschema import Draft202012Validator

from iwasawa.conf import settings
from iwasawa.core.exceptions import ImproperlyConfigured, IwasawaError
from iwasawa.groups.elements import GroupElementP, SkewHermitian, TriangularS
from iwasawa.groups.sampling import (
    random_n,
    random_p,
    random_s,
    random_sign_vector,
)
from iwasawa.orbits.classify import SignVector, orbit_point
from iwasawa.reports.codec import decode_element, decode_matrix

RANDOM_PATTERN = re.compile(r"^random:(?P<count>[0-9]+):(?P<seed>[0-9]+)$")


def load_schema() -> Dict[str, Any]:
    path = Path(settings.RUNCONFIG_SCHEMA)
    try:
        with path.open(encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise ImproperlyConfigured(
            "Cannot read the run configuration schema at {}: {}".format(path, e)
        )


def load_runconfig(path: Union[str, Path]) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise ImproperlyConfigured("Cannot read config file {}: {}".format(path, e))
    except json.JSONDecodeError as e:
        raise ImproperlyConfigured("Config file {} is not JSON: {}".format(path, e))
    return data


def validate_runconfig(data: Any) -> Dict[str, Any]:
    """Raise ImproperlyConfigured listing every schema violation"""
    validator = Draft202012Validator(load_schema())
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        raise ImproperlyConfigured(
            "Invalid run configuration:\n{}".format(
                "\n".join(
                    "  {}: {}".format(
                        "/".join(str(part) for part in e.absolute_path) or "<root>",
                        e.message,
                    )
                    for e in errors
                )
            )
        )
    return data


def parse_random(value: str) -> Tuple[int, int]:
    match = RANDOM_PATTERN.match(value)
    if match is None:
        raise ImproperlyConfigured(
            "Expected 'random:count:seed', got {!r}".format(value)
        )
    return int(match["count"]), int(match["seed"])


def _expand(
    value: Any,
    p: int,
    make_random: Callable[[int, np.random.Generator], Any],
    decode: Callable[[Any], Any],
    what: str,
) -> List[Any]:
    try:
        if isinstance(value, str):
            count, seed = parse_random(value)
            rng = np.random.default_rng(seed)
            return [make_random(p, rng) for _ in range(count)]
        items = [decode(item) for item in value]
    except (IwasawaError, ValueError) as e:
        raise ImproperlyConfigured("Invalid {}: {}".format(what, e))
    for item in items:
        if item.dim != p:
            raise ImproperlyConfigured(
                "{} must be {}x{}, got an element with p={}".format(
                    what, p, p, item.dim
                )
            )
    return items


def resolve_n(value: Any, p: int) -> List[SkewHermitian]:
    return _expand(
        value, p, random_n, lambda m: SkewHermitian(decode_matrix(m)), "n_elements"
    )


def resolve_s(value: Any, p: int) -> List[TriangularS]:
    return _expand(
        value, p, random_s, lambda m: TriangularS(decode_matrix(m)), "s_elements"
    )


def resolve_p(value: Any, p: int) -> List[GroupElementP]:
    return _expand(value, p, random_p, decode_element, "p_elements")


def random_orbit_point(p: int, rng: np.random.Generator) -> SkewHermitian:
    """i s* diag(eps) s with random s and random signs"""
    return orbit_point(random_s(p, rng), random_sign_vector(p, rng))


def resolve_matrices(value: Any, p: int) -> List[SkewHermitian]:
    return _expand(
        value,
        p,
        random_orbit_point,
        lambda m: SkewHermitian(decode_matrix(m)),
        "matrices",
    )


def principal_orbit_point(p: int, rng: np.random.Generator) -> SkewHermitian:
    return orbit_point(random_s(p, rng), SignVector.principal(p))


def resolve_principal(value: Any, p: int) -> List[SkewHermitian]:
    """Like resolve_matrices, but random points lie in the principal orbit"""
    return _expand(
        value,
        p,
        principal_orbit_point,
        lambda m: SkewHermitian(decode_matrix(m)),
        "matrices",
    )


def element_list(value: str) -> Union[str, list]:
    """
    argparse type of the element flags: the random shorthand as is, anything
    else parsed as JSON
    """
    if RANDOM_PATTERN.match(value):
        return value
    try:
        return json.loads(value)
    except json.JSONDecodeError as e:
        raise argparse.ArgumentTypeError(
            "expected 'random:count:seed' or a JSON list, got {!r}: {}".format(
                value, e
            )
        )
