# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Monte Carlo integration over the unit sphere of N*.

Integrands are vectorized: they receive a (k, p, p) stack of unit directions
and return k real values, or a pair (values, errors) when the integrand is
itself a numerical integral.
"""
import logging

from typing import Callable, Tuple, Union

import numpy as np

from iwasawa.core.exceptions import NonFiniteSample
from iwasawa.orbits.sphere import sample_directions, sphere_mass
from iwasawa.quadrature.spec import Estimate, QuadratureSpec
from iwasawa.quadrature.streams import map_blocks

logger = logging.getLogger(__name__)

SphereIntegrand = Callable[
    [np.ndarray], Union[np.ndarray, Tuple[np.ndarray, np.ndarray]]
]


def block_directions(
    p: int, rng: np.random.Generator, count: int, block_size: int
) -> np.ndarray:
    """The first count directions of a block of block_size"""
    return sample_directions(p, block_size, rng)[:count]


def sphere_map(
    h: SphereIntegrand, p: int, spec: QuadratureSpec, with_error: bool = False
):
    """
    Evaluate h on the sample directions of spec, in sample order. With
    with_error, returns the concatenated (values, errors).
    """

    def evaluate(rng, count):
        omegas = block_directions(p, rng, count, spec.block_size)
        result = h(omegas)
        if with_error:
            values, errors = result
            return _checked(values, omegas), np.asarray(errors, dtype=float)
        return _checked(result, omegas), None

    blocks = map_blocks(evaluate, spec.sphere_samples, spec.seed, spec.block_size)
    values = np.concatenate([v for v, _ in blocks])
    if with_error:
        return values, np.concatenate([e for _, e in blocks])
    return values


def _checked(values, omegas: np.ndarray) -> np.ndarray:
    values = np.broadcast_to(np.asarray(values, dtype=float), omegas.shape[:1])
    bad = ~np.isfinite(values)
    if np.any(bad):
        index = int(np.argmax(bad))
        raise NonFiniteSample(
            "Integrand returned {!r} at a sampled direction".format(values[index]),
            direction=omegas[index],
        )
    return values


def sphere_integral(
    h: SphereIntegrand, p: int, spec: QuadratureSpec, with_error: bool = False
) -> Estimate:
    """
    Integral of h over the sphere: sample mean times the sphere mass, with
    the standard error of the mean. With with_error, h also returns per
    direction error bounds, whose mean enters quadrature_error.
    """
    mass = sphere_mass(p)
    if with_error:
        values, errors = sphere_map(h, p, spec, with_error=True)
        quadrature_error = mass * float(np.mean(errors))
    else:
        values = sphere_map(h, p, spec)
        quadrature_error = 0.0
    n = values.size
    mean = float(np.mean(values))
    std_error = float(np.std(values, ddof=1) / np.sqrt(n)) if n > 1 else 0.0
    logger.debug("Sphere integral p=%d over %d samples: mean %.6g", p, n, mean)
    return Estimate(mass * mean, mass * std_error, n, quadrature_error)
