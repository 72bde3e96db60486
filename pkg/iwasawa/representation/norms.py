# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
L^2 norms over N* in spherical coordinates, dm = r^(p^2 - 1) dr dw.
"""
import logging
import math

from typing import Optional

import numpy as np

from iwasawa.quadrature.radial import radial_integral_vec
from iwasawa.quadrature.spec import Estimate, QuadratureSpec
from iwasawa.quadrature.sphere import sphere_integral
from iwasawa.representation.functions import OrbitFunction

logger = logging.getLogger(__name__)


def norm_squared(
    f: OrbitFunction,
    spec: QuadratureSpec,
    lower: Optional[float] = None,
    upper: Optional[float] = None,
) -> Estimate:
    """
    Estimate of int_W int_lower^upper |f(r w)|^2 r^(p^2 - 1) dr dw.

    Each block of sample directions shares one vector-valued radial rule in
    log r. lower defaults to spec.delta_min and upper to
    spec.r_max / min(1, f.decay), where the discarded tail is bounded
    analytically and added to quadrature_error.
    """
    k = f.p * f.p
    lower = spec.delta_min if lower is None else lower
    upper = spec.r_max / min(1.0, f.decay) if upper is None else upper
    evaluator = f.evaluator

    def radial(omegas: np.ndarray):
        def integrand(r: float) -> np.ndarray:
            return np.abs(evaluator(r * omegas)) ** 2 * r ** (k - 1)

        values, error = radial_integral_vec(
            integrand, lower, upper, spec.radial_rule, log_scale=True
        )
        tail = 0.0
        if math.isfinite(f.decay):
            # A e^(-kR) / (kR) with A = g(R) R e^(kR)
            tail = float(np.max(integrand(upper))) / f.decay
        return values, np.full(values.shape, error + tail)

    logger.debug("Norm of %s over [%g, %g]", f.describe(), lower, upper)
    return sphere_integral(radial, f.p, spec, with_error=True)
