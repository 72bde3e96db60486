# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Divergence rates of truncated integrals. A truncation F(delta) of a
logarithmically divergent integral grows like slope * log(1/delta).
"""
import logging

from typing import Callable, Optional, Sequence

import numpy as np

from scipy.stats import linregress

from iwasawa.conf import settings
from iwasawa.core.exceptions import PreconditionViolation
from iwasawa.quadrature.spec import DivergenceFit

logger = logging.getLogger(__name__)


def geometric_grid(
    k_min: Optional[int] = None, k_max: Optional[int] = None
) -> np.ndarray:
    """delta = 2^-k for k = k_min..k_max"""
    default_min, default_max = settings.DIVERGENCE_GRID_EXPONENTS
    k_min = default_min if k_min is None else k_min
    k_max = default_max if k_max is None else k_max
    if k_max - k_min < 3:
        raise PreconditionViolation(
            "The grid 2^-k, k={}..{} has fewer than 4 points".format(k_min, k_max)
        )
    return 2.0 ** -np.arange(k_min, k_max + 1, dtype=float)


def divergence_slope(
    F: Callable[[float], float], delta_grid: Sequence[float]
) -> DivergenceFit:
    """Least-squares fit of F(delta) against log(1/delta) over the grid"""
    deltas = np.asarray(delta_grid, dtype=float)
    if deltas.ndim != 1 or deltas.size < 4:
        raise PreconditionViolation("delta_grid needs at least 4 points")
    if np.any(deltas <= 0) or np.any(np.diff(deltas) >= 0):
        raise PreconditionViolation(
            "delta_grid must be positive and strictly decreasing"
        )
    values = np.array([F(float(d)) for d in deltas])
    fit = linregress(np.log(1.0 / deltas), values)
    logger.debug("Divergence fit: slope %.6g, r^2 %.6g", fit.slope, fit.rvalue**2)
    return DivergenceFit(
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        r_squared=float(fit.rvalue**2),
        grid=tuple(zip(deltas.tolist(), values.tolist())),
    )
