# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Adaptive one-dimensional quadrature along the radius r = |m|.

Integrands near r = 0 behave like powers or logarithms of r, so the rules
can integrate in u = log r instead, where f(r) dr = f(e^u) e^u du.
"""
import logging
import math

from typing import Callable, Optional, Tuple, Union

import numpy as np

from scipy.integrate import quad, quad_vec

from iwasawa.conf import settings
from iwasawa.core.exceptions import NoConvergence, PreconditionViolation
from iwasawa.quadrature.spec import RadialRule

logger = logging.getLogger(__name__)


def _substituted(f: Callable, log_scale: bool) -> Callable:
    if not log_scale:
        return f

    def g(u):
        r = math.exp(u)
        return f(r) * r

    return g


def _limits(lower: float, upper: float, log_scale: bool) -> Tuple[float, float]:
    if not log_scale:
        return lower, upper
    if lower <= 0:
        raise PreconditionViolation("log-scale radial integrals need lower > 0")
    return math.log(lower), (math.inf if math.isinf(upper) else math.log(upper))


def radial_integral(
    f: Callable[[float], float],
    lower: float,
    upper: float,
    rule: RadialRule,
    log_scale: bool = False,
    full_output: bool = False,
) -> Union[float, Tuple[float, float]]:
    """
    int_lower^upper f(r) dr by adaptive Gauss-Kronrod quadrature. With
    full_output, returns (value, absolute error estimate).
    """
    if lower == upper:
        return (0.0, 0.0) if full_output else 0.0
    a, b = _limits(lower, upper, log_scale)
    result = quad(
        _substituted(f, log_scale),
        a,
        b,
        epsabs=rule.epsabs,
        epsrel=rule.epsrel,
        limit=rule.limit,
        full_output=1,
    )
    # quad appends a message only when it did not converge
    if len(result) > 3:
        raise NoConvergence(
            "Radial quadrature on [{}, {}] failed: {}".format(lower, upper, result[3])
        )
    value, error = result[0], result[1]
    return (value, error) if full_output else value


def radial_integral_vec(
    f: Callable[[float], np.ndarray],
    lower: float,
    upper: float,
    rule: RadialRule,
    log_scale: bool = False,
) -> Tuple[np.ndarray, float]:
    """
    Vector-valued version of radial_integral: f(r) returns one value per
    sphere direction and all components share the subdivision. Returns the
    values and the max-norm error estimate.
    """
    a, b = _limits(lower, upper, log_scale)
    g = _substituted(f, log_scale)
    values, error, info = quad_vec(
        g,
        a,
        b,
        epsabs=rule.epsabs,
        epsrel=rule.epsrel,
        limit=rule.limit,
        norm="max",
        full_output=True,
    )
    if info.status != 0:
        logger.debug("quad_vec stopped with status %d", info.status)
        raise NoConvergence(
            "Radial quadrature on [{}, {}] failed: {}".format(
                lower, upper, info.message
            )
        )
    return np.asarray(values, dtype=float), float(error)


def exponential_tail_bound(amplitude: float, rate: float, upper: float) -> float:
    """Bound of int_R^inf A e^(-c r) / r dr by A e^(-c R) / (c R)"""
    if rate <= 0 or upper <= 0:
        raise PreconditionViolation("The tail bound needs rate > 0 and upper > 0")
    return amplitude * math.exp(-rate * upper) / (rate * upper)


def frullani_check(
    a: float, b: float, rule: Optional[RadialRule] = None
) -> Tuple[float, float]:
    """
    Compare int_0^inf (e^(-ar) - e^(-br)) / r dr by quadrature with log(b/a).

    The integrand extends continuously to b - a at r = 0. The integral is
    truncated where e^(-min(a, b) r) drops below e^(-R_MAX).
    """
    if a <= 0 or b <= 0:
        raise PreconditionViolation("Frullani integrals need a, b > 0")
    rule = rule or RadialRule()
    closed = math.log(b / a)
    if a == b:
        return 0.0, closed

    rate, gap = min(a, b), abs(b - a)
    sign = 1.0 if b > a else -1.0

    def integrand(r: float) -> float:
        if r == 0.0:
            return b - a
        # e^(-ar) - e^(-br) without cancellation or overflow
        return -sign * math.exp(-rate * r) * math.expm1(-gap * r) / r

    # |integrand| <= e^(-min(a, b) r) / r beyond the truncation point
    upper = settings.QUADRATURE["R_MAX"] / rate
    numeric, error = radial_integral(integrand, 0.0, upper, rule, full_output=True)
    logger.debug(
        "Frullani a=%g b=%g: quadrature error %.2e, tail %.2e",
        a,
        b,
        error,
        exponential_tail_bound(1.0, rate, upper),
    )
    return numeric, closed
