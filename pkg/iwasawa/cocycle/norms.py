# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Norms of the cocycle, in closed form and by direct quadrature.

In spherical coordinates the radial integrals of |beta(g)|^2 reduce, via
int_0^inf (e^(-ar) - e^(-br)) / r dr = log(b / a), to sphere integrals of

    beta(n):   log(1 + Tr(n w)^2 / 4)
    beta(s0):  log((1 + l)^2 / (4 l)),  l = |s0* w s0|

for the distinguished multiplier q = p^2/2. For any other q the radial
integral of beta(s0) diverges like log(1/delta) with rate int (b(w) - 1)^2 dw,
b(w) = l^(q - p^2/2).
"""
import logging
import math

from dataclasses import dataclass
from typing import Any, Dict, Sequence

import numpy as np

from iwasawa.cocycle.vectors import SpecialVector, beta
from iwasawa.core.exceptions import PreconditionViolation
from iwasawa.groups.elements import GroupElementP, SkewHermitian, TriangularS
from iwasawa.groups.matrices import congruence, frob_norm, pairing
from iwasawa.quadrature.divergence import divergence_slope
from iwasawa.quadrature.spec import DivergenceFit, Estimate, QuadratureSpec
from iwasawa.quadrature.sphere import sphere_integral
from iwasawa.representation.coefficients import operator_norm_estimate
from iwasawa.representation.functions import OrbitFunction
from iwasawa.representation.multiplier import Multiplier
from iwasawa.representation.norms import norm_squared
from iwasawa.representation.operators import apply_group

logger = logging.getLogger(__name__)


def beta_n_norm_closed(n: SkewHermitian, spec: QuadratureSpec) -> Estimate:
    def h(omegas):
        return np.log1p(0.25 * pairing(n, omegas) ** 2)

    return sphere_integral(h, n.dim, spec)


def beta_s_norm_closed(s0: TriangularS, spec: QuadratureSpec) -> Estimate:
    def h(omegas):
        lam = frob_norm(congruence(s0, omegas))
        # log((1 + l)^2 / (4 l)) >= 0
        return 2.0 * np.log1p(lam) - np.log(4.0 * lam)

    return sphere_integral(h, s0.dim, spec)


def _check_distinguished(a: Multiplier, f0: SpecialVector) -> None:
    if not (a.is_distinguished(f0.p) and f0.is_distinguished):
        raise PreconditionViolation(
            "Direct cocycle norms need q = exponent = p^2/2 = {!r}, got q={!r}, "
            "exponent={!r}; use the divergence fits instead".format(
                f0.p * f0.p / 2, a.q, f0.exponent
            )
        )


def beta_norm_direct(
    g: GroupElementP, a: Multiplier, f0: SpecialVector, spec: QuadratureSpec
) -> Estimate:
    """||beta(g)||^2 by radial quadrature along every sampled direction"""
    _check_distinguished(a, f0)
    return norm_squared(beta(g, a, f0), spec)


def beta_norm_bound(g: GroupElementP, spec: QuadratureSpec) -> Estimate:
    """
    Bound of ||beta(g)||^2 for g = (s, n) = (s, 0)(e, n) from the closed forms:

        ||beta(g)|| <= ||beta(s)|| + ||T(s)|| ||beta(n)||

    ||T(s)|| is the sampled operator norm estimate, so the bound is itself an
    estimate.
    """
    closed_s = beta_s_norm_closed(g.s, spec)
    closed_n = beta_n_norm_closed(g.n, spec)
    opnorm = operator_norm_estimate(g.s, Multiplier.distinguished(g.dim), spec)

    def bound(vs: float, vn: float) -> float:
        return (math.sqrt(max(vs, 0.0)) + opnorm * math.sqrt(max(vn, 0.0))) ** 2

    value = bound(closed_s.value, closed_n.value)
    std_error = math.hypot(
        bound(closed_s.value + closed_s.std_error, closed_n.value) - value,
        bound(closed_s.value, closed_n.value + closed_n.std_error) - value,
    )
    return Estimate(value, std_error, closed_s.samples_used)


def truncated_beta_norm(
    g: GroupElementP,
    a: Multiplier,
    f0: SpecialVector,
    delta: float,
    spec: QuadratureSpec,
) -> Estimate:
    """||beta(g)||^2 with the radial integral cut off below r = delta"""
    return norm_squared(beta(g, a, f0), spec, lower=delta)


def truncation_fit(
    g: GroupElementP,
    a: Multiplier,
    f0: SpecialVector,
    delta_grid: Sequence[float],
    spec: QuadratureSpec,
) -> DivergenceFit:
    """Divergence rate of the truncated ||beta(g)||^2, about 0 when it converges"""
    return divergence_slope(
        lambda delta: truncated_beta_norm(g, a, f0, delta, spec).value, delta_grid
    )


def f0_divergence(
    p: int, f0: SpecialVector, delta_grid: Sequence[float], spec: QuadratureSpec
) -> DivergenceFit:
    """
    Divergence rate of int_W int_delta^inf e^(-2r) / r dr dw, which tends to
    the sphere mass.
    """
    if f0.p != p or not f0.is_distinguished:
        raise PreconditionViolation(
            "f0_divergence needs the exponent p^2/2 for p={}, got {!r}".format(
                p, f0
            )
        )
    f = f0.function()
    return divergence_slope(
        lambda delta: norm_squared(f, spec, lower=delta).value, delta_grid
    )


def multiplier_divergence(
    s0: TriangularS,
    q: float,
    f0: SpecialVector,
    delta_grid: Sequence[float],
    spec: QuadratureSpec,
) -> DivergenceFit:
    """Divergence rate of ||beta(s0)||^2 for a multiplier exponent q != p^2/2"""
    a = Multiplier(q)
    if a.is_distinguished(s0.dim):
        raise PreconditionViolation(
            "q = p^2/2 gives a convergent norm, use beta_norm_direct"
        )
    if not f0.is_distinguished:
        raise PreconditionViolation("f0 must have exponent p^2/2")
    return truncation_fit(GroupElementP.from_s(s0), a, f0, delta_grid, spec)


def multiplier_divergence_slope(
    s0: TriangularS, q: float, spec: QuadratureSpec
) -> Estimate:
    """int_W (b(w) - 1)^2 dw with b(w) = |s0* w s0|^(q - p^2/2)"""
    shift = q - s0.dim * s0.dim / 2

    def h(omegas):
        lam = frob_norm(congruence(s0, omegas))
        return (lam**shift - 1.0) ** 2

    return sphere_integral(h, s0.dim, spec)


@dataclass(frozen=True)
class CoboundaryContrast:
    norm: float
    difference_norm: float
    operator_norm: float
    bound: float
    within_bound: bool

    def as_dict(self) -> Dict[str, Any]:
        return {
            "norm": self.norm,
            "difference_norm": self.difference_norm,
            "operator_norm": self.operator_norm,
            "bound": self.bound,
            "within_bound": self.within_bound,
        }


def coboundary_contrast(
    f: OrbitFunction,
    g: GroupElementP,
    a: Multiplier,
    spec: QuadratureSpec,
    sigmas: float = 4.0,
) -> CoboundaryContrast:
    """
    For f of finite norm the coboundary T(g) f - f is bounded by
    (||T(g)|| + 1) ||f||. The comparison allows `sigmas` standard errors of
    both norm estimates.
    """
    own = norm_squared(f, spec)
    difference = norm_squared(apply_group(g, a, f) - f, spec)
    opnorm = operator_norm_estimate(g.s, a, spec)
    norm = math.sqrt(own.value)
    difference_norm = math.sqrt(difference.value)
    bound = (opnorm + 1.0) * norm
    # standard errors of the square roots
    slack = sigmas * (
        difference.std_error / (2 * difference_norm or 1.0)
        + (opnorm + 1.0) * own.std_error / (2 * norm or 1.0)
    )
    logger.debug(
        "Coboundary of %s: %.6g <= %.6g + %.2g",
        f.describe(),
        difference_norm,
        bound,
        slack,
    )
    return CoboundaryContrast(
        norm=norm,
        difference_norm=difference_norm,
        operator_norm=opnorm,
        bound=bound,
        within_bound=difference_norm <= bound + slack,
    )
