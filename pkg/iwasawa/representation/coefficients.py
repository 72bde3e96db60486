# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Coefficients of T_a(s0) against the measure on N*, and the unitarity and
boundedness analysis built on them.

With the Jacobian d(s* m s) = theta(s)^(2p) dm,

    b(m, s0) = a(s0* m s0) / a(m) * theta(s0)^-p
    c(m, s0) = a(m) / a(s0*^-1 m s0^-1) * theta(s0)^-p

and ||T_a(s0) f||^2 = int |f(m) c(m, s0)|^2 dm. Both are homogeneous of
degree 0 in m when a is.
"""
from dataclasses import dataclass
from typing import Any, Dict, Union

import numpy as np

from iwasawa.conf import settings
from iwasawa.groups.elements import TriangularS, theta
from iwasawa.groups.matrices import asmatrix, congruence
from iwasawa.quadrature.spec import QuadratureSpec
from iwasawa.quadrature.sphere import sphere_map
from iwasawa.representation.multiplier import Multiplier


def coefficient_b(
    m: Any, s0: TriangularS, a: Multiplier
) -> Union[float, np.ndarray]:
    return a.ratio(s0, m) * theta(s0) ** -s0.dim


def coefficient_c(
    m: Any, s0: TriangularS, a: Multiplier
) -> Union[float, np.ndarray]:
    return theta(s0) ** -s0.dim / a.ratio(s0.inv(), m)


@dataclass(frozen=True)
class CoefficientRelation:
    # max |c(m, s0) - b(s0*^-1 m s0^-1, s0)|
    relation_residual: float
    # max |b(m, s0) - c(m, s0)|
    max_difference: float

    def as_dict(self) -> Dict[str, Any]:
        return {
            "relation_residual": self.relation_residual,
            "max_difference": self.max_difference,
        }


def coefficient_relation(
    s0: TriangularS, a: Multiplier, directions: np.ndarray
) -> CoefficientRelation:
    """Compare b and c on a stack of directions"""
    directions = asmatrix(directions)
    b = coefficient_b(directions, s0, a)
    c = coefficient_c(directions, s0, a)
    pulled = congruence(s0.inv(), directions)
    return CoefficientRelation(
        relation_residual=float(np.max(np.abs(c - coefficient_b(pulled, s0, a)))),
        max_difference=float(np.max(np.abs(b - c))),
    )


@dataclass(frozen=True)
class UnitarityReport:
    is_unitary: bool
    is_bounded: bool
    c_min: float
    c_max: float
    c_std: float
    samples: int

    def as_dict(self) -> Dict[str, Any]:
        return {
            "is_unitary": self.is_unitary,
            "is_bounded": self.is_bounded,
            "c_min": self.c_min,
            "c_max": self.c_max,
            "c_std": self.c_std,
            "samples": self.samples,
        }


def sampled_c(s0: TriangularS, a: Multiplier, spec: QuadratureSpec) -> np.ndarray:
    """c(w, s0) on the sample directions of spec"""
    return sphere_map(lambda omegas: coefficient_c(omegas, s0, a), s0.dim, spec)


def unitarity_report(
    s0: TriangularS, a: Multiplier, spec: QuadratureSpec
) -> UnitarityReport:
    """
    T_a(s0) is unitary iff c = 1 identically and bounded iff c is bounded.
    Both are decided on the sample directions of spec: unitary when max |c - 1|
    is below UNITARITY_TOLERANCE, bounded when every c is finite and max c is
    below BOUNDEDNESS_LIMIT.
    """
    c = sampled_c(s0, a, spec)
    c_max = float(np.max(c))
    bounded = bool(np.all(np.isfinite(c))) and c_max < settings.BOUNDEDNESS_LIMIT
    return UnitarityReport(
        is_unitary=bool(np.max(np.abs(c - 1.0)) < settings.UNITARITY_TOLERANCE),
        is_bounded=bounded,
        c_min=float(np.min(c)),
        c_max=c_max,
        c_std=float(np.std(c)),
        samples=int(c.size),
    )


def operator_norm_estimate(
    s0: TriangularS, a: Multiplier, spec: QuadratureSpec
) -> float:
    """
    max of c over the sample directions: a lower bound of ||T_a(s0)|| that
    increases with the sample count, since larger sample sets extend smaller
    ones.
    """
    return float(np.max(sampled_c(s0, a, spec)))
