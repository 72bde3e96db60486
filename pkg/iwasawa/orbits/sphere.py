# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Spherical coordinates m = r omega on the character group N*.

The sphere carries the unnormalized surface measure of the unit sphere in
R^(p^2), of total mass 2 pi^(p^2/2) / Gamma(p^2/2).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from scipy.special import gammaln

from iwasawa.conf import settings
from iwasawa.core.exceptions import InvalidElement, ZeroVector
from iwasawa.groups.elements import SkewHermitian
from iwasawa.groups.matrices import frob_norm
from iwasawa.orbits.basis import from_coordinates, skew_basis


@dataclass(frozen=True, eq=False)
class SphereDirection:
    """A unit vector omega of N*"""

    omega: SkewHermitian

    def __post_init__(self) -> None:
        norm = frob_norm(self.omega)
        if abs(norm - 1.0) > settings.SPHERE_TOLERANCE:
            raise InvalidElement(
                "Sphere direction has norm {!r}, expected 1".format(norm)
            )

    @property
    def dim(self) -> int:
        return self.omega.dim

    @property
    def mat(self) -> np.ndarray:
        return self.omega.mat


def polar_decompose(m: SkewHermitian) -> Tuple[float, SphereDirection]:
    """Split m into r = |m| and omega = m / r"""
    r = frob_norm(m)
    if r == 0.0:
        raise ZeroVector("m = 0 has no direction")
    return r, SphereDirection(SkewHermitian(m.mat / r))


def sample_directions(p: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """
    A (count, p, p) stack of uniform unit directions: standard Gaussian
    coordinates on the skew basis, normalized.
    """
    basis = skew_basis(p)
    x = rng.standard_normal((count, len(basis)))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    return from_coordinates(x, basis)


def sphere_sample(p: int, rng: np.random.Generator) -> SphereDirection:
    return SphereDirection(SkewHermitian(sample_directions(p, 1, rng)[0]))


def sphere_mass(p: int) -> float:
    """Surface area of the unit sphere of N*, a space of real dimension p^2"""
    if p == 1:
        # S^0 is two points
        return 2.0
    k = p * p
    return float(np.exp(np.log(2.0) + 0.5 * k * np.log(np.pi) - gammaln(0.5 * k)))
