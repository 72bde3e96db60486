# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
The special vector f0(m) = e^(-|m|) / |m|^e and the cocycle
beta(g) = T(g) f0 - f0.

For e = p^2/2, f0 is not square integrable near m = 0 but every beta(g) is:
the difference vanishes at r = 0 fast enough to cancel the singularity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from iwasawa.core.exceptions import InvalidElement
from iwasawa.groups.elements import GroupElementP
from iwasawa.groups.matrices import asmatrix
from iwasawa.groups.sampling import probe_points
from iwasawa.representation.functions import OrbitFunction, radial_profile
from iwasawa.representation.multiplier import Multiplier
from iwasawa.representation.operators import apply_group

__all__ = [
    "SpecialVector",
    "beta",
    "cocycle_identity_residual",
    "probe_points",
]


@dataclass(frozen=True)
class SpecialVector:
    p: int
    exponent: Optional[float] = None

    def __post_init__(self) -> None:
        if self.exponent is None:
            object.__setattr__(self, "exponent", self.p * self.p / 2)
        if not self.exponent > 0:
            raise InvalidElement(
                "The exponent of f0 must be > 0, got {!r}".format(self.exponent)
            )

    @property
    def is_distinguished(self) -> bool:
        return bool(
            np.isclose(self.exponent, self.p * self.p / 2, rtol=0.0, atol=1e-12)
        )

    @property
    def in_hilbert_space(self) -> bool:
        """|f0|^2 r^(p^2-1) is integrable at 0 iff 2e < p^2"""
        return 2 * self.exponent < self.p * self.p and not self.is_distinguished

    def function(self) -> OrbitFunction:
        exponent = self.exponent
        return radial_profile(
            self.p,
            lambda r: np.exp(-r) / r**exponent,
            "f0(exponent={!r})".format(exponent),
            2.0,
        )


def beta(g: GroupElementP, a: Multiplier, f0: SpecialVector) -> OrbitFunction:
    """beta(g) = T(g) f0 - f0, evaluated pointwise"""
    base = f0.function()
    return apply_group(g, a, base) - base


def cocycle_identity_residual(
    g1: GroupElementP,
    g2: GroupElementP,
    a: Multiplier,
    f0: SpecialVector,
    probes: np.ndarray,
) -> float:
    """
    max over probes of |beta(g1 g2) - beta(g1) - T(g1) beta(g2)|, relative to
    1 + the largest of the three terms
    """
    probes = asmatrix(probes)
    whole = beta(g1 @ g2, a, f0)(probes)
    first = beta(g1, a, f0)(probes)
    moved = apply_group(g1, a, beta(g2, a, f0))(probes)
    scale = 1.0 + np.maximum(np.abs(whole), np.maximum(np.abs(first), np.abs(moved)))
    return float(np.max(np.abs(whole - first - moved) / scale))
