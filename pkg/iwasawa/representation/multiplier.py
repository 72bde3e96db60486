# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Union

import numpy as np

from iwasawa.groups.matrices import asmatrix, congruence, frob_norm


@dataclass(frozen=True)
class Multiplier:
    """The homogeneous multiplier a(m) = |m|^q"""

    q: float

    @classmethod
    def distinguished(cls, p: int) -> Multiplier:
        """q = p^2/2, the exponent that makes beta a cocycle of finite norm"""
        return cls(p * p / 2)

    def __call__(self, m: Any) -> Union[float, np.ndarray]:
        return frob_norm(m) ** self.q

    def ratio(self, s: Any, m: Any) -> Union[float, np.ndarray]:
        """a(s* m s) / a(m), which only depends on the direction of m"""
        m = asmatrix(m)
        return (frob_norm(congruence(s, m)) / frob_norm(m)) ** self.q

    def is_distinguished(self, p: int) -> bool:
        return bool(np.isclose(self.q, p * p / 2, rtol=0.0, atol=1e-12))
