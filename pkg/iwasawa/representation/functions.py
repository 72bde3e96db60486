# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Lazily evaluated functions on N*.

An OrbitFunction wraps a vectorized evaluator: it maps a (k, p, p) stack of
skew-Hermitian matrices to k complex values. Operators build new functions
by composing evaluators, nothing is ever tabulated.
"""
from __future__ import annotations

import math

from dataclasses import dataclass
from typing import Any, Callable, Optional, Tuple, Union

import numpy as np

from iwasawa.core.exceptions import DimensionMismatch
from iwasawa.groups.matrices import asmatrix, frob_norm

Evaluator = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class OrbitFunction:
    """
    A function f on N*. `decay` is a rate k such that |f(r w)|^2 decays at
    least like exp(-k r) along every ray; the radial rules use it to place
    their truncation point.
    """

    p: int
    evaluator: Evaluator
    provenance: Tuple[str, ...]
    decay: float = math.inf

    def __call__(self, m: Any) -> Union[complex, np.ndarray]:
        m = asmatrix(m)
        if m.shape[-1] != self.p or m.shape[-2] != self.p:
            raise DimensionMismatch(
                "{} is defined for p={}, got shape {}".format(
                    self.describe(), self.p, m.shape
                )
            )
        if m.ndim == 2:
            return complex(self.evaluator(m[np.newaxis])[0])
        return self.evaluator(m)

    def expect_dim(self, p: int) -> None:
        if p != self.p:
            raise DimensionMismatch(
                "{} is defined for p={}, got an operator with p={}".format(
                    self.describe(), self.p, p
                )
            )

    def describe(self) -> str:
        return " . ".join(reversed(self.provenance))

    def derive(
        self, evaluator: Evaluator, step: str, decay: Optional[float] = None
    ) -> OrbitFunction:
        """A new function recording one more applied operator"""
        return OrbitFunction(
            self.p,
            evaluator,
            self.provenance + (step,),
            self.decay if decay is None else decay,
        )

    def __sub__(self, other: OrbitFunction) -> OrbitFunction:
        if other.p != self.p:
            raise DimensionMismatch(
                "Cannot subtract functions with p={} and p={}".format(self.p, other.p)
            )
        first, second = self.evaluator, other.evaluator
        return OrbitFunction(
            self.p,
            lambda m: first(m) - second(m),
            ("({}) - ({})".format(self.describe(), other.describe()),),
            min(self.decay, other.decay),
        )

    def __add__(self, other: OrbitFunction) -> OrbitFunction:
        if other.p != self.p:
            raise DimensionMismatch(
                "Cannot add functions with p={} and p={}".format(self.p, other.p)
            )
        first, second = self.evaluator, other.evaluator
        return OrbitFunction(
            self.p,
            lambda m: first(m) + second(m),
            ("({}) + ({})".format(self.describe(), other.describe()),),
            min(self.decay, other.decay),
        )

    def restricted(self) -> OrbitFunction:
        """f times the indicator of the principal orbit {i s*s}"""
        evaluator = self.evaluator

        def inside(m):
            # -i m positive definite
            principal = np.linalg.eigvalsh(-1j * m)[..., 0] > 0
            return np.where(principal, evaluator(m), 0.0)

        return self.derive(inside, "1_N0")


def radial_profile(
    p: int, profile: Callable[[np.ndarray], np.ndarray], name: str, decay: float
) -> OrbitFunction:
    """The function m -> profile(|m|)"""
    return OrbitFunction(
        p,
        lambda m: profile(frob_norm(m)).astype(complex),
        (name,),
        decay,
    )


def gaussian(p: int, width: float = 1.0) -> OrbitFunction:
    """exp(-|m|^2 / (2 width^2)), a vector of finite norm"""
    return radial_profile(
        p,
        lambda r: np.exp(-0.5 * (np.asarray(r) / width) ** 2),
        "gaussian(width={!r})".format(width),
        1.0 / width**2,
    )


def zero(p: int) -> OrbitFunction:
    return OrbitFunction(p, lambda m: np.zeros(m.shape[:-2], dtype=complex), ("0",))
