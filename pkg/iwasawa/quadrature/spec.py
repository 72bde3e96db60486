# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Value types of the quadrature layer.
"""
from __future__ import annotations

import math

from dataclasses import dataclass, field, replace
from typing import Any, Dict, Tuple

from iwasawa.conf import settings
from iwasawa.core.exceptions import ImproperlyConfigured, PreconditionViolation


@dataclass(frozen=True)
class RadialRule:
    """Tolerances and subdivision budget of the adaptive radial rule"""

    epsabs: float = 1e-10
    epsrel: float = 1e-9
    limit: int = 2000


@dataclass(frozen=True)
class QuadratureSpec:
    """
    Everything that determines a stochastic estimate. Two equal specs give
    bit-identical estimates whatever the number of worker threads.
    """

    sphere_samples: int
    radial_rule: RadialRule = field(default_factory=RadialRule)
    delta_min: float = 1e-12
    r_max: float = 60.0
    seed: int = 0
    block_size: int = 1024

    def __post_init__(self) -> None:
        problems = []
        if int(self.sphere_samples) < 1:
            problems.append("sphere_samples must be >= 1")
        if not 0 < self.delta_min < self.r_max:
            problems.append("truncation needs 0 < delta_min < r_max")
        if self.radial_rule.epsabs <= 0 or self.radial_rule.epsrel <= 0:
            problems.append("radial tolerances must be > 0")
        if self.radial_rule.limit < 1:
            problems.append("the radial subdivision limit must be >= 1")
        if self.block_size < 1:
            problems.append("block_size must be >= 1")
        if not 0 <= self.seed < 2**64:
            problems.append("seed must be a 64-bit unsigned integer")
        if problems:
            raise ImproperlyConfigured(
                "Invalid QuadratureSpec: {}".format("; ".join(problems))
            )

    @classmethod
    def from_settings(cls, **overrides: Any) -> QuadratureSpec:
        """
        Build the spec from settings.QUADRATURE. Keyword arguments use the
        field names of the spec and take precedence.
        """
        conf = settings.QUADRATURE
        values = {
            "sphere_samples": conf["SPHERE_SAMPLES"],
            "radial_rule": RadialRule(
                conf["RADIAL_EPSABS"], conf["RADIAL_EPSREL"], conf["RADIAL_LIMIT"]
            ),
            "delta_min": conf["DELTA_MIN"],
            "r_max": conf["R_MAX"],
            "seed": conf["SEED"],
            "block_size": conf["BLOCK_SIZE"],
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_samples(self, sphere_samples: int) -> QuadratureSpec:
        return replace(self, sphere_samples=sphere_samples)

    def with_seed(self, seed: int) -> QuadratureSpec:
        return replace(self, seed=seed)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "sphere_samples": self.sphere_samples,
            "radial_epsabs": self.radial_rule.epsabs,
            "radial_epsrel": self.radial_rule.epsrel,
            "radial_limit": self.radial_rule.limit,
            "delta_min": self.delta_min,
            "r_max": self.r_max,
            "seed": self.seed,
            "block_size": self.block_size,
        }


@dataclass(frozen=True)
class Estimate:
    """
    A Monte Carlo estimate. std_error is the sampling error, quadrature_error
    a deterministic bound on the radial quadrature and truncation error.
    """

    value: float
    std_error: float
    samples_used: int
    quadrature_error: float = 0.0

    def __post_init__(self) -> None:
        if not self.std_error >= 0:
            raise ValueError("std_error must be >= 0, got {!r}".format(self.std_error))

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value) and math.isfinite(self.std_error)

    @property
    def relative_error(self) -> float:
        if self.value == 0:
            return 0.0 if self.std_error == 0 else math.inf
        return self.std_error / abs(self.value)

    def combined_error(self, other: Estimate) -> float:
        return math.hypot(self.std_error, other.std_error)

    def agrees_with(self, other: Estimate, sigmas: float = 4.0) -> bool:
        """|a - b| <= k sqrt(se_a^2 + se_b^2) + qe_a + qe_b"""
        budget = (
            sigmas * self.combined_error(other)
            + self.quadrature_error
            + other.quadrature_error
        )
        return abs(self.value - other.value) <= budget

    def as_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "std_error": self.std_error,
            "samples_used": self.samples_used,
            "quadrature_error": self.quadrature_error,
        }


@dataclass(frozen=True)
class DivergenceFit:
    """Least-squares fit of F(delta) = slope * log(1/delta) + intercept"""

    slope: float
    intercept: float
    r_squared: float
    grid: Tuple[Tuple[float, float], ...]

    def __post_init__(self) -> None:
        grid = tuple((float(d), float(v)) for d, v in self.grid)
        if len(grid) < 4:
            raise PreconditionViolation(
                "A divergence fit needs at least 4 grid points, got {}".format(
                    len(grid)
                )
            )
        deltas = [d for d, _ in grid]
        if any(b >= a for a, b in zip(deltas, deltas[1:])):
            raise PreconditionViolation("delta grid must be strictly decreasing")
        object.__setattr__(self, "grid", grid)

    def is_divergent(self, min_r_squared: float, slope_atol: float = 0.0) -> bool:
        return self.slope > slope_atol and self.r_squared >= min_r_squared

    def as_dict(self) -> Dict[str, Any]:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "grid": [list(point) for point in self.grid],
        }
