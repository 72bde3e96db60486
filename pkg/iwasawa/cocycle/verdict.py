# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Aggregate check that beta is a special cocycle of a bounded representation.

The evidence per group element is: closed form and direct quadrature agree
on a finite ||beta(g)||^2, and the cocycle identity holds pointwise. Globally
||f0|| must diverge (otherwise beta is a coboundary), and T_a(s0) must be
unitary for p = 1 and bounded but not unitary for p > 1.
"""
import enum
import logging

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from iwasawa.cocycle.norms import (
    beta_n_norm_closed,
    beta_norm_direct,
    beta_s_norm_closed,
    f0_divergence,
)
from iwasawa.cocycle.vectors import SpecialVector, cocycle_identity_residual
from iwasawa.conf import settings
from iwasawa.core.exceptions import NoConvergence, NonFiniteSample
from iwasawa.groups.elements import GroupElementP, SkewHermitian, TriangularS
from iwasawa.groups.sampling import probe_points
from iwasawa.orbits.sphere import sphere_mass
from iwasawa.quadrature.divergence import geometric_grid
from iwasawa.quadrature.spec import DivergenceFit, Estimate, QuadratureSpec
from iwasawa.representation.coefficients import (
    CoefficientRelation,
    UnitarityReport,
    coefficient_relation,
    unitarity_report,
)
from iwasawa.representation.multiplier import Multiplier

logger = logging.getLogger(__name__)

SPECIAL_UNITARY = "SPECIAL, UNITARY"
SPECIAL_BOUNDED_NONUNITARY = "SPECIAL, BOUNDED, NONUNITARY"
SPECIAL_UNBOUNDED = "SPECIAL, UNBOUNDED"
INCONCLUSIVE = "INCONCLUSIVE: widen budget"
NOT_SPECIAL = "NOT SPECIAL"


class Verdict(enum.Enum):
    SPECIAL_COCYCLE = "SpecialCocycle"
    DIVERGENT = "Divergent"
    COBOUNDARY_LIKE = "Coboundary-like"
    # checks ran but disagreed
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CocycleReport:
    element_id: str
    kind: str
    group_element: GroupElementP
    norm_closed: Estimate
    norm_direct: Optional[Estimate]
    identity_residual: float
    agree: bool
    verdict: Verdict
    unitarity: Optional[UnitarityReport] = None
    coefficients: Optional[CoefficientRelation] = None

    @property
    def operator_norm(self) -> Optional[float]:
        return None if self.unitarity is None else self.unitarity.c_max

    def as_dict(self) -> Dict[str, Any]:
        return {
            "element_id": self.element_id,
            "kind": self.kind,
            "group_element": self.group_element,
            "norm_closed": self.norm_closed,
            "norm_direct": self.norm_direct,
            "identity_residual": self.identity_residual,
            "agree": self.agree,
            "verdict": self.verdict.value,
            "unitarity": self.unitarity,
            "operator_norm": self.operator_norm,
            "coefficients": self.coefficients,
        }

    def as_row(self, q: float) -> Dict[str, Any]:
        """The CSV row of the element"""
        direct = self.norm_direct
        return {
            "p": self.group_element.dim,
            "element_id": self.element_id,
            "kind": self.kind,
            "q": q,
            "norm_closed": self.norm_closed.value,
            "se_closed": self.norm_closed.std_error,
            "norm_direct": None if direct is None else direct.value,
            "se_direct": None if direct is None else direct.std_error,
            "agree": self.agree,
            "unitary": None if self.unitarity is None else self.unitarity.is_unitary,
            "opnorm": self.operator_norm,
            "verdict": self.verdict.value,
        }


@dataclass(frozen=True)
class VerdictSummary:
    p: int
    label: str
    expected: str
    special: bool
    unitary: bool
    bounded: bool
    reasons: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.label == self.expected

    def as_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "label": self.label,
            "expected": self.expected,
            "passed": self.passed,
            "special": self.special,
            "unitary": self.unitary,
            "bounded": self.bounded,
            "reasons": list(self.reasons),
        }


@dataclass(frozen=True)
class VerdictReport:
    summary: VerdictSummary
    f0_fit: DivergenceFit
    sphere_mass: float
    f0_divergent: bool
    reports: List[CocycleReport] = field(default_factory=list)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "summary": self.summary,
            "f0_fit": self.f0_fit,
            "f0_divergent": self.f0_divergent,
            "sphere_mass": self.sphere_mass,
            "elements": self.reports,
        }


def expected_label(p: int) -> str:
    return SPECIAL_UNITARY if p == 1 else SPECIAL_BOUNDED_NONUNITARY


def element_report(
    element_id: str,
    kind: str,
    g: GroupElementP,
    partner: GroupElementP,
    a: Multiplier,
    f0: SpecialVector,
    probes: np.ndarray,
    spec: QuadratureSpec,
) -> CocycleReport:
    """
    Closed and direct norms, identity residual and verdict for g = (e, n)
    (kind "n") or g = (s0, 0) (kind "s")
    """
    thresholds = settings.VERDICT
    closed = (
        beta_n_norm_closed(g.n, spec) if kind == "n" else beta_s_norm_closed(g.s, spec)
    )
    try:
        direct = beta_norm_direct(g, a, f0, spec)
    except (NoConvergence, NonFiniteSample) as e:
        logger.info("%s: direct norm failed: %s", element_id, e)
        direct = None
    residual = cocycle_identity_residual(g, partner, a, f0, probes)
    agree = direct is not None and closed.agrees_with(
        direct, thresholds["AGREEMENT_SIGMAS"]
    )
    if f0.in_hilbert_space:
        verdict = Verdict.COBOUNDARY_LIKE
    elif direct is None or not direct.is_finite:
        verdict = Verdict.DIVERGENT
    elif agree and residual < thresholds["IDENTITY_RESIDUAL"]:
        verdict = Verdict.SPECIAL_COCYCLE
    else:
        verdict = Verdict.INCONCLUSIVE
    unitarity = coefficients = None
    if kind == "s":
        unitarity = unitarity_report(g.s, a, spec)
        coefficients = coefficient_relation(g.s, a, probes)
    logger.info("%s: %s", element_id, verdict.value)
    return CocycleReport(
        element_id=element_id,
        kind=kind,
        group_element=g,
        norm_closed=closed,
        norm_direct=direct,
        identity_residual=residual,
        agree=agree,
        verdict=verdict,
        unitarity=unitarity,
        coefficients=coefficients,
    )


def special_cocycle_verdict(
    p: int,
    s0_samples: Sequence[TriangularS],
    n_samples: Sequence[SkewHermitian],
    spec: QuadratureSpec,
    probes: Optional[np.ndarray] = None,
    delta_grid: Optional[Sequence[float]] = None,
) -> VerdictReport:
    """
    Run every check for the distinguished multiplier q = p^2/2 and
    f0(m) = e^(-|m|) / |m|^(p^2/2), and summarize.
    """
    thresholds = settings.VERDICT
    a = Multiplier.distinguished(p)
    f0 = SpecialVector(p)
    mass = sphere_mass(p)
    if probes is None:
        rng = np.random.default_rng(spec.seed)
        probes = probe_points(p, thresholds["PROBE_POINTS"], rng)
    delta_grid = geometric_grid() if delta_grid is None else delta_grid

    logger.info("Fitting the divergence of ||f0|| for p=%d", p)
    fit = f0_divergence(p, f0, delta_grid, spec)
    f0_divergent = (
        fit.is_divergent(thresholds["F0_FIT_R_SQUARED"], thresholds["SLOPE_ATOL"])
        and abs(fit.slope - mass) <= thresholds["F0_SLOPE_RTOL"] * mass
    )

    elements = [
        ("n{}".format(i), "n", GroupElementP.from_n(n))
        for i, n in enumerate(n_samples)
    ]
    elements += [
        ("s{}".format(i), "s", GroupElementP.from_s(s))
        for i, s in enumerate(s0_samples)
    ]
    reports = []
    for index, (element_id, kind, g) in enumerate(elements):
        # the identity is checked against the next element
        partner = elements[(index + 1) % len(elements)][2]
        reports.append(
            element_report(element_id, kind, g, partner, a, f0, probes, spec)
        )

    reasons = []
    if not f0_divergent:
        reasons.append(
            "||f0|| divergence not detected: slope {:.6g} (sphere mass {:.6g}), "
            "r^2 {:.6g}".format(fit.slope, mass, fit.r_squared)
        )
    for report in reports:
        if report.verdict is not Verdict.SPECIAL_COCYCLE:
            reasons.append(
                "{}: {} (agree={}, identity residual {:.3e})".format(
                    report.element_id,
                    report.verdict.value,
                    report.agree,
                    report.identity_residual,
                )
            )
    special = f0_divergent and bool(reports) and not reasons
    unitarities = [r.unitarity for r in reports if r.unitarity is not None]
    unitary = bool(unitarities) and all(u.is_unitary for u in unitarities)
    bounded = bool(unitarities) and all(u.is_bounded for u in unitarities)
    if not unitarities:
        reasons.append("no element of S: unitarity of T_a(s0) not tested")

    inconclusive = (
        not unitarities
        or spec.sphere_samples < thresholds["MIN_CONCLUSIVE_SAMPLES"]
        or any(
            r.norm_closed.relative_error > thresholds["INCONCLUSIVE_RELATIVE_ERROR"]
            for r in reports
        )
    )
    if special and unitarities:
        if unitary:
            label = SPECIAL_UNITARY
        else:
            label = SPECIAL_BOUNDED_NONUNITARY if bounded else SPECIAL_UNBOUNDED
    elif inconclusive:
        label = INCONCLUSIVE
    else:
        label = NOT_SPECIAL
    summary = VerdictSummary(
        p=p,
        label=label,
        expected=expected_label(p),
        special=special,
        unitary=unitary,
        bounded=bounded,
        reasons=tuple(reasons),
    )
    logger.info("Verdict for p=%d: %s", p, label)
    return VerdictReport(
        summary=summary,
        f0_fit=fit,
        sphere_mass=mass,
        f0_divergent=f0_divergent,
        reports=reports,
    )
