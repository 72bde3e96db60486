import logging

from argparse import ArgumentParser
from typing import Any, Dict, List, Optional

import numpy as np

from iwasawa.cocycle.norms import beta_norm_bound, beta_norm_direct
from iwasawa.cocycle.vectors import SpecialVector
from iwasawa.cocycle.verdict import CocycleReport, element_report
from iwasawa.conf import settings
from iwasawa.core.exceptions import NoConvergence, NonFiniteSample
from iwasawa.core.management.base import (
    CommandReport,
    ConfigError,
    ExperimentCommand,
    RunConfig,
)
from iwasawa.groups.elements import GroupElementP
from iwasawa.groups.sampling import probe_points
from iwasawa.quadrature.spec import Estimate, QuadratureSpec
from iwasawa.reports.runconfig import element_list, resolve_n, resolve_p, resolve_s
from iwasawa.representation.multiplier import Multiplier

logger = logging.getLogger(__name__)

ELEMENT_FIELDS = ("n_elements", "s_elements", "p_elements")


def bound_check(
    element_id: str, g: GroupElementP, f0: SpecialVector, spec: QuadratureSpec
) -> Dict[str, Any]:
    """
    A general (s, n) has no closed form, only the bound
    ||beta(s)|| + ||T(s)|| ||beta(n)||. "agree" means the direct norm is
    below it.
    """
    bound = beta_norm_bound(g, spec)
    direct: Optional[Estimate]
    try:
        direct = beta_norm_direct(g, Multiplier.distinguished(g.dim), f0, spec)
    except (NoConvergence, NonFiniteSample) as e:
        logger.info("%s: direct norm failed: %s", element_id, e)
        direct = None
    sigmas = settings.VERDICT["AGREEMENT_SIGMAS"]
    within = direct is not None and (
        direct.value
        <= bound.value + sigmas * bound.combined_error(direct) + direct.quadrature_error
    )
    return {
        "element_id": element_id,
        "kind": "p",
        "group_element": g,
        "norm_bound": bound,
        "norm_direct": direct,
        "agree": within,
    }


class CocycleNormCommand(ExperimentCommand):
    help: str = (
        "Compute ||beta(g)||^2 in closed form and by direct quadrature for "
        "elements of N, S and P, and test that they agree"
    )
    config_fields = ELEMENT_FIELDS

    def add_arguments(self, parser: ArgumentParser) -> None:
        for name, what in zip(ELEMENT_FIELDS, ("N", "S", "P")):
            parser.add_argument(
                "--{}".format(name.replace("_", "-")),
                dest=name,
                type=element_list,
                help="Elements of {}: JSON list or random:count:seed".format(what),
            )

    def handle(self, config: RunConfig) -> CommandReport:
        p = config.p
        if not any(config.get(name) for name in ELEMENT_FIELDS):
            raise ConfigError(
                "{} needs at least one of {}".format(
                    self.name, ", ".join(ELEMENT_FIELDS)
                )
            )
        spec = config.quadrature_spec()
        a = Multiplier.distinguished(p)
        f0 = SpecialVector(p)
        rng = np.random.default_rng(spec.seed)
        probes = probe_points(p, settings.VERDICT["PROBE_POINTS"], rng)

        elements = [
            ("n{}".format(i), "n", GroupElementP.from_n(n))
            for i, n in enumerate(resolve_n(config.get("n_elements", []), p))
        ]
        elements += [
            ("s{}".format(i), "s", GroupElementP.from_s(s))
            for i, s in enumerate(resolve_s(config.get("s_elements", []), p))
        ]
        general = resolve_p(config.get("p_elements", []), p)

        reports: List[CocycleReport] = []
        for index, (element_id, kind, g) in enumerate(elements):
            logger.info("Norm of beta(%s)", element_id)
            partner = elements[(index + 1) % len(elements)][2]
            reports.append(
                element_report(element_id, kind, g, partner, a, f0, probes, spec)
            )
        bounds = [
            bound_check("p{}".format(i), g, f0, spec) for i, g in enumerate(general)
        ]

        rows = [report.as_row(a.q) for report in reports]
        for check in bounds:
            direct = check["norm_direct"]
            rows.append(
                {
                    "p": p,
                    "element_id": check["element_id"],
                    "kind": "p",
                    "q": a.q,
                    "norm_closed": check["norm_bound"].value,
                    "se_closed": check["norm_bound"].std_error,
                    "norm_direct": None if direct is None else direct.value,
                    "se_direct": None if direct is None else direct.std_error,
                    "agree": check["agree"],
                }
            )

        disagree = [row["element_id"] for row in rows if not row["agree"]]
        return CommandReport(
            payload={
                "p": p,
                "q": a.q,
                "quadrature": spec,
                "elements": reports,
                "bounds": bounds,
            },
            rows=rows,
            checks=[
                (
                    row["element_id"],
                    row["agree"],
                    "closed={} direct={}".format(
                        _format(row["norm_closed"], row["se_closed"]),
                        _format(row["norm_direct"], row["se_direct"]),
                    ),
                )
                for row in rows
            ],
            passed=not disagree,
            failure="closed form and direct norm disagree for {}".format(
                ", ".join(disagree)
            ),
        )


def _format(value: Optional[float], std_error: Optional[float]) -> str:
    if value is None:
        return "n/a"
    return "{:.7g}+-{:.1e}".format(value, std_error)
