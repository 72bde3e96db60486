import logging

from argparse import ArgumentParser

from iwasawa.conf import settings
from iwasawa.core.exceptions import NotInPrincipalOrbit
from iwasawa.core.management.base import (
    CommandReport,
    ExperimentCommand,
    RunConfig,
    elements_or_default,
)
from iwasawa.groups.matrices import frob_norm
from iwasawa.orbits.classify import factor_orbit_point, factor_residual
from iwasawa.reports.runconfig import element_list, resolve_principal

logger = logging.getLogger(__name__)


class FactorCommand(ExperimentCommand):
    help: str = "Factor points m of the principal orbit as m = i s*s with s in S"
    config_fields = ("matrices",)

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            "--matrices",
            type=element_list,
            help="Points of N*: JSON list, or random:count:seed for random "
            "points of the principal orbit (default random:8:<seed>)",
        )

    def handle(self, config: RunConfig) -> CommandReport:
        p = config.p
        matrices = resolve_principal(elements_or_default(config, "matrices", 8, 0), p)
        tolerance = settings.FACTOR_RESIDUAL_TOLERANCE
        points = []
        for i, m in enumerate(matrices):
            element_id = "m{}".format(i)
            try:
                s = factor_orbit_point(m)
            except NotInPrincipalOrbit as e:
                logger.info("%s: %s", element_id, e)
                points.append({"element_id": element_id, "matrix": m, "error": str(e)})
                continue
            residual = factor_residual(s, m)
            points.append(
                {
                    "element_id": element_id,
                    "matrix": m,
                    "s": s,
                    "residual": residual,
                    "passed": residual <= tolerance * max(1.0, frob_norm(m)),
                }
            )

        failed = [point["element_id"] for point in points if not point.get("passed")]
        return CommandReport(
            payload={"p": p, "tolerance": tolerance, "points": points},
            rows=[
                {
                    "p": p,
                    "element_id": point["element_id"],
                    "kind": "factor",
                    "verdict": "not principal"
                    if "error" in point
                    else ("ok" if point["passed"] else "inaccurate"),
                }
                for point in points
            ],
            checks=[
                (
                    point["element_id"],
                    bool(point.get("passed")),
                    point["error"]
                    if "error" in point
                    else "||i s*s - m|| = {:.3e}".format(point["residual"]),
                )
                for point in points
            ],
            passed=not failed,
            failure="cannot factor {}".format(", ".join(failed)),
        )
