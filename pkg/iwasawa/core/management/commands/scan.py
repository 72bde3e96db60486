"""
Exploratory scan of the multiplier exponent q. Only q = p^2/2 gives a
convergent ||beta(s0)||; for any other q the truncated norm grows like
slope * log(1/delta) with slope = int_W (b(w) - 1)^2 dw.
"""
import logging

from argparse import ArgumentParser
from typing import Any, Dict, List

from iwasawa.cocycle.norms import (
    beta_norm_direct,
    beta_s_norm_closed,
    multiplier_divergence_slope,
    truncation_fit,
)
from iwasawa.cocycle.vectors import SpecialVector
from iwasawa.conf import settings
from iwasawa.core.exceptions import NoConvergence, NonFiniteSample
from iwasawa.core.management.base import (
    CommandReport,
    ConfigError,
    ExperimentCommand,
    RunConfig,
    elements_or_default,
)
from iwasawa.groups.elements import GroupElementP, TriangularS
from iwasawa.quadrature.spec import QuadratureSpec
from iwasawa.reports.runconfig import element_list, resolve_s
from iwasawa.representation.coefficients import unitarity_report
from iwasawa.representation.multiplier import Multiplier
from iwasawa.utils.terminal import TerminalWriter

logger = logging.getLogger(__name__)

SUMMARY_HEADERS = (
    "q",
    "element",
    "verdict",
    "slope",
    "expected",
    "r^2",
    "unitary",
    "opnorm",
)


def scan_point(
    element_id: str,
    s0: TriangularS,
    q: float,
    f0: SpecialVector,
    delta_grid: Any,
    spec: QuadratureSpec,
) -> Dict[str, Any]:
    thresholds = settings.VERDICT
    a = Multiplier(q)
    g = GroupElementP.from_s(s0)
    fit = truncation_fit(g, a, f0, delta_grid, spec)
    divergent = fit.is_divergent(thresholds["FIT_R_SQUARED"], thresholds["SLOPE_ATOL"])
    unitarity = unitarity_report(s0, a, spec)
    point: Dict[str, Any] = {
        "element_id": element_id,
        "s0": s0,
        "q": q,
        "distinguished": a.is_distinguished(s0.dim),
        "fit": fit,
        "divergent": divergent,
        "unitarity": unitarity,
        "norm_closed": None,
        "norm_direct": None,
        "agree": None,
        "expected_slope": None,
    }
    if point["distinguished"]:
        closed = beta_s_norm_closed(s0, spec)
        point["norm_closed"] = closed
        try:
            direct = beta_norm_direct(g, a, f0, spec)
        except (NoConvergence, NonFiniteSample) as e:
            logger.info("%s, q=%g: direct norm failed: %s", element_id, q, e)
        else:
            point["norm_direct"] = direct
            point["agree"] = closed.agrees_with(direct, thresholds["AGREEMENT_SIGMAS"])
    else:
        point["expected_slope"] = multiplier_divergence_slope(s0, q, spec)
    logger.info(
        "%s, q=%g: %s, slope %.6g",
        element_id,
        q,
        "divergent" if divergent else "convergent",
        fit.slope,
    )
    return point


def scan_row(p: int, point: Dict[str, Any]) -> Dict[str, Any]:
    closed, direct = point["norm_closed"], point["norm_direct"]
    if direct is None and not point["distinguished"]:
        # the truncated norm at the smallest delta
        norm_direct, se_direct = point["fit"].grid[-1][1], None
    else:
        norm_direct = None if direct is None else direct.value
        se_direct = None if direct is None else direct.std_error
    return {
        "p": p,
        "element_id": point["element_id"],
        "kind": "s",
        "q": point["q"],
        "norm_closed": None if closed is None else closed.value,
        "se_closed": None if closed is None else closed.std_error,
        "norm_direct": norm_direct,
        "se_direct": se_direct,
        "agree": point["agree"],
        "unitary": point["unitarity"].is_unitary,
        "opnorm": point["unitarity"].c_max,
        "verdict": "divergent" if point["divergent"] else "convergent",
    }


class ScanCommand(ExperimentCommand):
    help: str = (
        "Scan multiplier exponents q: convergence of ||beta(s0)||, unitarity "
        "and operator norm of T_a(s0) for each q and s0"
    )
    config_fields = ("q_grid", "s_elements")

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            "--q",
            dest="q_grid",
            type=float,
            nargs="+",
            help="Multiplier exponents q of a(m) = |m|^q",
        )
        parser.add_argument(
            "--s-elements",
            dest="s_elements",
            type=element_list,
            help="Elements of S (default random:2:<seed + 1>)",
        )

    def handle(self, config: RunConfig) -> CommandReport:
        p = config.p
        q_grid = config.get("q_grid")
        if q_grid is None:
            raise ConfigError("{} needs a q_grid".format(self.name))
        spec = config.quadrature_spec()
        delta_grid = config.delta_grid()
        s_samples = resolve_s(elements_or_default(config, "s_elements", 2, 1), p)
        f0 = SpecialVector(p)

        points: List[Dict[str, Any]] = []
        for q in q_grid:
            for i, s0 in enumerate(s_samples):
                points.append(scan_point("s{}".format(i), s0, q, f0, delta_grid, spec))

        return CommandReport(
            payload={
                "p": p,
                "q_grid": list(q_grid),
                "quadrature": spec,
                "points": points,
            },
            rows=[scan_row(p, point) for point in points],
        )

    def summarize(self, writer: TerminalWriter, report: CommandReport) -> None:
        writer.sep("-", self.name)
        writer.table(
            SUMMARY_HEADERS,
            (
                (
                    point["q"],
                    point["element_id"],
                    "divergent" if point["divergent"] else "convergent",
                    point["fit"].slope,
                    None
                    if point["expected_slope"] is None
                    else point["expected_slope"].value,
                    point["fit"].r_squared,
                    point["unitarity"].is_unitary,
                    point["unitarity"].c_max,
                )
                for point in report.payload["points"]
            ),
        )
