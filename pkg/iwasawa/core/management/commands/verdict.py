import logging

from argparse import ArgumentParser

from iwasawa.cocycle.verdict import special_cocycle_verdict
from iwasawa.core.management.base import (
    CommandReport,
    ConfigError,
    ExperimentCommand,
    RunConfig,
    elements_or_default,
)
from iwasawa.reports.runconfig import element_list, resolve_n, resolve_s
from iwasawa.representation.multiplier import Multiplier

logger = logging.getLogger(__name__)


class VerdictCommand(ExperimentCommand):
    help: str = (
        "Decide whether beta is a special cocycle and whether T is unitary or "
        "only bounded: SPECIAL, UNITARY is expected for p=1 and SPECIAL, "
        "BOUNDED, NONUNITARY for p>1"
    )
    config_fields = ("n_elements", "s_elements")

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            "--n-elements",
            dest="n_elements",
            type=element_list,
            help="Elements of N (default random:4:<seed>)",
        )
        parser.add_argument(
            "--s-elements",
            dest="s_elements",
            type=element_list,
            help="Elements of S (default random:4:<seed + 1>)",
        )

    def handle(self, config: RunConfig) -> CommandReport:
        p = config.p
        spec = config.quadrature_spec()
        n_samples = resolve_n(elements_or_default(config, "n_elements", 4, 0), p)
        s_samples = resolve_s(elements_or_default(config, "s_elements", 4, 1), p)
        if not s_samples:
            raise ConfigError(
                "{} needs at least one element of S to test unitarity".format(
                    self.name
                )
            )
        report = special_cocycle_verdict(
            p, s_samples, n_samples, spec, delta_grid=config.delta_grid()
        )
        summary = report.summary
        q = Multiplier.distinguished(p).q

        checks = [
            (
                "||f0|| diverges",
                report.f0_divergent,
                "slope={:.6g} sphere mass={:.6g} r^2={:.6g}".format(
                    report.f0_fit.slope, report.sphere_mass, report.f0_fit.r_squared
                ),
            )
        ]
        for element in report.reports:
            detail = "verdict={} residual={:.1e}".format(
                element.verdict.value, element.identity_residual
            )
            if element.unitarity is not None:
                detail += " opnorm={:.6g}".format(element.unitarity.c_max)
            checks.append((element.element_id, element.agree, detail))

        return CommandReport(
            payload={"p": p, "q": q, "quadrature": spec, "verdict": report},
            rows=[element.as_row(q) for element in report.reports],
            checks=checks,
            headline="{} (expected {})".format(summary.label, summary.expected),
            passed=summary.passed,
            failure="{}; {}".format(summary.label, "; ".join(summary.reasons))
            if summary.reasons
            else summary.label,
        )
