from argparse import ArgumentParser

from iwasawa.core.management.base import (
    CommandReport,
    ExperimentCommand,
    RunConfig,
    elements_or_default,
)
from iwasawa.orbits.classify import Degenerate, classify_orbit
from iwasawa.reports.runconfig import element_list, resolve_matrices
from iwasawa.utils.terminal import TerminalWriter


class OrbitClassifyCommand(ExperimentCommand):
    help: str = (
        "Label skew-Hermitian matrices with the sign vector of their S-orbit, "
        "or as degenerate"
    )
    config_fields = ("matrices",)

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            "--matrices",
            type=element_list,
            help="Points of N*: JSON list, or random:count:seed for points "
            "of random orbits (default random:8:<seed>)",
        )

    def handle(self, config: RunConfig) -> CommandReport:
        p = config.p
        matrices = resolve_matrices(elements_or_default(config, "matrices", 8, 0), p)
        points = []
        for i, m in enumerate(matrices):
            label = classify_orbit(m)
            degenerate = isinstance(label, Degenerate)
            points.append(
                {
                    "element_id": "m{}".format(i),
                    "matrix": m,
                    "label": str(label),
                    "principal": not degenerate and label.is_principal,
                    "degenerate_minor": label.minor_index if degenerate else None,
                }
            )
        return CommandReport(
            payload={"p": p, "points": points},
            rows=[
                {
                    "p": p,
                    "element_id": point["element_id"],
                    "kind": "orbit",
                    "verdict": point["label"],
                }
                for point in points
            ],
        )

    def summarize(self, writer: TerminalWriter, report: CommandReport) -> None:
        writer.sep("-", self.name)
        writer.table(
            ("element", "orbit", "principal", "vanishing minor"),
            (
                (
                    point["element_id"],
                    point["label"],
                    point["principal"],
                    point["degenerate_minor"],
                )
                for point in report.payload["points"]
            ),
        )
