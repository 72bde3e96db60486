import logging

from argparse import ArgumentParser
from typing import Dict, List

import numpy as np

from iwasawa.conf import settings
from iwasawa.core.exceptions import ImaginaryResidue
from iwasawa.core.management.base import (
    CommandReport,
    ExperimentCommand,
    RunConfig,
)
from iwasawa.groups.checks import (
    associativity_residual,
    identity_residual,
    inverse_residual,
    pairing_invariance_residual,
    theta_residual,
)
from iwasawa.groups.elements import theta
from iwasawa.groups.sampling import probe_points, random_n, random_p, random_s
from iwasawa.orbits.classify import action_jacobian
from iwasawa.representation.functions import gaussian
from iwasawa.representation.multiplier import Multiplier
from iwasawa.representation.operators import homomorphism_residual

logger = logging.getLogger(__name__)

# check name -> key of its tolerance in settings.VERIFY
CHECKS = {
    "associativity": "GROUP_LAW",
    "identity": "GROUP_LAW",
    "inverse": "GROUP_LAW",
    "theta-multiplicative": "THETA",
    "jacobian": "JACOBIAN",
    "pairing": "PAIRING",
    "homomorphism": "HOMOMORPHISM",
}


class VerifyGroupCommand(ExperimentCommand):
    help: str = (
        "Check the group law of P, the multiplicativity of theta, the Jacobian "
        "of the action on N*, the pairing and the homomorphism property of T "
        "on random elements"
    )
    config_fields = ("trials",)

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            "--trials", type=int, help="Random elements per check (default 100)"
        )
        parser.add_argument(
            "--inject-fault",
            action="store_true",
            help="Pair with a matrix that is not skew-Hermitian; the pairing "
            "check must then fail with ImaginaryResidue",
        )

    def handle(self, config: RunConfig) -> CommandReport:
        p = config.p
        spec = config.quadrature_spec()
        trials = config.get("trials", settings.VERIFY["TRIALS"])
        inject_fault = bool(config.getoption("inject_fault"))
        rng = np.random.default_rng(spec.seed)

        residuals: Dict[str, List[float]] = {name: [] for name in CHECKS}
        fault = None

        logger.info("Group law of P, p=%d, %d trials", p, trials)
        for _ in range(trials):
            g1, g2, g3 = (random_p(p, rng) for _ in range(3))
            residuals["associativity"].append(associativity_residual(g1, g2, g3))
            residuals["identity"].append(identity_residual(g1))
            residuals["inverse"].append(inverse_residual(g1))
            residuals["theta-multiplicative"].append(theta_residual(g1.s, g2.s))
            expected = theta(g1.s) ** (2 * p)
            jacobian = action_jacobian(g1.s)
            residuals["jacobian"].append(abs(jacobian - expected) / expected)

        logger.info("Pairing, p=%d", p)
        probes = probe_points(p, trials, rng)
        for index, m in enumerate(probes):
            n = random_n(p, rng).mat
            if inject_fault and index == 0:
                n = n + np.eye(p)
            s = random_s(p, rng)
            try:
                residuals["pairing"].append(pairing_invariance_residual(n, m, s))
            except ImaginaryResidue as e:
                fault = "ImaginaryResidue: {}".format(e)
                logger.error("Pairing of trial %d: %s", index, fault)
                residuals["pairing"].append(float("inf"))

        logger.info("Homomorphism property of T, p=%d", p)
        a = Multiplier.distinguished(p)
        f = gaussian(p)
        points = probe_points(p, settings.VERDICT["PROBE_POINTS"], rng)
        for _ in range(trials):
            g1, g2 = random_p(p, rng), random_p(p, rng)
            residuals["homomorphism"].append(
                homomorphism_residual(g1, g2, a, f, points)
            )

        checks = {}
        for name, key in CHECKS.items():
            worst = max(residuals[name])
            tolerance = settings.VERIFY[key]
            checks[name] = {
                "max_residual": worst,
                "tolerance": tolerance,
                "passed": bool(worst < tolerance),
            }
        passed = all(check["passed"] for check in checks.values())
        failed = [name for name, check in checks.items() if not check["passed"]]
        return CommandReport(
            payload={
                "p": p,
                "seed": spec.seed,
                "trials": trials,
                "inject_fault": inject_fault,
                "checks": checks,
                "fault": fault,
            },
            rows=[
                {
                    "p": p,
                    "element_id": name,
                    "kind": "check",
                    "verdict": "PASS" if check["passed"] else "FAIL",
                }
                for name, check in checks.items()
            ],
            checks=[
                (
                    name,
                    check["passed"],
                    "max={:.3e} tol={:.0e}".format(
                        check["max_residual"], check["tolerance"]
                    ),
                )
                for name, check in checks.items()
            ],
            headline=fault,
            passed=passed,
            failure="failed checks: {}{}".format(
                ", ".join(failed), "; " + fault if fault else ""
            ),
        )
