"""
The command line contract of ``python -m iwasawa``: reports on stdout,
summaries and errors on stderr, and the exit codes 0 (success), 1 (a check
failed) and 2 (invalid configuration).
"""
import csv
import io
import json
import os
import subprocess
import sys

import pytest

from iwasawa import get_version
from iwasawa.reports import CSV_COLUMNS


class AdminScriptTestCase:
    def run_test(self, args, test_dir, environ=None):
        """Start a subprocess running the iwasawa module"""
        # The base dir for iwasawa's tests is one level up.
        testing_dir = os.path.dirname(os.path.dirname(__file__))
        # The base dir for iwasawa is one level above the test dir. We don't
        # use `import iwasawa` to figure that out, so we don't pick up an
        # iwasawa from site-packages or similar.
        iwasawa_dir = os.path.dirname(testing_dir)

        test_environ = os.environ.copy()
        test_environ.pop("IWASAWA_SETTINGS_MODULE", None)
        test_environ.pop("IWASAWA_THREADS", None)
        test_environ.update(environ or {})
        test_environ["PYTHONPATH"] = os.pathsep.join([iwasawa_dir, testing_dir])
        test_environ["PYTHONWARNINGS"] = ""

        p = subprocess.run(
            [sys.executable, "-m", "iwasawa", *args],
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            cwd=test_dir,
            env=test_environ,
            universal_newlines=True,
        )
        return p.returncode, p.stdout, p.stderr


class ManagementUtilityTests(AdminScriptTestCase):
    def test_main_help(self, test_dir):
        code, out, err = self.run_test([], test_dir)
        assert code == 0
        assert "Available subcommands:" in out
        for name in ("verify-group", "cocycle-norm", "verdict", "scan", "factor"):
            assert "    {}".format(name) in out

    def test_command_help(self, test_dir):
        code, out, _ = self.run_test(["help", "scan"], test_dir)
        assert code == 0
        assert "--q Q_GRID [Q_GRID ...]" in out
        assert "run configuration" in out

    def test_version(self, test_dir):
        for args in (["version"], ["--version"]):
            code, out, _ = self.run_test(args, test_dir)
            assert code == 0
            assert out == get_version() + "\n"

    def test_unknown_command(self, test_dir):
        code, out, err = self.run_test(["verfy-group"], test_dir)
        assert code == 1
        assert out == ""
        assert "Unknown command: 'verfy-group'. Did you mean verify-group?" in err

    def test_bad_settings_module(self, test_dir):
        code, _, err = self.run_test(
            ["verify-group", "--p", "1", "--trials", "2"],
            test_dir,
            environ={"IWASAWA_SETTINGS_MODULE": "bad_settings"},
        )
        assert code == 2
        assert "ConfigError: Cannot import the settings module 'bad_settings'" in err

    def test_help_with_bad_settings(self, test_dir):
        code, out, _ = self.run_test(
            ["help"], test_dir, environ={"IWASAWA_SETTINGS_MODULE": "bad_settings"}
        )
        assert code == 0
        assert "Settings error" in out
        assert "Every command exits with code 2" in out

    def test_help_flag(self, test_dir):
        code, out, _ = self.run_test(["--help"], test_dir)
        assert code == 0
        assert out.startswith("iwasawa {}\n".format(get_version()))
        assert "Exit codes: 0 every check passed" in out


class ExitCodeTests(AdminScriptTestCase):
    def test_success(self, test_dir):
        code, out, err = self.run_test(
            ["verify-group", "--p", "2", "--trials", "5", "--seed", "3"], test_dir
        )
        assert code == 0, err
        report = json.loads(out)
        assert report["command"] == "verify-group"
        assert report["p"] == 2
        assert all(check["passed"] for check in report["checks"].values())
        assert "PASS  associativity" in err

    def test_injected_fault(self, test_dir):
        code, out, err = self.run_test(
            ["verify-group", "--p", "2", "--trials", "5", "--inject-fault"], test_dir
        )
        assert code == 1
        report = json.loads(out)
        assert report["checks"]["pairing"]["passed"] is False
        assert report["checks"]["pairing"]["max_residual"] == "inf"
        assert report["fault"].startswith("ImaginaryResidue")
        assert "CheckFailed: failed checks: pairing; ImaginaryResidue" in err

    def test_invalid_config(self, test_dir, datafix_dir):
        code, out, err = self.run_test(
            ["verify-group", "--config", str(datafix_dir / "invalid_p.json")], test_dir
        )
        assert code == 2
        assert out == ""
        assert "ConfigError: Invalid run configuration" in err
        assert "p: 0 is less than the minimum of 1" in err

    def test_empty_q_grid(self, test_dir, datafix_dir):
        code, _, err = self.run_test(
            ["scan", "--config", str(datafix_dir / "empty_q_grid.json")], test_dir
        )
        assert code == 2
        assert "q_grid" in err

    def test_missing_q_grid(self, test_dir):
        code, _, err = self.run_test(["scan", "--p", "1"], test_dir)
        assert code == 2
        assert "scan needs a q_grid" in err

    def test_verdict_without_s_elements(self, test_dir):
        code, _, err = self.run_test(
            ["verdict", "--p", "2", "--s-elements", "[]"], test_dir
        )
        assert code == 2
        assert "at least one element of S" in err

    def test_missing_p(self, test_dir):
        code, _, err = self.run_test(["factor"], test_dir)
        assert code == 2
        assert "'p' is a required property" in err

    def test_argument_error(self, test_dir):
        code, _, err = self.run_test(
            ["verify-group", "--p", "1", "--format", "xml"], test_dir
        )
        assert code == 2
        assert "invalid choice: 'xml'" in err

    def test_invalid_threads(self, test_dir):
        code, _, err = self.run_test(["factor", "--p", "2", "--threads", "0"], test_dir)
        assert code == 2
        assert "--threads must be >= 1" in err

    def test_traceback(self, test_dir):
        code, _, err = self.run_test(["scan", "--p", "1", "--traceback"], test_dir)
        assert code == 1
        assert "Traceback" in err


class ReportTests(AdminScriptTestCase):
    def test_output_is_independent_of_threads(self, test_dir, datafix_dir):
        """Two runs with different worker counts write identical bytes"""
        config = str(datafix_dir / "cocycle_p2.json")
        outputs = []
        for threads in ("1", "4"):
            path = test_dir / "report-{}.json".format(threads)
            code, out, err = self.run_test(
                [
                    "cocycle-norm",
                    "--config",
                    config,
                    "--output",
                    str(path),
                    "--no-timestamp",
                ],
                test_dir,
                environ={"IWASAWA_THREADS": threads},
            )
            assert code == 0, err
            assert "n0" in out and "s0" in out
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]
        report = json.loads(outputs[0])
        assert "generated_at" not in report
        assert [e["agree"] for e in report["elements"]] == [True, True]

    def test_csv(self, test_dir, datafix_dir):
        config = str(datafix_dir / "cocycle_p1.json")
        code, out, err = self.run_test(
            ["cocycle-norm", "--config", config, "--format", "csv"], test_dir
        )
        assert code == 0, err
        rows = list(csv.DictReader(io.StringIO(out)))
        assert list(rows[0]) == list(CSV_COLUMNS)
        assert [(r["element_id"], r["kind"], r["agree"]) for r in rows] == [
            ("n0", "n", "true"),
            ("s0", "s", "true"),
        ]
        assert float(rows[0]["norm_closed"]) == pytest.approx(1.3862944, abs=1e-7)
        assert float(rows[1]["norm_closed"]) == pytest.approx(0.8925742, abs=1e-7)
        assert rows[1]["unitary"] == "true"

    def test_verdict_p1(self, test_dir):
        code, out, err = self.run_test(
            ["verdict", "--p", "1", "--samples", "256", "--no-timestamp"], test_dir
        )
        assert code == 0, err
        summary = json.loads(out)["verdict"]["summary"]
        assert summary["label"] == "SPECIAL, UNITARY"
        assert summary["passed"] is True
        assert "SPECIAL, UNITARY (expected SPECIAL, UNITARY)" in err

    def test_scan_p2(self, test_dir):
        code, out, err = self.run_test(
            [
                "scan",
                "--p",
                "2",
                "--q",
                "1.5",
                "2",
                "2.5",
                "--s-elements",
                "[[[[1, 0], [0, 0]], [[0, 0], [2, 0]]]]",
                "--samples",
                "128",
                "--format",
                "csv",
            ],
            test_dir,
        )
        assert code == 0, err
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [row["verdict"] for row in rows] == [
            "divergent",
            "convergent",
            "divergent",
        ]

    def test_orbit_classify(self, test_dir):
        code, out, err = self.run_test(
            ["orbit-classify", "--p", "3", "--seed", "2"], test_dir
        )
        assert code == 0, err
        points = json.loads(out)["points"]
        assert len(points) == 8
        assert all(point["degenerate_minor"] is None for point in points)

    def test_factor_rejects_points_outside_the_principal_orbit(self, test_dir):
        code, out, _ = self.run_test(
            ["factor", "--p", "1", "--matrices", "[[[[0, 2]]], [[[0, -2]]]]"], test_dir
        )
        assert code == 1
        points = json.loads(out)["points"]
        assert points[0]["passed"] is True
        assert "error" in points[1]
