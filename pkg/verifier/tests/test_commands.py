import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from triangulations.services import codec
from triangulations.services.catalog import large_boundary_figure
from triangulations.services.isomorphism import isomorphic
from verifier.services.checks import CHECKS


class VerifyCommandTest(SimpleTestCase):
    """Test cases for the verify management command"""

    def run_verify(self, *args):
        out = StringIO()
        call_command("verify", *args, stdout=out)
        return out.getvalue()

    def test_text_report(self):
        """Test the default text report"""
        output = self.run_verify()
        self.assertIn("[PASS] polytope.f-vector", output)
        self.assertIn("M = 8 × v_O ≈ 29.3109", output)
        self.assertIn(f"{len(CHECKS)} of {len(CHECKS)} checks passed, 0 failed", output)

    def test_json_report_is_deterministic(self):
        """Test consecutive JSON runs are byte-identical"""
        first = self.run_verify("--format", "json")
        second = self.run_verify("--format", "json")
        self.assertEqual(first, second)
        self.assertEqual(json.loads(first)["summary"]["failed"], 0)

    def test_failed_check_exit_code(self):
        """Test a failing check exits with status 1"""
        out = StringIO()
        with self.assertRaises(CommandError) as raised:
            call_command("verify", "--inject-fault", stdout=out)
        self.assertEqual(raised.exception.returncode, 1)
        self.assertIn("R.two-strata-killed", str(raised.exception))
        self.assertIn("[FAIL] R.two-strata-killed", out.getvalue())

    def test_list_checks(self):
        """Test the listed ids follow the report order"""
        output = self.run_verify("--list-checks")
        ids = [line.split()[0] for line in output.splitlines()]
        self.assertEqual(ids, [c.check_id for c in CHECKS])

    def test_export(self):
        """Test export writes a file that reads back isomorphic"""
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "large.tri"
            output = self.run_verify("--export", "large", str(path))
            self.assertIn("Wrote large triangulation", output)
            self.assertIsNotNone(isomorphic(codec.read(path), large_boundary_figure()))

    def test_export_usage_errors(self):
        """Test unknown selectors and unwritable paths exit with status 2"""
        with tempfile.TemporaryDirectory() as directory:
            for selector, path in (("medium", "m.tri"), ("small", "missing/small.tri")):
                with self.assertRaises(CommandError) as raised:
                    self.run_verify("--export", selector, str(Path(directory) / path))
                self.assertEqual(raised.exception.returncode, 2)
