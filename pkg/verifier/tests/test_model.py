from django.test import SimpleTestCase

from verifier.models import CheckResult, CheckStatus, Report
from verifier.services.comparators import ExactComparator, ToleranceComparator, get_comparator


def result(check_id, status):
    return CheckResult(check_id, "claim", 1, 1 if status == CheckStatus.PASS else 2, status)


class ReportModelTest(SimpleTestCase):
    """Test cases for reports"""

    def test_summary_counts(self):
        """Test summary counts are derived from the checks"""
        report = Report(
            checks=(result("a", CheckStatus.PASS), result("b", CheckStatus.FAIL), result("c", CheckStatus.PASS)),
            fingerprint="0" * 64,
        )

        self.assertEqual(report.summary, {"total": 3, "passed": 2, "failed": 1})
        self.assertFalse(report.ok)
        self.assertEqual([c.check_id for c in report.failed], ["b"])

    def test_empty_report_is_ok(self):
        """Test an empty report passes"""
        report = Report(checks=(), fingerprint="")
        self.assertTrue(report.ok)
        self.assertEqual(report.summary["total"], 0)


class ComparatorTest(SimpleTestCase):
    """Test cases for check comparators"""

    def test_exact(self):
        """Test exact comparison"""
        comparator = ExactComparator()
        self.assertTrue(comparator.matches([24, 96, 96, 24], [24, 96, 96, 24]))
        self.assertFalse(comparator.matches([24, 96, 96, 24], (24, 96, 96, 24)))

    def test_tolerance(self):
        """Test comparison within a tolerance"""
        comparator = ToleranceComparator(1e-2)
        self.assertTrue(comparator.matches(29.311, 29.3109))
        self.assertFalse(comparator.matches(29.311, 29.4))
        self.assertEqual(comparator.describe(), "within 0.01")

    def test_tolerance_rejects_error_payloads(self):
        """Test a failed computation never passes a numeric check"""
        comparator = ToleranceComparator(1.0)
        self.assertFalse(comparator.matches(1.0, {"error": "pairing_error"}))
        self.assertFalse(comparator.matches(1.0, True))

    def test_factory(self):
        """Test comparator lookup by name"""
        self.assertIsInstance(get_comparator(), ExactComparator)
        comparator = get_comparator("NUMERIC_TOLERANCE", {"NUMERIC_TOLERANCE": 1e-4})
        self.assertEqual(comparator.tolerance, 1e-4)
        with self.assertRaises(KeyError):
            get_comparator("LOOSE", {})
