import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from core.exceptions import ExportError
from triangulations.services import codec
from triangulations.services.catalog import doubled_tetrahedron, folded_tetrahedron, large_boundary_figure
from triangulations.services.isomorphism import isomorphic
from verifier.models import CheckStatus
from verifier.services.checks import CHECKS, get_check
from verifier.services.context import PipelineContext, PipelineOptions
from verifier.services.pipeline import evaluate, export_triangulation, run_pipeline
from verifier.services.renderers import render_json, render_text


class CheckRegistryTest(SimpleTestCase):
    """Test cases for the check registry"""

    def test_ids_unique(self):
        """Test every check id is registered once"""
        ids = [c.check_id for c in CHECKS]
        self.assertEqual(len(ids), len(set(ids)))

    def test_upstream_first(self):
        """Test checks run from the 24-cell towards X"""
        stages = []
        for c in CHECKS:
            if c.stage not in stages:
                stages.append(c.stage)
        self.assertEqual(stages[:4], ["polytope", "S", "R", "boundary"])
        self.assertEqual(stages[-1], "properties")
        self.assertLess(stages.index("M"), stages.index("X"))


class PipelineTest(SimpleTestCase):
    """Test cases for a full pipeline run"""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.report = run_pipeline(PipelineOptions.from_settings())

    def test_all_checks_pass(self):
        """Test every check passes"""
        failed = {c.check_id: c.actual for c in self.report.failed}
        self.assertEqual(failed, {})
        self.assertTrue(self.report.ok)
        self.assertEqual(self.report.summary["total"], len(CHECKS))

    def test_report_order(self):
        """Test results follow the registry order"""
        self.assertEqual([c.check_id for c in self.report.checks], [c.check_id for c in CHECKS])

    def test_volume_line(self):
        """Test the report shows M = 8 × v_O"""
        result = next(c for c in self.report.checks if c.check_id == "M.volume")
        self.assertEqual(result.note, "M = 8 × v_O ≈ 29.3109")
        self.assertIn("M = 8 × v_O ≈ 29.3109", render_text(self.report))

    def test_determinism(self):
        """Test two runs give byte-identical reports"""
        again = run_pipeline(PipelineOptions.from_settings())
        self.assertEqual(render_json(again), render_json(self.report))
        self.assertEqual(render_text(again), render_text(self.report))

    def test_parallel_matches_serial(self):
        """Test three jobs give the same report as one"""
        parallel = run_pipeline(PipelineOptions.from_settings(n_jobs=3))
        self.assertEqual(render_json(parallel), render_json(self.report))

    def test_json_carries_text_data(self):
        """Test the JSON layout"""
        data = json.loads(render_json(self.report))
        self.assertEqual(list(data), ["summary", "fingerprint", "checks"])
        self.assertEqual(len(data["fingerprint"]), 64)
        self.assertEqual(data["checks"][0]["check_id"], "polytope.f-vector")
        self.assertEqual(data["checks"][0]["actual"], [24, 96, 96, 24])
        self.assertIn(f"sha256:{data['fingerprint']}", render_text(self.report))

    @override_settings(VERIFIER={
        "REPORT_FORMAT": "text",
        "N_JOBS": 1,
        "PROPERTY_SAMPLES": 5,
        "PROPERTY_SEED": 1,
        "VOLUME_TOLERANCE": 1e-2,
        "NUMERIC_TOLERANCE": 1e-4,
    })
    def test_property_settings(self):
        """Test sample count and seed come from settings"""
        ctx = PipelineContext()
        self.assertEqual(ctx.options.property_samples, 5)
        result = evaluate(get_check("properties.random"), ctx)
        self.assertEqual(result.status, CheckStatus.PASS)
        self.assertEqual(result.note, "5 samples, seed 1")


class FaultInjectionTest(SimpleTestCase):
    """Test cases for a corrupted blue pairing rule"""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.report = run_pipeline(PipelineOptions.from_settings(inject_fault=True))

    def test_two_strata_check_fails(self):
        """Test the broken rule fails the 2-strata check"""
        result = next(c for c in self.report.checks if c.check_id == "R.two-strata-killed")
        self.assertEqual(result.status, CheckStatus.FAIL)
        self.assertEqual(result.actual["error"], "pairing_error")
        self.assertEqual(result.actual["check_id"], "R.two-strata-killed")

    def test_upstream_checks_still_pass(self):
        """Test failures stay downstream of the broken stage"""
        for result in self.report.checks:
            if result.check_id.split(".")[0] in ("polytope", "S"):
                self.assertEqual(result.status, CheckStatus.PASS, result.check_id)
        self.assertFalse(self.report.ok)

    def test_fingerprint_changes(self):
        """Test the fault changes the fingerprint"""
        healthy = run_pipeline(PipelineOptions.from_settings())
        self.assertNotEqual(self.report.fingerprint, healthy.fingerprint)


class ExportTest(SimpleTestCase):
    """Test cases for triangulation export"""

    def setUp(self):
        self.ctx = PipelineContext()

    def test_export_large(self):
        """Test the large triangulation round trips to an isomorphic copy"""
        with tempfile.TemporaryDirectory() as directory:
            path = export_triangulation("large", Path(directory) / "large.tri", self.ctx)
            lines = path.read_text().splitlines()
            self.assertEqual(lines[0], "tets 4")
            self.assertEqual(len(lines), 9)
            self.assertIsNotNone(isomorphic(codec.read(path), large_boundary_figure()))

    def test_export_small(self):
        """Test the small triangulation export"""
        with tempfile.TemporaryDirectory() as directory:
            path = export_triangulation("small", Path(directory) / "small.tri", self.ctx)
            self.assertEqual(path.read_text(), "tets 1\nglue 1.0 1.1 023\nglue 1.2 1.3 012\n")
            self.assertEqual(codec.read(path), folded_tetrahedron())

    def test_export_example(self):
        """Test the doubled tetrahedron export"""
        with tempfile.TemporaryDirectory() as directory:
            path = export_triangulation("example-doubled", Path(directory) / "doubled.tri", self.ctx)
            self.assertIsNotNone(isomorphic(codec.read(path), doubled_tetrahedron()))

    def test_unknown_selector(self):
        """Test an unknown selector raises ExportError"""
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(ExportError):
                export_triangulation("medium", Path(directory) / "medium.tri", self.ctx)

    def test_unwritable_path(self):
        """Test a missing directory raises ExportError"""
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(ExportError):
                export_triangulation("small", Path(directory) / "missing" / "small.tri", self.ctx)
