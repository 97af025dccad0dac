import tempfile
from collections import Counter
from pathlib import Path

import factory
import factory.random
from django.test import SimpleTestCase

from core.exceptions import (
    ExportError,
    NonManifoldEdgeError,
    OrientabilityError,
    TriangulationError,
    TriangulationFormatError,
)
from triangulations.models import Triangulation
from triangulations.services import codec
from triangulations.services.catalog import (
    doubled_tetrahedron,
    folded_tetrahedron,
    large_boundary_figure,
    twisted_fold,
)
from triangulations.services.census import random_relabeling
from triangulations.services.edges import edge_classes, valences
from triangulations.services.invariants import (
    block_symmetry_order,
    colour_preserving_symmetries,
    mt_invariants,
    presentation_summary,
    small_cusp_edges,
)
from triangulations.services.isomorphism import is_isomorphism, isomorphic, relabel
from triangulations.services.orientation import (
    brute_force_orientable,
    check_orientable,
    reverses_orientation,
)

from .factories import IsomorphismFactory, SingleTetrahedronFactory, TriangulationFactory


def with_numbering(triangulation: Triangulation) -> Triangulation:
    from geometry.models import Label

    labels = tuple(Label((1, 1, 1, 1)) for _ in range(triangulation.n))
    return Triangulation(triangulation.n, triangulation.gluings, block_labels=labels)


class OrientationServiceTest(SimpleTestCase):
    """Test cases for orientability"""

    def test_large_figure_orientable(self):
        """Test that all odd gluings give a constant orientation"""
        self.assertEqual(check_orientable(large_boundary_figure()), (1, 1, 1, 1))

    def test_doubled_tetrahedron_orientable(self):
        """Test the identity gluing of oppositely oriented copies"""
        orientation = check_orientable(doubled_tetrahedron())
        self.assertEqual(orientation, (1, -1))
        for gluing in doubled_tetrahedron().gluings:
            self.assertTrue(reverses_orientation(gluing, orientation))

    def test_fold_orientable(self):
        """Test the folded tetrahedron is oriented positively"""
        self.assertEqual(check_orientable(folded_tetrahedron()), (1,))

    def test_even_self_gluing_is_not_orientable(self):
        """Test that an orientation preserving fold has no valid orientation"""
        self.assertIsNone(check_orientable(twisted_fold()))
        self.assertFalse(brute_force_orientable(twisted_fold()))

    def test_agrees_with_brute_force(self):
        """Test the propagated verdict against exhaustive search"""
        factory.random.reseed_random(20130101)
        for _ in range(40):
            triangulation = TriangulationFactory()
            self.assertEqual(
                check_orientable(triangulation) is not None,
                brute_force_orientable(triangulation),
            )


class EdgeServiceTest(SimpleTestCase):
    """Test cases for edge classes"""

    def test_large_figure_valences(self):
        """Test the edge valences of the large figure"""
        self.assertEqual(valences(edge_classes(large_boundary_figure())), [2, 2, 2, 2, 4, 4, 4, 4])

    def test_doubled_tetrahedron_valences(self):
        """Test the edge valences of the doubled tetrahedron"""
        self.assertEqual(valences(edge_classes(doubled_tetrahedron())), [2] * 6)

    def test_fold_valences(self):
        """Test the folded edges have valence one"""
        classes = edge_classes(folded_tetrahedron())
        self.assertEqual(valences(classes), [1, 1, 4])
        singletons = sorted(c.slots for c in classes if c.valence == 1)
        self.assertEqual(singletons, [((0, (0, 1)),), ((0, (2, 3)),)])

    def test_valence_sum(self):
        """Test that valences add up to 6n"""
        factory.random.reseed_random(7)
        for _ in range(30):
            triangulation = TriangulationFactory()
            classes = edge_classes(triangulation, check_links=False)
            self.assertEqual(sum(valences(classes)), 6 * triangulation.n)

    def test_reversed_edge_is_not_a_manifold_edge(self):
        """Test an edge identified with itself backwards"""
        from triangulations.models import FaceGluing

        # Face 3 onto face 2 swapping vertices 0 and 1 reverses edge {0,1}
        gluings = (
            FaceGluing(0, 2, 0, 3, (1, 0, 3, 2)),
            FaceGluing(0, 0, 0, 1, (1, 0, 2, 3)),
        )
        with self.assertRaises(NonManifoldEdgeError):
            edge_classes(Triangulation(n=1, gluings=gluings))


class InvariantServiceTest(SimpleTestCase):
    """Test cases for block manifold invariants"""

    def test_large_figure_cusps(self):
        """Test four 2x2 and four 4x2 cusp tori"""
        invariants = mt_invariants(large_boundary_figure())
        self.assertEqual(invariants.cusps, 8)
        self.assertEqual(
            Counter(invariants.torus_dimensions),
            Counter({(2, 2): 4, (4, 2): 4}),
        )
        self.assertEqual(invariants.octahedra, 8)
        self.assertAlmostEqual(invariants.volume, 29.311, delta=1e-2)

    def test_doubled_tetrahedron_invariants(self):
        """Test cusps and octahedra of the doubled tetrahedron"""
        invariants = mt_invariants(doubled_tetrahedron())
        self.assertEqual(invariants.cusps, 6)
        self.assertEqual(invariants.octahedra, 4)

    def test_non_orientable_rejected(self):
        """Test invariants refuse a non-orientable triangulation"""
        with self.assertRaises(OrientabilityError):
            mt_invariants(twisted_fold())

    def test_presentation_summary(self):
        """Test genus and link component counts"""
        large = presentation_summary(large_boundary_figure())
        self.assertEqual((large.genus, large.framed, large.unframed), (5, 5, 8))
        doubled = presentation_summary(doubled_tetrahedron())
        self.assertEqual((doubled.genus, doubled.framed, doubled.unframed), (3, 3, 6))
        fold = presentation_summary(folded_tetrahedron())
        self.assertEqual((fold.genus, fold.framed, fold.unframed), (2, 2, 3))
        self.assertEqual(fold.framings, (0, 0))

    def test_small_cusp_edges(self):
        """Test the {1,2} and {3,4} edges are the valence two classes"""
        classes = small_cusp_edges(with_numbering(large_boundary_figure()))
        self.assertEqual(len(classes), 4)
        self.assertTrue(all(c.valence == 2 for c in classes))
        others = [c for c in edge_classes(large_boundary_figure()) if c not in classes]
        self.assertEqual([c.valence for c in others], [4, 4, 4, 4])

    def test_small_cusp_edges_need_numbering(self):
        """Test small cusp edges need block labels"""
        with self.assertRaises(TriangulationError):
            small_cusp_edges(large_boundary_figure())

    def test_block_symmetry_order(self):
        """Test the 24 symmetries of a truncated tetrahedron"""
        self.assertEqual(block_symmetry_order(), 24)
        self.assertEqual(colour_preserving_symmetries(), 24)


class IsomorphismServiceTest(SimpleTestCase):
    """Test cases for isomorphism search"""

    def test_reflexive(self):
        """Test a triangulation is isomorphic to itself"""
        witness = isomorphic(large_boundary_figure(), large_boundary_figure())
        self.assertIsNotNone(witness)
        self.assertTrue(is_isomorphism(large_boundary_figure(), large_boundary_figure(), witness))

    def test_size_mismatch(self):
        """Test triangulations of different sizes are not isomorphic"""
        self.assertIsNone(isomorphic(large_boundary_figure(), doubled_tetrahedron()))

    def test_fold_is_not_the_twisted_fold(self):
        """Test the two one-tetrahedron folds are distinguished"""
        self.assertIsNone(isomorphic(folded_tetrahedron(), twisted_fold()))

    def test_relabelled_copies(self):
        """Test symmetry and relabelling invariance on random triangulations"""
        factory.random.reseed_random(11)
        for _ in range(20):
            triangulation = TriangulationFactory()
            relabelling = IsomorphismFactory(n=triangulation.n)
            image = relabel(triangulation, relabelling)
            self.assertTrue(is_isomorphism(triangulation, image, relabelling))

            witness = isomorphic(triangulation, image)
            self.assertIsNotNone(witness)
            self.assertTrue(is_isomorphism(triangulation, image, witness))
            self.assertTrue(is_isomorphism(image, triangulation, witness.inverse()))


class CodecServiceTest(SimpleTestCase):
    """Test cases for the text format"""

    def test_dumps_fold(self):
        """Test the text of the folded tetrahedron"""
        self.assertEqual(
            codec.dumps(folded_tetrahedron()),
            "tets 1\nglue 1.0 1.1 023\nglue 1.2 1.3 012\n",
        )

    def test_dumps_large_figure(self):
        """Test the header and first line of the large figure"""
        text = codec.dumps(large_boundary_figure())
        lines = text.splitlines()
        self.assertEqual(lines[0], "tets 4")
        self.assertEqual(len(lines), 9)
        self.assertEqual(lines[1], "glue 1.0 2.0 132")

    def test_loads_inverts_dumps(self):
        """Test parsing the written text gives the triangulation back"""
        for triangulation in (large_boundary_figure(), doubled_tetrahedron(), twisted_fold()):
            self.assertEqual(codec.loads(codec.dumps(triangulation)), triangulation)

    def test_malformed_text(self):
        """Test rejection of bad headers, lines and vertex maps"""
        bad = [
            "tets 1\nglue 1.0 1.1 023",
            "tet 1\nglue 1.0 1.1 023\nglue 1.2 1.3 012\n",
            "tets 1\nglue 1.0 1.1 023\nglue 1.2 1.3 013\n",
            "tets 1\nglue 1.0 1.1 023\n",
            "tets 1\nglue 1.0  1.1 023\nglue 1.2 1.3 012\n",
        ]
        for text in bad:
            with self.assertRaises(TriangulationFormatError):
                codec.loads(text)

    def test_write_and_read(self):
        """Test writing to and reading from a file"""
        with tempfile.TemporaryDirectory() as directory:
            path = codec.write(folded_tetrahedron(), Path(directory) / "small.tri")
            self.assertEqual(codec.read(path), folded_tetrahedron())

    def test_unwritable_path(self):
        """Test a missing directory raises ExportError"""
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(ExportError):
                codec.write(folded_tetrahedron(), Path(directory) / "missing" / "small.tri")


class PropertyTest(SimpleTestCase):
    """Invariants over random triangulations"""

    def test_factory_draws_complete_triangulations(self):
        """Test the seeded factory builds triangulations with every face glued"""
        factory.random.reseed_random(13)
        for _ in range(10):
            triangulation = TriangulationFactory()
            self.assertIn(triangulation.n, range(1, 5))
            self.assertEqual(len(triangulation.gluings), 2 * triangulation.n)

    def test_relabelling_factory_uses_one_draw(self):
        """Test tetrahedron map and vertex maps come from the same relabelling"""
        factory.random.reseed_random(17)
        drawn = IsomorphismFactory(n=3)
        factory.random.reseed_random(17)
        self.assertEqual(drawn, random_relabeling(3, factory.random.randgen))

    def test_single_tetrahedra(self):
        """Test one tetrahedron always has valence sum 6"""
        factory.random.reseed_random(3)
        for _ in range(20):
            triangulation = SingleTetrahedronFactory()
            self.assertEqual(sum(valences(edge_classes(triangulation, check_links=False))), 6)

    def test_invariants_match_edge_classes(self):
        """Test cusps equal edge classes and torus lengths equal valences"""
        factory.random.reseed_random(5)
        samples = [large_boundary_figure(), doubled_tetrahedron(), folded_tetrahedron()]
        samples += [TriangulationFactory() for _ in range(60)]
        checked = 0
        for triangulation in samples:
            if check_orientable(triangulation) is None:
                continue
            try:
                classes = edge_classes(triangulation)
            except NonManifoldEdgeError:
                continue
            invariants = mt_invariants(triangulation)
            self.assertEqual(invariants.cusps, len(classes))
            self.assertEqual(sorted(t.length for t in invariants.tori), valences(classes))
            summary = presentation_summary(triangulation)
            self.assertEqual(summary.framed - 1, triangulation.n)
            self.assertEqual(summary.unframed, invariants.cusps)
            checked += 1
        self.assertGreater(checked, 0)
