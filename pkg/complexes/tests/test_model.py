from django.test import SimpleTestCase

from geometry.models import FacetColor, Label
from geometry.services.symmetry import F, G, IDENTITY, K
from complexes.models import (
    BoundaryBlock,
    BoundaryComponent,
    CopyRule,
    CuspSide,
    CuspSquare,
    FacetPairing,
    FacetPairingRule,
    Gluing,
    GluingKind,
    Volume,
)


def label(text):
    return Label.parse(text)


class FacetPairingModelTest(SimpleTestCase):
    """Test cases for facet pairings and rules"""

    def test_partner_both_ways(self):
        """Test the target side gets the inverse isometry"""
        pair = FacetPairing(label("(+,+,+,+)"), label("(-,-,+,+)"), K)

        self.assertEqual(pair.partner(label("(+,+,+,+)")), (label("(-,-,+,+)"), K))
        self.assertEqual(pair.partner(label("(-,-,+,+)")), (label("(+,+,+,+)"), K.inverse()))
        self.assertIsNone(pair.partner(label("(+,-,+,-)")))

    def test_rule_labels_sorted(self):
        """Test rule labels come out sorted"""
        rule = FacetPairingRule(
            name="blue",
            pairs=(
                FacetPairing(label("(+,+,-,+)"), label("(+,+,+,-)"), F),
                FacetPairing(label("(+,-,+,+)"), label("(-,+,+,+)"), G),
            ),
        )

        self.assertEqual(rule.copy_rule, CopyRule.PER_COPY)
        self.assertEqual(rule.labels, tuple(sorted([label("(+,+,-,+)"), label("(+,+,+,-)"), label("(+,-,+,+)"), label("(-,+,+,+)")])))
        self.assertEqual(rule.partner(label("(-,+,+,+)")), (label("(+,-,+,+)"), G))
        self.assertIsNone(rule.partner(label("(+,+,+,+)")))

    def test_gluing_tag(self):
        """Test pairings are tagged by isometry and the rest by kind"""
        pairing = Gluing(1, (1, 1, 0, 0), 1, (1, 0, 1, 0), F, GluingKind.PAIRING)
        green = Gluing(1, (1, 0, 0, 0), 2, (1, 0, 0, 0), IDENTITY, GluingKind.GREEN)

        self.assertEqual(pairing.tag, "F")
        self.assertEqual(green.tag, "green")


class CuspSquareModelTest(SimpleTestCase):
    """Test cases for cusp squares"""

    def setUp(self):
        sides = [
            CuspSide(label("(+,+,+,+)"), FacetColor.RED),
            CuspSide(label("(+,+,+,-)"), FacetColor.BLUE),
            CuspSide(label("(+,+,-,-)"), FacetColor.RED),
            CuspSide(label("(+,+,-,+)"), FacetColor.BLUE),
        ]
        corners = (label("(+,+,+,0)"), label("(+,+,0,-)"), label("(+,+,-,0)"), label("(+,+,0,+)"))
        self.square = CuspSquare(label("(+,+,0,0)"), tuple(sides), corners)

    def test_sides_of_color(self):
        """Test red and blue sides alternate"""
        self.assertEqual(self.square.sides_of_color(FacetColor.RED), (0, 2))
        self.assertEqual(self.square.sides_of_color(FacetColor.BLUE), (1, 3))

    def test_side_index(self):
        """Test the position of a side in the square"""
        self.assertEqual(self.square.side_index(label("(+,+,-,+)")), 3)

    def test_corners_of_side(self):
        """Test the first side wraps to the last corner"""
        self.assertEqual(self.square.corners_of_side(0), (label("(+,+,0,+)"), label("(+,+,+,0)")))
        self.assertEqual(self.square.corners_of_side(2), (label("(+,+,0,-)"), label("(+,+,-,0)")))


class BoundaryComponentModelTest(SimpleTestCase):
    """Test cases for boundary components"""

    def test_small_component(self):
        """Test a one-block component is small"""
        block = BoundaryBlock(label("(+,+,+,+)"), two_strata=(), cusps=())
        component = BoundaryComponent(blocks=(block,), gluings=())

        self.assertTrue(component.is_small)
        self.assertEqual(component.octahedra, 2)
        self.assertEqual(component.labels, (label("(+,+,+,+)"),))


class VolumeModelTest(SimpleTestCase):
    """Test cases for volumes"""

    def test_display(self):
        """Test the rendered volume line"""
        volume = Volume(cells=8, unit="v_O", value=29.310899013671)
        self.assertEqual(volume.display("M"), "M = 8 × v_O ≈ 29.3109")
