from django.test import SimpleTestCase

from core.exceptions import CuspGluingError, PairingError, check_exception_handler
from core.union_find import UnionFind


class UnionFindTest(SimpleTestCase):
    """Test cases for the union-find structure"""

    def test_classes_sorted(self):
        """Test classes come out as sorted tuples ordered by least member"""
        uf = UnionFind(range(6))
        uf.union(4, 1)
        uf.union(5, 3)
        uf.union(3, 1)

        self.assertEqual(uf.classes(), [(0,), (1, 3, 4, 5), (2,)])
        self.assertEqual(len(uf), 3)
        self.assertTrue(uf.same(4, 5))
        self.assertFalse(uf.same(0, 2))

    def test_add_is_idempotent(self):
        """Test adding an element twice keeps its class"""
        uf = UnionFind()
        uf.add("a")
        uf.add("b")
        uf.union("a", "b")
        uf.add("a")

        self.assertEqual(uf.classes(), [("a", "b")])
        self.assertIn("a", uf)
        self.assertNotIn("c", uf)

    def test_long_chain(self):
        """Test a long chain of unions"""
        uf = UnionFind(range(2000))
        for i in range(1999):
            uf.union(i, i + 1)
        self.assertEqual(len(uf), 1)
        self.assertTrue(uf.same(0, 1999))


class CheckExceptionHandlerTest(SimpleTestCase):
    """Test cases for converting exceptions into failed-check payloads"""

    def test_verification_error(self):
        """Test the payload of a domain error"""
        payload = check_exception_handler(PairingError("F does not map a to b"), {"check_id": "R.cusp-orbits"})
        self.assertEqual(
            payload,
            {"error": "pairing_error", "detail": "F does not map a to b", "check_id": "R.cusp-orbits"},
        )

    def test_default_detail(self):
        """Test the default detail message"""
        payload = check_exception_handler(CuspGluingError(), None)
        self.assertEqual(payload, {"error": "cusp_gluing_inconsistent", "detail": "cusp gluing inconsistent"})

    def test_unexpected_exception(self):
        """Test errors outside the hierarchy are reported by type name"""
        payload = check_exception_handler(KeyError("x"), {})
        self.assertEqual(payload["error"], "KeyError")
