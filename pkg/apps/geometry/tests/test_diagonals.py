import itertools
from fractions import Fraction as F

from django.test import SimpleTestCase

from apps.catalog.arcs import canonical_sextuple
from apps.geometry.diagonals import (
    Diagonal,
    DiagonalError,
    all_diagonals,
    arcs_of_triple,
    canonical_rotation,
    cluster_arcs,
    concurrent_exact,
    crossing,
    is_center_pair,
)


def d(a, b, n):
    return Diagonal.of(a, b, n)


class DiagonalTestCase(SimpleTestCase):
    """Test cases for diagonals and the crossing predicates"""

    def test_construction(self):
        """Test endpoints are ordered and sides rejected"""
        self.assertEqual(Diagonal.of(5, 2, 8), Diagonal(2, 5))
        self.assertEqual(str(Diagonal.of(9, 3, 8)), '1-3')
        with self.assertRaises(DiagonalError):
            Diagonal.of(0, 1, 6)
        with self.assertRaises(DiagonalError):
            Diagonal.of(0, 5, 6)
        with self.assertRaises(DiagonalError):
            Diagonal.of(2, 2, 6)

    def test_all_diagonals(self):
        """Test the number of diagonals is n(n-3)/2"""
        for n in (3, 4, 5, 12, 30):
            self.assertEqual(len(all_diagonals(n)), n * (n - 3) // 2)
        self.assertEqual(all_diagonals(5), sorted(all_diagonals(5)))

    def test_crossing(self):
        """Test interleaving endpoints"""
        self.assertTrue(crossing(d(0, 2, 4), d(1, 3, 4), 4))
        self.assertFalse(crossing(d(0, 2, 6), d(2, 4, 6), 6))
        self.assertTrue(crossing(d(0, 3, 6), d(1, 4, 6), 6))
        self.assertFalse(crossing(d(0, 2, 8), d(3, 6, 8), 8))

    def test_center_pairs(self):
        """Test only two diameters make a center pair"""
        self.assertTrue(is_center_pair(d(0, 3, 6), d(1, 4, 6), 6))
        self.assertFalse(is_center_pair(d(0, 2, 6), d(1, 4, 6), 6))
        self.assertTrue(is_center_pair(d(0, 4, 8), d(2, 6, 8), 8))

    def test_rotation(self):
        """Test rotating wraps endpoints and keeps them ordered"""
        self.assertEqual(d(1, 4, 6).rotated(3, 6), Diagonal(1, 4))
        self.assertEqual(d(2, 5, 8).rotated(4, 8), Diagonal(1, 6))
        rotated = canonical_rotation((d(3, 6, 8), d(4, 7, 8)), 8)
        self.assertEqual(rotated, (Diagonal(0, 3), Diagonal(1, 4)))


class ArcsOfTripleTestCase(SimpleTestCase):
    """Test cases for the arcs cut by three crossing diagonals"""

    def test_hexagon_diameters(self):
        """Test the three diameters of the hexagon cut six equal arcs"""
        sextuple = arcs_of_triple(d(0, 3, 6), d(1, 4, 6), d(2, 5, 6), 6)
        self.assertEqual(sextuple.arcs, (F(1, 6),) * 6)

    def test_sporadic_triple(self):
        """Test a 30-gon triple lands on the first sporadic row"""
        # arcs 3, 4, 4, 5, 9, 5 in thirtieths
        sextuple = arcs_of_triple(d(0, 11, 30), d(3, 16, 30), d(7, 25, 30), 30)
        self.assertEqual(
            canonical_sextuple(sextuple),
            ((F(1, 10), F(2, 15), F(3, 10)), (F(2, 15), F(1, 6), F(1, 6))),
        )
        self.assertTrue(concurrent_exact(d(0, 11, 30), d(3, 16, 30), d(7, 25, 30), 30))

    def test_rejects_bad_triples(self):
        """Test shared endpoints and non-crossing pairs"""
        with self.assertRaises(DiagonalError):
            arcs_of_triple(d(0, 3, 8), d(3, 6, 8), d(1, 5, 8), 8)
        with self.assertRaises(DiagonalError):
            arcs_of_triple(d(0, 2, 8), d(3, 6, 8), d(1, 5, 8), 8)

    def test_cluster_arcs(self):
        """Test the arcs between consecutive endpoints"""
        arcs = cluster_arcs((d(0, 3, 6), d(1, 4, 6), d(2, 5, 6)), 6)
        self.assertEqual(arcs, (F(1, 6),) * 6)
        with self.assertRaises(DiagonalError):
            cluster_arcs((d(0, 3, 6), d(0, 2, 6)), 6)


class ConcurrencyTestCase(SimpleTestCase):
    """Test cases for the exact concurrency test"""

    def test_center(self):
        """Test the hexagon's diameters meet"""
        self.assertTrue(concurrent_exact(d(0, 3, 6), d(1, 4, 6), d(2, 5, 6), 6))

    def test_family_one_in_dodecagon(self):
        """Test the first family at t=1/12 realized by the 12-gon"""
        # U, V, W, X, Y, Z = 1/6, 1/12, 1/6, 5/12, 1/12, 1/12
        self.assertTrue(concurrent_exact(d(0, 8, 12), d(2, 9, 12), d(7, 11, 12), 12))

    def test_non_crossing_is_not_concurrent(self):
        """Test diagonals sharing a vertex never count as concurrent"""
        self.assertFalse(concurrent_exact(d(0, 3, 8), d(0, 5, 8), d(1, 6, 8), 8))

    def test_octagon_has_eight_triple_points(self):
        """Test brute force over all triples of the octagon's diagonals"""
        n = 8
        triples = [
            triple for triple in itertools.combinations(all_diagonals(n), 3)
            if concurrent_exact(*triple, n)
        ]
        off_center = [t for t in triples if not all(x.is_diameter(n) for x in t)]
        self.assertEqual(len(off_center), 8)
        self.assertEqual(len(triples) - len(off_center), 4)
