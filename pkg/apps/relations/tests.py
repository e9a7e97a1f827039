from math import comb
from unittest import mock

from django.test import SimpleTestCase

from apps.exactnum.cyclotomic import CycSum, RootOfUnity, cyc_is_zero
from apps.relations import relation as relation_module
from apps.relations.enumeration import (
    UnsupportedRangeError,
    enumerate_minimal,
)
from apps.relations.relation import (
    CompositionError,
    InvalidRelationError,
    Relation,
    base_relation,
    canonical_form,
    compose,
    disjoint_union,
    is_minimal,
    lifted,
)

# label -> number of relations, in table order
MINIMAL_RELATION_TABLE = {
    'R_2': 1,
    'R_3': 1,
    'R_5': 1,
    '(R_5:R_3)': 1,
    '(R_5:2R_3)': 2,
    'R_7': 1,
    '(R_5:3R_3)': 2,
    '(R_7:R_3)': 1,
    '(R_5:4R_3)': 1,
    '(R_7:2R_3)': 3,
    '(R_7:3R_3)': 5,
    '(R_7:R_5)': 1,
    '(R_7:4R_3)': 5,
    '(R_7:R_5,R_3)': 6,
    '(R_7:(R_5:R_3))': 6,
    'R_11': 1,
    '(R_7:5R_3)': 3,
    '(R_7:R_5,2R_3)': 15,
    '(R_7:(R_5:R_3),R_3)': 36,
    '(R_7:(R_5:2R_3))': 14,
    '(R_11:R_3)': 1,
}


def r5_r3_relation():
    # zeta_6 + zeta_6^-1 + zeta_5 + zeta_5^2 + zeta_5^3 + zeta_5^4 over order 30
    return Relation(CycSum(30, ((5, 1), (25, 1), (6, 1), (12, 1), (18, 1), (24, 1))))


class RelationTestCase(SimpleTestCase):
    """Test cases for building and composing relations"""

    def test_base_relations(self):
        """Test R_p has p distinct p-th roots"""
        for p in (2, 3, 7):
            relation = base_relation(p)
            self.assertEqual(relation.weight, p)
            self.assertEqual(len(relation.roots), p)

    def test_base_relation_needs_prime(self):
        """Test composite orders are rejected"""
        with self.assertRaises(InvalidRelationError):
            base_relation(6)

    def test_non_vanishing_sum_rejected(self):
        """Test a relation must sum to zero"""
        with self.assertRaises(InvalidRelationError):
            Relation(CycSum(3, ((0, 1), (1, 1))))

    def test_compose_r5_r3(self):
        """Test (R_5:R_3) anchored at 1 is the six-term relation"""
        composed = compose(base_relation(5), [(base_relation(3), RootOfUnity(5, 0))])
        self.assertEqual(composed.weight, 6)
        self.assertEqual(canonical_form(composed), canonical_form(r5_r3_relation()))

    def test_compose_with_r2_is_rotation(self):
        """Test subtracting an R_2 changes nothing up to rotation"""
        composed = compose(base_relation(5), [(base_relation(2), RootOfUnity(5, 0))])
        self.assertEqual(canonical_form(composed), canonical_form(base_relation(5)))

    def test_compose_r7_r5(self):
        """Test (R_7:R_5) has weight 10"""
        composed = compose(base_relation(7), [(base_relation(5), RootOfUnity(7, 0))])
        self.assertEqual(composed.weight, 10)
        self.assertTrue(is_minimal(composed))

    def test_compose_errors(self):
        """Test anchor collisions and misplaced subtrahends are rejected"""
        r5, r3 = base_relation(5), base_relation(3)
        with self.assertRaises(CompositionError):
            compose(r5, [(r3, RootOfUnity(5, 1)), (r3, RootOfUnity(10, 2))])
        with self.assertRaises(CompositionError):
            compose(r5, [(r3, RootOfUnity(7, 1))])
        with self.assertRaises(CompositionError):
            compose(r5, [(r3.rotated(RootOfUnity(5, 2)), RootOfUnity(5, 0))])

    def test_compose_weight_mismatch(self):
        """Test a composed sum with the wrong weight is rejected"""
        r7, r5 = base_relation(7), base_relation(5)
        with mock.patch.object(relation_module, 'fold_signs', return_value=base_relation(3).terms):
            with self.assertRaises(CompositionError) as cm:
                compose(r7, [(r5, RootOfUnity(7, 0))])
        self.assertIn('differs from 10', str(cm.exception))

    def test_minimality(self):
        """Test minimal and non-minimal relations are told apart"""
        self.assertTrue(is_minimal(base_relation(5)))
        self.assertTrue(is_minimal(r5_r3_relation()))
        union = disjoint_union(base_relation(2), base_relation(3))
        self.assertEqual(union.weight, 5)
        self.assertFalse(is_minimal(union))

    def test_canonical_form_of_rotations(self):
        """Test every rotation of a relation has the same canonical form"""
        r3 = base_relation(3)
        expected = canonical_form(r3)
        self.assertEqual(expected.terms.terms, ((0, 1), (1, 1), (2, 1)))
        big = lifted(r3, 12)
        for k in range(12):
            self.assertEqual(canonical_form(big.rotated(RootOfUnity(12, k))), expected)
        r5 = base_relation(5)
        self.assertEqual(canonical_form(r5.rotated(RootOfUnity(5, 1))), canonical_form(r5))

    def test_canonical_form_separates_classes(self):
        """Test rotation-inequivalent relations keep distinct forms"""
        r5, r3 = base_relation(5), base_relation(3)
        adjacent = compose(r5, [(r3, RootOfUnity(5, 0)), (r3, RootOfUnity(5, 1))])
        apart = compose(r5, [(r3, RootOfUnity(5, 0)), (r3, RootOfUnity(5, 2))])
        self.assertNotEqual(canonical_form(adjacent), canonical_form(apart))


class EnumerationTestCase(SimpleTestCase):
    """Test cases for the minimal relation census"""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.census = enumerate_minimal(12)

    def test_total_is_107(self):
        """Test the census has 107 relations"""
        self.assertEqual(sum(cls.count for cls, _ in self.census), 107)

    def test_class_counts_and_order(self):
        """Test every class count and the table order"""
        labels = [cls.label for cls, _ in self.census]
        self.assertEqual(labels, list(MINIMAL_RELATION_TABLE))
        for cls, relations in self.census:
            self.assertEqual(cls.count, MINIMAL_RELATION_TABLE[cls.label], cls.label)
            self.assertEqual(len(relations), cls.count)
            for relation in relations:
                self.assertEqual(relation.weight, cls.weight)

    def test_r7_with_r3_counts(self):
        """Test (R_7:jR_3) has C(7,j)/7 members"""
        counts = {cls.label: cls.count for cls, _ in self.census}
        self.assertEqual(counts['(R_7:R_3)'], comb(7, 1) // 7)
        for j in range(2, 6):
            self.assertEqual(counts[f'(R_7:{j}R_3)'], comb(7, j) // 7)

    def test_weight_twelve_total(self):
        """Test 69 relations have weight 12"""
        total = sum(cls.count for cls, _ in self.census if cls.weight == 12)
        self.assertEqual(total, 69)

    def test_relations_are_minimal_and_distinct(self):
        """Test every relation vanishes, is minimal and is its own canonical form"""
        forms = set()
        for _, relations in self.census:
            for relation in relations:
                self.assertTrue(cyc_is_zero(relation.terms))
                self.assertTrue(is_minimal(relation))
                self.assertEqual(canonical_form(relation), relation)
                forms.add(relation)
        self.assertEqual(len(forms), 107)

    def test_smaller_weight_is_prefix(self):
        """Test a smaller bound keeps only the lighter classes"""
        census = enumerate_minimal(7)
        self.assertEqual(sum(cls.count for cls, _ in census), 7)

    def test_weight_above_range(self):
        """Test weights above 12 are refused"""
        with self.assertRaises(UnsupportedRangeError):
            enumerate_minimal(13)
