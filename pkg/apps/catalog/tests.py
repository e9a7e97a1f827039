from fractions import Fraction as F
from math import lcm

from django.test import SimpleTestCase

from apps.catalog.arcs import AffineForm, ArcSextuple, canonical_sextuple, circular_key
from apps.catalog.classify import (
    LabelKind,
    MultiKind,
    classify,
    classify_all,
    enumerate_triples,
    validate_multi,
)
from apps.catalog.export import table_csv
from apps.catalog.tables import (
    FIVE_DIAGONAL_FAMILIES,
    FOUR_DIAGONAL_FAMILIES,
    SPORADIC_DENOMINATORS,
    SPORADIC_SOLUTIONS,
    TRIPLE_FAMILIES,
    self_check,
)
from apps.exactnum.sines import ArcPartitionError, sin_product_equal


def triples(*values):
    return ArcSextuple.from_triples(*(F(v) for v in values))


class ArcFormTestCase(SimpleTestCase):
    """Test cases for affine forms and arc sextuples"""

    def test_parse_forms(self):
        """Test affine forms read back as written"""
        for text in ('1/3-2t', 't', '-1/6+4t', '1/6', '1/2+t', '3t'):
            self.assertEqual(str(AffineForm.parse(text)), text)
        self.assertEqual(AffineForm.parse('1/3-2t').at(F(1, 30)), F(4, 15))
        with self.assertRaises(ValueError):
            AffineForm.parse('1/3*x')

    def test_sextuple_validation(self):
        """Test a sextuple must partition the circle"""
        with self.assertRaises(ArcPartitionError):
            ArcSextuple((F(1, 6),) * 5 + (F(1, 5),))
        with self.assertRaises(ValueError):
            ArcSextuple((F(1, 2), F(1, 2)))

    def test_interleaving(self):
        """Test table order is interleaved around the circle"""
        sextuple = triples('1/10', '2/15', '3/10', '2/15', '1/6', '1/6')
        self.assertEqual(sextuple.arcs[0::2], (F(1, 10), F(2, 15), F(3, 10)))
        self.assertEqual(sextuple.first_class, (F(1, 10), F(2, 15), F(3, 10)))

    def test_canonical_sextuple(self):
        """Test sorting within classes and ordering the classes"""
        expected = ((F(1, 10), F(2, 15), F(3, 10)), (F(2, 15), F(1, 6), F(1, 6)))
        self.assertEqual(
            canonical_sextuple(triples('3/10', '2/15', '1/10', '1/6', '2/15', '1/6')), expected
        )
        self.assertEqual(
            canonical_sextuple(triples('1/10', '2/15', '3/10', '2/15', '1/6', '1/6')), expected
        )
        self.assertEqual(
            canonical_sextuple(triples('2/15', '1/6', '1/6', '1/10', '2/15', '3/10')), expected
        )

    def test_circular_key_symmetry(self):
        """Test rotations and the mirror image share a key"""
        arcs = (F(1, 10), F(2, 15), F(3, 10), F(2, 15), F(1, 6), F(1, 6))
        key = circular_key(arcs)
        self.assertEqual(circular_key(arcs[2:] + arcs[:2]), key)
        self.assertEqual(circular_key(arcs[1:] + arcs[:1]), key)
        self.assertEqual(circular_key(tuple(reversed(arcs))), key)


class CatalogDataTestCase(SimpleTestCase):
    """Test cases for the embedded catalog tables"""

    def test_row_counts(self):
        """Test the size of every table"""
        self.assertEqual(len(TRIPLE_FAMILIES), 4)
        self.assertEqual(len(SPORADIC_SOLUTIONS), 65)
        self.assertEqual(len(FOUR_DIAGONAL_FAMILIES), 12)
        self.assertEqual(len(FIVE_DIAGONAL_FAMILIES), 4)
        self.assertEqual(SPORADIC_DENOMINATORS, (30, 42, 60, 84, 90, 120, 210))

    def test_sporadic_rows_hold(self):
        """Test every sporadic row sums to 1 and satisfies the identity"""
        for row in SPORADIC_SOLUTIONS:
            self.assertEqual(sum(row.values), 1, row.index)
            self.assertTrue(sin_product_equal(*row.values), row.index)
            self.assertEqual(lcm(*(v.denominator for v in row.values)), row.denominator, row.index)

    def test_families_hold_on_samples(self):
        """Test each triple family on 20 rational parameters"""
        for family in TRIPLE_FAMILIES:
            self.assertTrue(family.sums_to_one())
            for t in family.samples(20):
                self.assertTrue(sin_product_equal(*family.at(t)))

    def test_full_self_check(self):
        """Test the self-check including multi-diagonal triples"""
        self_check(family_samples=20, multi_samples=3)

    def test_export_csv(self):
        """Test CSV exports carry exact fractions"""
        sporadics = table_csv('sporadics').splitlines()
        self.assertEqual(sporadics[0], 'index,denominator,relation_type,U,V,W,X,Y,Z')
        self.assertEqual(sporadics[1], '1,30,2(R_5:R_3),1/10,2/15,3/10,2/15,1/6,1/6')
        self.assertEqual(len(sporadics), 66)
        families = table_csv('families').splitlines()
        self.assertEqual(families[1], '1,1/6,t,1/3-2t,1/3+t,t,1/6-t,0,1/6')
        self.assertEqual(len(table_csv('four').splitlines()), 13)
        self.assertTrue(table_csv('five').startswith('index,k,arc1,'))
        with self.assertRaises(ValueError):
            table_csv('seven')


class ClassifyTestCase(SimpleTestCase):
    """Test cases for triple classification"""

    def test_trivial(self):
        """Test equal classes summing to 1/2 are trivial"""
        label = classify(triples('1/8', '1/8', '1/4', '1/4', '1/8', '1/8'))
        self.assertEqual(label.kind, LabelKind.TRIVIAL)
        self.assertEqual(str(label), 'Trivial')

    def test_family_one(self):
        """Test family 1 at t=1/30"""
        label = classify(triples('1/6', '1/30', '4/15', '11/30', '1/30', '2/15'))
        self.assertEqual(label.kind, LabelKind.FAMILY)
        self.assertEqual((label.index, label.t), (1, F(1, 30)))

    def test_first_sporadic(self):
        """Test the first sporadic row"""
        label = classify(triples('1/10', '2/15', '3/10', '2/15', '1/6', '1/6'))
        self.assertEqual(str(label), 'Sporadic #1 (denominator 30)')

    def test_every_sporadic_row(self):
        """Test each sporadic row classifies as itself"""
        for row in SPORADIC_SOLUTIONS:
            label = classify(row.sextuple)
            self.assertEqual((label.kind, label.index), (LabelKind.SPORADIC, row.index))

    def test_not_concurrent(self):
        """Test a perturbed row is not concurrent"""
        label = classify(triples('1/10', '2/15', '3/10', '2/15', '1/5', '2/15'))
        self.assertFalse(label.is_concurrent)

    def test_duplications(self):
        """Test the coincidences between families and the trivial solutions"""
        f2 = TRIPLE_FAMILIES[1]
        self.assertEqual(classify(ArcSextuple.from_triples(*f2.at(F(1, 12)))).kind, LabelKind.TRIVIAL)

        f1, f4 = TRIPLE_FAMILIES[0], TRIPLE_FAMILIES[3]
        left = ArcSextuple.from_triples(*f1.at(F(1, 18)))
        right = ArcSextuple.from_triples(*f4.at(F(1, 18)))
        self.assertEqual(canonical_sextuple(left), canonical_sextuple(right))
        indices = {m.index for m in classify_all(left) if m.kind is LabelKind.FAMILY}
        self.assertEqual(indices, {1, 4})
        self.assertEqual(classify(left).index, 1)

        left = ArcSextuple.from_triples(*f2.at(F(1, 24)))
        right = ArcSextuple.from_triples(*f4.at(F(1, 24)))
        self.assertEqual(canonical_sextuple(left), canonical_sextuple(right))
        self.assertEqual(classify(right).index, 2)


class EnumerateTriplesTestCase(SimpleTestCase):
    """Test cases for per-n triple enumeration"""

    def test_odd_is_empty(self):
        """Test odd polygons have no concurrent triples"""
        self.assertEqual(enumerate_triples(7), [])
        self.assertEqual(enumerate_triples(15), [])

    def test_hexagon_center_only(self):
        """Test the hexagon has only the center configuration"""
        result = enumerate_triples(6)
        self.assertEqual(len(result), 1)
        sextuple, label = result[0]
        self.assertEqual(sextuple.arcs, (F(1, 6),) * 6)
        self.assertEqual(label.kind, LabelKind.TRIVIAL)

    def test_labels_are_concurrent(self):
        """Test no enumerated configuration is labeled not concurrent"""
        for n in (12, 24, 30, 42):
            for sextuple, label in enumerate_triples(n):
                self.assertTrue(label.is_concurrent, f"n={n} {sextuple}")
                self.assertTrue(all((a * n).denominator == 1 for a in sextuple.arcs))

    def test_sporadics_appear_with_their_denominator(self):
        """Test sporadic labels appear exactly when d divides n"""
        kinds = {label.kind for _, label in enumerate_triples(30)}
        self.assertIn(LabelKind.SPORADIC, kinds)
        kinds = {label.kind for _, label in enumerate_triples(24)}
        self.assertNotIn(LabelKind.SPORADIC, kinds)

    def test_small_n_rejected(self):
        """Test n below 3 is rejected"""
        with self.assertRaises(ValueError):
            enumerate_triples(2)


class ValidateMultiTestCase(SimpleTestCase):
    """Test cases for k-diagonal validation"""

    def test_four_diagonal_family(self):
        """Test the first four-diagonal family at t=1/24"""
        arcs = FOUR_DIAGONAL_FAMILIES[0].at(F(1, 24))
        self.assertEqual(
            arcs,
            (F(1, 24), F(1, 24), F(1, 24), F(1, 12), F(1, 6), F(3, 8), F(1, 6), F(1, 12)),
        )
        label = validate_multi(arcs, 4)
        self.assertEqual((label.kind, label.index, label.t), (MultiKind.IN_FAMILY, 1, F(1, 24)))

    def test_family_found_after_rotation_and_reflection(self):
        """Test matching ignores the starting endpoint and orientation"""
        arcs = FOUR_DIAGONAL_FAMILIES[0].at(F(1, 24))
        turned = tuple(reversed(arcs[3:] + arcs[:3]))
        label = validate_multi(turned, 4)
        self.assertEqual((label.index, label.t), (1, F(1, 24)))

    def test_five_diagonal_family(self):
        """Test the fourth five-diagonal family at t=1/30"""
        label = validate_multi(FIVE_DIAGONAL_FAMILIES[3].at(F(1, 30)), 5)
        self.assertEqual((label.kind, label.index, label.t), (MultiKind.IN_FAMILY, 4, F(1, 30)))

    def test_exceptional_and_invalid(self):
        """Test exceptional denominators and malformed arcs"""
        label = validate_multi((F(1, 12),) * 12, 6)
        self.assertEqual((label.kind, label.denominator), (MultiKind.EXCEPTIONAL, 12))
        label = validate_multi((F(1, 8),) * 8, 4)
        self.assertEqual(label.kind, MultiKind.INVALID)
        label = validate_multi((F(1, 10),) * 8, 4)
        self.assertEqual(label.kind, MultiKind.INVALID)
        with self.assertRaises(ValueError):
            validate_multi((F(1, 6),) * 6, 3)
