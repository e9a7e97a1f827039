import random
from fractions import Fraction as F

import mpmath as mp
from django.test import SimpleTestCase

from apps.exactnum.cyclotomic import (
    CycOp,
    CycSum,
    RootOfUnity,
    cyc_arith,
    cyc_is_zero,
    cyclotomic_polynomial,
    fold_signs,
    lift,
    rotate,
)
from apps.exactnum.rational import format_rational, parse_rational, rat
from apps.exactnum.sines import ArcPartitionError, sin_product_equal


def root_sum(order, exponents):
    return CycSum(order, tuple((e, 1) for e in exponents))


class RationalTestCase(SimpleTestCase):
    """Test cases for rational construction and formatting"""

    def test_rat_reduces(self):
        """Test fractions are stored in lowest terms"""
        self.assertEqual(rat(2, 4), F(1, 2))
        self.assertEqual(rat(7, 30), F(7, 30))

    def test_rat_sign_on_numerator(self):
        """Test a negative denominator moves its sign up"""
        value = rat(3, -6)
        self.assertEqual(value.numerator, -1)
        self.assertEqual(value.denominator, 2)

    def test_rat_zero_denominator(self):
        """Test a zero denominator is rejected"""
        with self.assertRaises(ZeroDivisionError):
            rat(1, 0)

    def test_parse_and_format(self):
        """Test text round trip for CLI input and report output"""
        self.assertEqual(parse_rational('7/30'), F(7, 30))
        self.assertEqual(parse_rational(' -2/4 '), F(-1, 2))
        self.assertEqual(format_rational(F(7, 30)), '7/30')
        self.assertEqual(format_rational(F(4, 2)), '2')
        for bad in ('', '1/0', '0.5', 'a/b'):
            with self.assertRaises(ValueError):
                parse_rational(bad)


class CyclotomicTestCase(SimpleTestCase):
    """Test cases for cyclotomic sums and the zero test"""

    def test_cyclotomic_polynomials(self):
        """Test a few known cyclotomic polynomials"""
        self.assertEqual(cyclotomic_polynomial(1), (-1, 1))
        self.assertEqual(cyclotomic_polynomial(2), (1, 1))
        self.assertEqual(cyclotomic_polynomial(6), (1, -1, 1))
        self.assertEqual(cyclotomic_polynomial(4), (1, 0, 1))
        self.assertEqual(cyclotomic_polynomial(8), (1, 0, 0, 0, 1))
        self.assertEqual(cyclotomic_polynomial(30), (1, 1, 0, -1, -1, -1, 0, 1, 1))
        self.assertEqual(cyclotomic_polynomial(12), (1, 0, -1, 0, 1))
        # first cyclotomic polynomial with a coefficient of absolute value 2
        self.assertIn(-2, cyclotomic_polynomial(105))

    def test_root_of_unity_reduces_exponent(self):
        """Test exponents are kept modulo the order"""
        root = RootOfUnity(6, 13)
        self.assertEqual(root.exponent, 1)
        self.assertEqual(RootOfUnity(6, 4).reduced(), RootOfUnity(3, 2))

    def test_prime_relation_is_zero(self):
        """Test 1 + z5 + ... + z5^4 vanishes"""
        self.assertTrue(cyc_is_zero(root_sum(5, range(5))))

    def test_r5_r3_relation_is_zero(self):
        """Test z6 + z6^-1 + z5 + z5^2 + z5^3 + z5^4 vanishes"""
        value = cyc_arith(
            root_sum(6, (1, -1)), root_sum(5, (1, 2, 3, 4)), CycOp.ADD
        )
        self.assertEqual(value.ring_order, 30)
        self.assertTrue(cyc_is_zero(value))

    def test_two_roots_not_zero(self):
        """Test 1 + z3 does not vanish"""
        self.assertFalse(cyc_is_zero(root_sum(3, (0, 1))))
        self.assertFalse(cyc_is_zero(CycSum(7, ((0, 3),))))

    def test_rotation_permutes_terms(self):
        """Test rotating R_3 by z3 gives R_3 back"""
        r3 = root_sum(3, range(3))
        self.assertEqual(rotate(r3, RootOfUnity(3, 1)), r3)

    def test_additive_inverse(self):
        """Test a + (-a) is the empty sum"""
        r2 = root_sum(2, (0, 1))
        result = cyc_arith(r2, cyc_arith(r2, None, 'negate'), 'add')
        self.assertTrue(result.is_empty())

    def test_multiplication_mod_order(self):
        """Test z6 * z6^5 = 1"""
        product = cyc_arith(root_sum(6, (1,)), root_sum(6, (5,)), CycOp.MUL)
        self.assertEqual(product.terms, ((0, 1),))

    def test_zero_test_invariant_under_rotation_and_lift(self):
        """Test rotation and lifting never change the zero test"""
        rng = random.Random(11)
        samples = [root_sum(5, range(5)), root_sum(3, (0, 1)), root_sum(12, (0, 4, 8, 3))]
        for _ in range(40):
            order = rng.choice((4, 6, 10, 12, 15))
            samples.append(
                CycSum(order, tuple((rng.randrange(order), rng.randint(-2, 2)) for _ in range(4)))
            )
        for value in samples:
            expected = cyc_is_zero(value)
            for k in range(value.ring_order):
                self.assertEqual(cyc_is_zero(rotate(value, RootOfUnity(value.ring_order, k))), expected)
            self.assertEqual(cyc_is_zero(lift(value, 7 * value.ring_order)), expected)
            self.assertEqual(cyc_is_zero(lift(value, 2 * value.ring_order).minimal_ring()), expected)

    def test_fold_signs(self):
        """Test minus signs become rotations by z2"""
        folded = fold_signs(CycSum(3, ((0, 1), (1, -1))))
        self.assertEqual(folded, CycSum(6, ((0, 1), (5, 1))))


class SineProductTestCase(SimpleTestCase):
    """Test cases for the exact sine-product identity"""

    def test_center_sextuple(self):
        """Test six equal arcs satisfy the identity"""
        self.assertTrue(sin_product_equal(*(F(1, 6),) * 6))

    def test_first_sporadic_row(self):
        """Test the first denominator-30 sporadic solution"""
        self.assertTrue(
            sin_product_equal(F(1, 10), F(2, 15), F(3, 10), F(2, 15), F(1, 6), F(1, 6))
        )

    def test_perturbed_sporadic_row(self):
        """Test a perturbed sporadic row fails"""
        self.assertFalse(
            sin_product_equal(
                F(1, 10), F(2, 15), F(3, 10), F(2, 15), F(1, 6) + F(1, 30), F(1, 6) - F(1, 30)
            )
        )

    def test_invalid_partition(self):
        """Test arcs outside (0,1) or not summing to 1 are rejected"""
        with self.assertRaises(ArcPartitionError):
            sin_product_equal(F(0), F(1, 5), F(1, 5), F(1, 5), F(1, 5), F(1, 5))
        with self.assertRaises(ArcPartitionError):
            sin_product_equal(*(F(1, 7),) * 6)

    def test_symmetries(self):
        """Test permutations inside triples and the triple swap"""
        row = (F(1, 30), F(7, 30), F(4, 15), F(1, 15), F(1, 10), F(3, 10))
        self.assertTrue(sin_product_equal(*row))
        self.assertTrue(sin_product_equal(row[2], row[0], row[1], row[5], row[3], row[4]))
        self.assertTrue(sin_product_equal(*row[3:], *row[:3]))

    def test_matches_high_precision_evaluation(self):
        """Test 1000 random sextuples against a 60-digit evaluation"""
        rng = random.Random(2024)
        mp.mp.dps = 60
        tolerance = mp.mpf(10) ** -40
        agreed_true = 0
        for _ in range(1000):
            denominator = rng.choice((6, 12, 18, 24, 30, 36, 42, 60))
            cuts = sorted(rng.sample(range(1, denominator), 5))
            parts = [b - a for a, b in zip([0] + cuts, cuts + [denominator])]
            arcs = [F(p, denominator) for p in parts]
            exact = sin_product_equal(*arcs)
            lhs = mp.sin(mp.pi * arcs[0].numerator / arcs[0].denominator)
            rhs = mp.sin(mp.pi * arcs[3].numerator / arcs[3].denominator)
            for a in arcs[1:3]:
                lhs *= mp.sin(mp.pi * a.numerator / a.denominator)
            for a in arcs[4:]:
                rhs *= mp.sin(mp.pi * a.numerator / a.denominator)
            numeric = abs(lhs - rhs) < tolerance
            self.assertEqual(exact, numeric, f"disagreement on {arcs}")
            agreed_true += exact
        self.assertGreater(agreed_true, 0)
