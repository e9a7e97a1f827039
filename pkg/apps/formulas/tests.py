import random
from fractions import Fraction as F
from math import comb

from django.test import SimpleTestCase

from apps.formulas.closed_forms import (
    AK_OVER_N,
    E_closed,
    I_closed,
    R_closed,
    V_closed,
    InconsistentCountsError,
    ak_closed,
    ak_from_bk,
    ak_map,
    b2_closed,
    bk_from_ak,
    max_offcenter_multiplicity,
)
from apps.formulas.tame import (
    BASIS,
    DEFAULT_ANCHORS,
    InsufficientAnchorsError,
    NotTameError,
    TameFunction,
    delta,
    tame_eval,
    tame_fit,
)
from apps.geometry.tests.test_base import TABLE_PER_SLICE, TABLE_SMALL, slow


class TameBasisTestCase(SimpleTestCase):
    """Test cases for the tame basis and fitting"""

    def test_delta(self):
        """Test the divisibility indicator"""
        self.assertEqual(delta(6, 30), 1)
        self.assertEqual(delta(4, 30), 0)
        with self.assertRaises(ValueError):
            delta(0, 5)

    def test_special_tag(self):
        """Test the residue tag separates n = 6 mod 24"""
        function = TameFunction.of({'d24(n-6)': 1})
        self.assertEqual(tame_eval(function, 30), 1)
        self.assertEqual(tame_eval(function, 54), 1)
        self.assertEqual(tame_eval(function, 24), 0)
        self.assertEqual(tame_eval(function, 6), 0)

    def test_unknown_tag(self):
        """Test unknown basis tags are rejected"""
        with self.assertRaises(ValueError):
            TameFunction.of({'d7': 1})

    def test_json_export(self):
        """Test coefficients export as exact strings"""
        self.assertEqual(AK_OVER_N[7].as_json(), {'d30': '1', 'd60': '4'})
        self.assertEqual(AK_OVER_N[5].as_json()['n*d6'], '1/4')

    def test_fit_recovers_closed_forms(self):
        """Test fitting a_k/n on the default anchors returns the closed form"""
        for k, function in AK_OVER_N.items():
            samples = {n: tame_eval(function, n) for n in DEFAULT_ANCHORS}
            self.assertEqual(tame_fit(samples), function, k)

    def test_fit_zero(self):
        """Test fitting identically zero samples"""
        fitted = tame_fit({n: 0 for n in DEFAULT_ANCHORS})
        self.assertTrue(fitted.is_zero())

    def test_insufficient_anchors(self):
        """Test too few anchors are reported"""
        with self.assertRaises(InsufficientAnchorsError):
            tame_fit({n: 1 for n in DEFAULT_ANCHORS[:-1]})

    def test_not_tame(self):
        """Test a quartic is not tame once an extra sample pins it down"""
        samples = {n: F(n ** 4) for n in DEFAULT_ANCHORS + (11,)}
        with self.assertRaises(NotTameError):
            tame_fit(samples)

    def test_fit_random_functions(self):
        """Test fitting recovers random rational coefficients"""
        rng = random.Random(1997)
        for _ in range(10):
            self.assertFitRecovers(rng)

    @slow
    def test_fit_many_random_functions(self):
        """Test fitting recovers 100 random rational coefficient lists"""
        rng = random.Random(2006)
        for _ in range(100):
            self.assertFitRecovers(rng)

    def assertFitRecovers(self, rng):
        coefficients = {
            tag: F(rng.randint(-50, 50), rng.randint(1, 48))
            for tag in rng.sample(BASIS, rng.randint(1, len(BASIS)))
        }
        function = TameFunction.of(coefficients)
        samples = {n: tame_eval(function, n) for n in DEFAULT_ANCHORS}
        self.assertEqual(tame_fit(samples), function)

    def test_basis_size(self):
        """Test the basis has as many tags as default anchors"""
        self.assertEqual(len(BASIS), len(DEFAULT_ANCHORS))


class ClosedFormTestCase(SimpleTestCase):
    """Test cases for the closed-form counts"""

    def test_small_table(self):
        """Test the closed forms against every row for n = 3..30"""
        for n, row in TABLE_SMALL.items():
            self.assertEqual(tuple(ak_map(n).values()), row[:6], n)
            self.assertEqual(I_closed(n), row[6], n)
            self.assertEqual(R_closed(n), row[7], n)

    def test_per_slice_table(self):
        """Test the per-slice counts for n = 6, 12, ..., 420"""
        for n, row in TABLE_PER_SLICE.items():
            normalized = tuple(ak_closed(k, n) // n for k in range(2, 8))
            self.assertEqual(normalized, row[:6], n)
            self.assertEqual((I_closed(n) - 1) // n, row[6], n)

    def test_spot_values(self):
        """Test single closed-form values"""
        self.assertEqual(I_closed(7), 35)
        self.assertEqual(ak_closed(7, 30), 30)
        self.assertEqual(ak_closed(4, 420), 273 * 420)
        self.assertEqual(ak_closed(3, 9), 0)
        self.assertEqual(b2_closed(6), 12)
        self.assertEqual(b2_closed(12), 228 + 3 * 60 + 6 * 12)
        self.assertEqual(tame_eval(AK_OVER_N[7], 60), 5)
        self.assertEqual(tame_eval(AK_OVER_N[7], 90), 1)

    def test_euler_consistency(self):
        """Test I, V, E and R agree with the a_k for many n"""
        for n in range(3, 121):
            a = ak_map(n)
            self.assertEqual(I_closed(n), delta(2, n) + sum(a.values()), n)
            self.assertEqual(R_closed(n), E_closed(n) - V_closed(n) + 1, n)
            self.assertEqual(bk_from_ak(a, 2), b2_closed(n), n)

    def test_small_polygons(self):
        """Test the triangle and the square"""
        self.assertEqual((I_closed(3), R_closed(3)), (0, 1))
        self.assertEqual((I_closed(4), R_closed(4)), (1, 4))
        self.assertEqual((I_closed(5), R_closed(5)), (5, 11))
        with self.assertRaises(ValueError):
            I_closed(2)

    def test_counts_are_integers_up_to_1000(self):
        """Test every a_k is a nonnegative integer and nothing reaches 8 diagonals"""
        for n in range(3, 1001):
            a = ak_map(n)
            self.assertEqual(bk_from_ak(a, 8), 0, n)
            if n % 2:
                self.assertEqual(I_closed(n), comb(n, 4), n)

    def test_odd_polygons_general_position(self):
        """Test odd n have only simple crossings"""
        for n in (7, 9, 15, 21, 105):
            a = ak_map(n)
            self.assertEqual(a[2], n * (n - 1) * (n - 2) * (n - 3) // 24, n)
            self.assertEqual(sum(a.values()), a[2], n)

    def test_max_multiplicity(self):
        """Test the largest off-center multiplicity matches the a_k"""
        for n in range(5, 127):
            a = ak_map(n)
            largest = max((k for k, count in a.items() if count), default=0)
            self.assertEqual(max_offcenter_multiplicity(n), largest, n)

    def test_bk_round_trip(self):
        """Test cumulative counts invert back to multiplicities"""
        a = ak_map(30)
        b = {k: bk_from_ak(a, k) for k in range(2, 8)}
        self.assertEqual(b[7], 30)
        self.assertEqual(bk_from_ak(a, 8), 0)
        self.assertEqual(ak_from_bk(b), a)

    def test_inconsistent_bk(self):
        """Test impossible cumulative counts are rejected"""
        with self.assertRaises(InconsistentCountsError):
            ak_from_bk({2: 2, 3: 1})

    def test_multiplicity_range(self):
        """Test k outside 2 to 7 is rejected"""
        with self.assertRaises(ValueError):
            ak_closed(8, 30)
