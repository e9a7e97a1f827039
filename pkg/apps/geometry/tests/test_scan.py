from math import comb

import numpy as np

from apps.geometry.diagonals import Diagonal
from apps.geometry.scan import expected_pairs, scan
from apps.geometry.sweep import (
    crossing_partners,
    diagonal_arrays,
    least_rotation_mask,
    resolve_jobs,
    run_sweeps,
)

from .test_base import TABLE_SMALL, BaseScanTestCase, slow


class SweepHelpersTestCase(BaseScanTestCase):
    """Test cases for the vectorized helpers"""

    def test_diagonal_arrays_sorted(self):
        """Test array order matches sorted Diagonal order"""
        a, b = diagonal_arrays(7)
        self.assertEqual(len(a), 14)
        pairs = list(zip(a.tolist(), b.tolist()))
        self.assertEqual(pairs, sorted(pairs))
        self.assertNotIn((0, 6), pairs)

    def test_crossing_partners(self):
        """Test center pairs are left out"""
        a, b = diagonal_arrays(6)
        index = list(zip(a.tolist(), b.tolist())).index((0, 3))
        partners = {(int(a[j]), int(b[j])) for j in crossing_partners(6, index, a, b)}
        self.assertEqual(partners, {(1, 5), (2, 4)})

    def test_least_rotation_mask(self):
        """Test exactly one pair per rotation orbit is kept"""
        n = 9
        a, b = diagonal_arrays(n)
        kept = 0
        for index in np.flatnonzero(a == 0):
            partners = crossing_partners(n, index, a, b)
            mask = least_rotation_mask(
                n, np.full(len(partners), a[index]), np.full(len(partners), b[index]),
                a[partners], b[partners],
            )
            kept += int(mask.sum())
        self.assertEqual(kept, comb(n, 4) // n)

    def test_resolve_jobs(self):
        """Test zero means every core"""
        self.assertGreaterEqual(resolve_jobs(0), 1)
        self.assertEqual(resolve_jobs(3), 3)
        with self.assertRaises(ValueError):
            resolve_jobs(-1)


class ScanTestCase(BaseScanTestCase):
    """Test cases for the intersection point census"""

    def test_pentagon(self):
        """Test the pentagon has five simple points"""
        result = self.scan(5, 'full')
        self.assertEqual(result.multiplicity_counts()[2], 5)
        self.assertEqual(result.clusters, [])
        self.assertIsNone(result.center)

    def test_small_polygons(self):
        """Test the triangle and the square"""
        self.assertEqual(sum(self.scan(3, 'full').multiplicity_counts().values()), 0)
        square = self.scan(4, 'slice')
        self.assertEqual(square.center.diagonals, (Diagonal(0, 2), Diagonal(1, 3)))
        self.assertEqual(sum(square.multiplicity_counts().values()), 0)

    def test_dodecagon(self):
        """Test the 12-gon in both modes"""
        for mode in ('full', 'slice'):
            result = self.scan(12, mode)
            counts = result.multiplicity_counts()
            self.assertEqual((counts[2], counts[3], counts[4]), (228, 60, 12), mode)
            self.assertEqual(result.center.k, 6)
            self.assertTrue(result.center.is_center)
        self.assertEqual(self.scan(12, 'slice').representatives()[4], 1)

    def test_thirty_gon(self):
        """Test the 30-gon's multiplicities and its 15-diagonal center"""
        result = self.scan(30)
        counts = result.multiplicity_counts()
        self.assertEqual(tuple(counts[k] for k in range(2, 8)), (13800, 2250, 420, 180, 120, 30))
        self.assertEqual(result.center.k, 15)

    def test_table_rows(self):
        """Test slice scans against every tabulated n up to 30"""
        for n, row in TABLE_SMALL.items():
            counts = self.scan(n).multiplicity_counts()
            self.assertEqual(tuple(counts[k] for k in range(2, 8)), row[:6], n)

    def test_pair_conservation(self):
        """Test points account for every crossing pair"""
        for n in (7, 8, 18, 24, 30):
            counts = self.scan(n, 'full').multiplicity_counts()
            total = sum(comb(k, 2) * count for k, count in counts.items())
            center = comb(n // 2, 2) if n % 2 == 0 else 0
            self.assertEqual(total + center, comb(n, 4), n)
            self.assertEqual(self.scan(n, 'full').pair_total, expected_pairs(n))

    def test_odd_polygons_have_simple_points_only(self):
        """Test odd n have no multiple points"""
        for n in (9, 15, 21, 25):
            result = self.scan(n)
            self.assertEqual(result.clusters, [], n)
            self.assertEqual(result.multiplicity_counts()[2], comb(n, 4), n)

    def test_full_and_slice_agree(self):
        """Test both modes give the same counts"""
        for n in (6, 12, 18, 24, 30):
            self.assertEqual(
                self.scan(n, 'full').multiplicity_counts(),
                self.scan(n, 'slice').multiplicity_counts(),
                n,
            )

    def test_records_sorted(self):
        """Test iteration is ordered by diagonal set and includes the center"""
        records = list(self.scan(12, 'full'))
        keys = [r.diagonals for r in records]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(sum(r.is_center for r in records), 1)
        self.assertEqual(len(records), 301)

    def test_slice_representatives_are_least_rotations(self):
        """Test each reported point starts at vertex 0"""
        for record in self.scan(24):
            if not record.is_center:
                self.assertEqual(record.diagonals[0].a, 0)

    def test_deterministic_across_jobs(self):
        """Test the digest does not depend on the number of workers"""
        digest = self.scan(30, 'full').digest()
        self.assertEqual(scan(30, mode='full', jobs=4).digest(), digest)
        slice_digest = self.scan(30, 'slice').digest()
        self.assertEqual(scan(30, mode='slice', jobs=4).digest(), slice_digest)

    def test_tiny_tolerance_is_floored(self):
        """Test a tolerance below rounding error still groups concurrent crossings"""
        with self.assertLogs('apps.geometry.scan', level='WARNING'):
            result = scan(12, mode='full', tolerance=1e-17)
        counts = result.multiplicity_counts()
        self.assertEqual((counts[2], counts[3], counts[4]), (228, 60, 12))
        self.assertEqual(result.digest(), self.scan(12, 'full').digest())
        self.assertEqual(len(run_sweeps(12, 'full', 1e-17).clusters), 72)

    def test_rejects_bad_arguments(self):
        """Test n below 3 and unknown modes"""
        with self.assertRaises(ValueError):
            scan(2)
        with self.assertRaises(ValueError):
            scan(12, mode='half')

    @slow
    def test_full_and_slice_agree_up_to_60(self):
        """Test both modes for every multiple of 6 up to 60"""
        for n in range(36, 61, 6):
            self.assertEqual(
                self.scan(n, 'full').multiplicity_counts(),
                self.scan(n, 'slice').multiplicity_counts(),
                n,
            )

    @slow
    def test_deterministic_with_eight_jobs(self):
        """Test digests for 1, 4 and 8 workers at n = 30 and 60"""
        for n in (30, 60):
            digests = {scan(n, mode='full', jobs=jobs).digest() for jobs in (1, 4, 8)}
            self.assertEqual(len(digests), 1, n)
