import json
import tempfile
from fractions import Fraction

from django.test import override_settings

from apps.formulas.closed_forms import AK_OVER_N
from apps.formulas.tame import DEFAULT_ANCHORS, tame_fit
from apps.geometry.cache import CountsCache
from apps.geometry.counts import CLOSED_FORM, GEOMETRIC, CountsRecord, closed_record, count_all

from .test_base import TABLE_PER_SLICE, TABLE_SMALL, BaseScanTestCase, slow


class CountsRecordTestCase(BaseScanTestCase):
    """Test cases for assembling counts"""

    def test_square(self):
        """Test the square's one point, eight edges and four regions"""
        record = count_all(4)
        self.assertEqual((record.I, record.E, record.R), (1, 8, 4))
        self.assertEqual(record.provenance, GEOMETRIC)

    def test_known_rows(self):
        """Test I and R for the hexagon and the 30-gon"""
        self.assertEqual((count_all(6).I, count_all(6).R), (13, 24))
        self.assertRowMatches(30, count_all(30))

    def test_table_reproduction(self):
        """Test the geometric counts for n = 3..30"""
        for n in TABLE_SMALL:
            record = count_all(n)
            self.assertRowMatches(n, record)
            self.assertTrue(record.pairs_conserved(), n)
            self.assertTrue(record.same_counts(closed_record(n)), n)

    def test_per_slice(self):
        """Test per-slice counts for small multiples of 6"""
        for n in (6, 12, 18, 24, 30):
            self.assertEqual(tuple(count_all(n).per_slice()), TABLE_PER_SLICE[n], n)

    def test_cumulative_counts(self):
        """Test b_k from the scan and the absence of 8-fold points"""
        b = count_all(30).b
        self.assertEqual(b[7], 30)
        self.assertEqual(b[8], 0)
        self.assertEqual(b[2] + 105, 27405)

    def test_closed_record(self):
        """Test the closed-form record carries its provenance"""
        record = closed_record(30)
        self.assertEqual(record.provenance, CLOSED_FORM)
        self.assertRowMatches(30, record)

    def test_json_round_trip(self):
        """Test records survive JSON and the timing field can be dropped"""
        record = count_all(12)
        data = json.loads(json.dumps(record.as_json()))
        self.assertEqual(CountsRecord.from_json(data), record)
        self.assertNotIn('elapsed_ms', record.as_json(deterministic=True))
        self.assertEqual(record.as_json()['a']['4'], 12)


class CountsCacheTestCase(BaseScanTestCase):
    """Test cases for the JSON result cache"""

    def setUp(self):
        """Set up a throwaway cache directory"""
        self.directory = tempfile.TemporaryDirectory()
        self.cache = CountsCache(self.directory.name, version='test')

    def tearDown(self):
        self.directory.cleanup()

    def test_cache_hit_is_identical(self):
        """Test a warm read returns the cold result exactly"""
        cold = count_all(18, cache=self.cache)
        warm = count_all(18, cache=self.cache)
        self.assertEqual(cold, warm)
        self.assertEqual(json.dumps(cold.as_json()), json.dumps(warm.as_json()))
        self.assertTrue(self.cache.storage.exists('counts-n18-slice-vtest.json'))

    def test_version_in_key(self):
        """Test another code version misses the cache"""
        count_all(10, cache=self.cache)
        other = CountsCache(self.directory.name, version='other')
        self.assertIsNone(other.load(10, 'slice'))
        self.assertIsNotNone(self.cache.load(10, 'slice'))

    def test_overwrite_keeps_name(self):
        """Test storing twice keeps one file under the same name"""
        record = count_all(8, cache=self.cache)
        self.cache.store(record)
        self.assertEqual(self.cache.storage.listdir('')[1], ['counts-n8-slice-vtest.json'])

    @override_settings(NGON_CODE_VERSION='9.9.9')
    def test_default_version_from_settings(self):
        """Test the version defaults to NGON_CODE_VERSION"""
        cache = CountsCache(self.directory.name)
        self.assertEqual(cache.name(7, 'full'), 'counts-n7-full-v9.9.9.json')


class GeometricTableTestCase(BaseScanTestCase):
    """Slow checks of the published tables and closed forms against scans"""

    @slow
    def test_closed_forms_up_to_120(self):
        """Test closed forms equal the scan for n = 3..120"""
        for n in range(3, 121):
            self.assertTrue(count_all(n).same_counts(closed_record(n)), n)

    @slow
    def test_per_slice_spot_rows(self):
        """Test per-slice rows for n = 60, 90, 120 and 210"""
        for n in (60, 90, 120, 210):
            self.assertEqual(tuple(count_all(n).per_slice()), TABLE_PER_SLICE[n], n)

    @slow
    def test_per_slice_420(self):
        """Test the largest tabulated polygon"""
        self.assertEqual(tuple(count_all(420, jobs=0).per_slice()), TABLE_PER_SLICE[420])

    @slow
    def test_fit_geometric_samples(self):
        """Test fitting scanned a_k/n and b_8/n on the default anchors"""
        records = {n: count_all(n, jobs=0) for n in DEFAULT_ANCHORS}
        for k, function in AK_OVER_N.items():
            fitted = tame_fit({n: Fraction(record.a[k], n) for n, record in records.items()})
            self.assertEqual(fitted, function, k)
        fitted = tame_fit({n: Fraction(record.b[8], n) for n, record in records.items()})
        self.assertTrue(fitted.is_zero())
