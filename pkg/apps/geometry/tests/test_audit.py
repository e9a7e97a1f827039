from django.conf import settings

from apps.catalog.classify import MultiKind
from apps.geometry.audit import (
    catalog_triple_classes,
    exhaustive_triple_classes,
    multi_cluster_report,
    scan_triple_classes,
    separation_audit,
)

from .test_base import BaseScanTestCase

COMPLETENESS_N = (6, 8, 10, 12, 18, 24, 30)


class CompletenessTestCase(BaseScanTestCase):
    """Test cases comparing brute force, the catalog and the scan"""

    def test_exhaustive_matches_catalog(self):
        """Test brute force finds exactly the catalog's triples"""
        for n in COMPLETENESS_N:
            self.assertEqual(exhaustive_triple_classes(n), catalog_triple_classes(n), n)

    def test_scan_matches_catalog(self):
        """Test the triples inside scanned points are the catalog's triples"""
        for n in COMPLETENESS_N:
            self.assertEqual(scan_triple_classes(self.scan(n)), catalog_triple_classes(n), n)

    def test_odd_polygon_has_no_triples(self):
        """Test odd polygons have no concurrent triples at all"""
        self.assertEqual(exhaustive_triple_classes(9), set())
        self.assertEqual(scan_triple_classes(self.scan(9)), set())


class MultiClusterTestCase(BaseScanTestCase):
    """Test cases for classifying multiple points"""

    def test_thirty_gon(self):
        """Test every multiple point of the 30-gon is accounted for"""
        report = multi_cluster_report(self.scan(30))
        self.assertTrue(report.passed, report.invalid)
        self.assertEqual(sum(report.labels.values()), 14 + 6 + 4 + 1)

    def test_dodecagon(self):
        """Test the 12-gon's four-diagonal point"""
        report = multi_cluster_report(self.scan(12))
        self.assertTrue(report.passed)
        self.assertNotIn(MultiKind.INVALID, report.labels)

    def test_separation(self):
        """Test confirmed points are tight and distinct points far apart"""
        for n in (24, 30):
            report = separation_audit(self.scan(n, 'full'), settings.NGON_SCAN_TOLERANCE)
            self.assertTrue(report.passed, report)
