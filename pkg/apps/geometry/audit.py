"""
Cross-checks between the scan, the catalog and brute force.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from apps.catalog.arcs import ArcSextuple, circular_key, sub_triples
from apps.catalog.classify import MultiKind, classify, enumerate_triples, validate_multi
from apps.exactnum.sines import sin_product_equal

logger = logging.getLogger(__name__)


def exhaustive_triple_classes(n):
    """
    Concurrent triples of the n-gon by brute force: every split of the
    circle into six positive multiples of 1/n, tested exactly.

    Returns:
        set of circular keys
    """
    seen = set()
    concurrent = set()
    for cuts in itertools.combinations(range(1, n), 5):
        points = (0, *cuts, n)
        arcs = tuple(Fraction(q - p, n) for p, q in zip(points, points[1:]))
        key = circular_key(arcs)
        if key in seen:
            continue
        seen.add(key)
        if sin_product_equal(*ArcSextuple(arcs).sine_arguments()):
            concurrent.add(key)
    logger.debug(f"n={n}: {len(concurrent)} of {len(seen)} triple configurations concurrent")
    return concurrent


def catalog_triple_classes(n):
    return {circular_key(sextuple.arcs) for sextuple, _ in enumerate_triples(n)}


def scan_triple_classes(result):
    """Circular keys of every triple inside the scanned points, the center included."""
    classes = set()
    clusters = result.clusters + ([result.center] if result.center else [])
    for cluster in clusters:
        for sextuple in sub_triples(cluster.arcs(result.n)):
            classes.add(circular_key(sextuple.arcs))
    return classes


@dataclass
class MultiReport:
    labels: Counter
    invalid: list

    @property
    def passed(self):
        return not self.invalid


def multi_cluster_report(result):
    """
    Classify every triple of every off-center multiple point and place the
    points with four or more diagonals against the multi-diagonal catalog.
    """
    labels = Counter()
    invalid = []
    for cluster in result.clusters:
        arcs = cluster.arcs(result.n)
        for sextuple in sub_triples(arcs):
            label = classify(sextuple)
            if not label.is_concurrent:
                invalid.append((cluster, f"triple {sextuple} is not concurrent"))
        if cluster.k >= 4:
            label = validate_multi(arcs, cluster.k)
            labels[label.kind] += 1
            if label.kind is MultiKind.INVALID:
                invalid.append((cluster, str(label)))
    return MultiReport(labels, invalid)


@dataclass
class SeparationReport:
    tolerance: float
    max_spread: float
    min_separation: float

    @property
    def passed(self):
        return self.max_spread <= self.tolerance and self.min_separation >= 10 * self.tolerance


def separation_audit(result, tolerance):
    """Confirmed points are tight; distinct points are far apart compared with the tolerance."""
    report = SeparationReport(tolerance, result.max_spread, result.min_separation)
    if not report.passed:
        logger.warning(
            f"n={result.n}: spread {report.max_spread:.3e}, separation "
            f"{report.min_separation:.3e} against tolerance {tolerance:.1e}"
        )
    return report
