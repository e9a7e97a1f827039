"""
Census of the interior intersection points of a regular n-gon.

A full scan reports every point once. A slice scan reports one point per
rotation orbit: the one whose sorted diagonal set is its own least
rotation. The center, where the n/2 diameters of an even polygon meet,
is always reported once on its own.
"""

import hashlib
import heapq
import logging
import time
from collections import Counter
from dataclasses import dataclass
from math import comb

import numpy as np
from django.conf import settings

from .diagonals import Diagonal, cluster_arcs
from .sweep import MIN_TOLERANCE, ScanError, diagonal_arrays, run_sweeps

logger = logging.getLogger(__name__)

MODES = ('full', 'slice')


@dataclass(frozen=True)
class Cluster:
    diagonals: tuple
    x: float
    y: float
    is_center: bool = False

    @property
    def k(self):
        return len(self.diagonals)

    def arcs(self, n):
        return cluster_arcs(self.diagonals, n)


def expected_pairs(n):
    """Crossing pairs of diagonals that do not meet at the center."""
    return comb(n, 4) - (comb(n // 2, 2) if n % 2 == 0 else 0)


@dataclass
class ScanResult:
    n: int
    mode: str
    clusters: list
    pair_first: np.ndarray
    pair_second: np.ndarray
    pair_x: np.ndarray
    pair_y: np.ndarray
    center: Cluster = None
    min_separation: float = float('inf')
    max_spread: float = 0.0
    elapsed_ms: int = 0

    @property
    def orbit_size(self):
        return self.n if self.mode == 'slice' else 1

    @property
    def pair_total(self):
        """Crossing pairs accounted for by the reported off-center points."""
        return len(self.pair_first) + sum(comb(c.k, 2) for c in self.clusters)

    def _pair_clusters(self):
        a, b = diagonal_arrays(self.n)
        for first, second, x, y in zip(
            self.pair_first.tolist(), self.pair_second.tolist(),
            self.pair_x.tolist(), self.pair_y.tolist(),
        ):
            yield Cluster(
                (Diagonal(int(a[first]), int(b[first])), Diagonal(int(a[second]), int(b[second]))),
                x, y,
            )

    def __iter__(self):
        """Every reported point, the center included, ordered by diagonal set."""
        others = sorted(self.clusters + ([self.center] if self.center else []), key=lambda c: c.diagonals)
        return heapq.merge(others, self._pair_clusters(), key=lambda c: c.diagonals)

    def multiplicity_counts(self):
        """a_k for the whole polygon, k = 2..7, center excluded."""
        counts = Counter({2: len(self.pair_first)})
        counts.update(c.k for c in self.clusters)
        return {k: counts[k] * self.orbit_size for k in range(2, 8)}

    def representatives(self):
        """Reported off-center points per multiplicity, before scaling by orbit size."""
        counts = Counter({2: len(self.pair_first)})
        counts.update(c.k for c in self.clusters)
        return {k: counts[k] for k in range(2, 8)}

    def digest(self):
        """sha256 of the canonical listing; identical for any job count."""
        sha = hashlib.sha256(f"{self.n} {self.mode}\n".encode())
        for cluster in self:
            line = ' '.join(str(d) for d in cluster.diagonals)
            sha.update(f"{cluster.k} {line}\n".encode())
        return sha.hexdigest()


def _as_array(chunks, dtype):
    if not chunks:
        return np.empty(0, dtype=dtype)
    return np.concatenate(chunks).astype(dtype)


def scan(n, mode='slice', jobs=1, tolerance=None):
    """
    Find the interior intersection points of the n-gon's diagonals.

    Args:
        n: number of vertices, at least 3
        mode: 'full' for every point, 'slice' for one per rotation orbit
        jobs: worker processes, 0 for one per core
        tolerance: clustering distance along a chord, NGON_SCAN_TOLERANCE by default

    Returns:
        ScanResult

    Raises:
        ScanError if exact confirmation or the pair total disagrees with
        the numeric pass
    """
    if n < 3:
        raise ValueError(f"A polygon needs at least 3 vertices, got {n}")
    if mode not in MODES:
        raise ValueError(f"Unknown scan mode {mode!r}; choose from {', '.join(MODES)}")
    if tolerance is None:
        tolerance = settings.NGON_SCAN_TOLERANCE
    if tolerance < MIN_TOLERANCE:
        logger.warning(f"Scan tolerance {tolerance:.1e} is below the floor, using {MIN_TOLERANCE:.1e}")
        tolerance = MIN_TOLERANCE

    started = time.perf_counter()
    output = run_sweeps(n, mode, tolerance, jobs)

    first = _as_array(output.pair_first, np.int64)
    second = _as_array(output.pair_second, np.int64)
    x = _as_array(output.pair_x, np.float64)
    y = _as_array(output.pair_y, np.float64)
    order = np.lexsort((second, first))

    a, b = diagonal_arrays(n)
    clusters = sorted(
        (
            Cluster(tuple(Diagonal(int(a[m]), int(b[m])) for m in members), cx, cy)
            for members, cx, cy in output.clusters
        ),
        key=lambda c: c.diagonals,
    )
    center = None
    if n % 2 == 0 and n >= 4:
        half = n // 2
        center = Cluster(tuple(Diagonal(j, j + half) for j in range(half)), 0.0, 0.0, is_center=True)

    result = ScanResult(
        n=n,
        mode=mode,
        clusters=clusters,
        pair_first=first[order],
        pair_second=second[order],
        pair_x=x[order],
        pair_y=y[order],
        center=center,
        min_separation=output.min_separation,
        max_spread=output.max_spread,
    )

    expected = expected_pairs(n) // result.orbit_size
    if result.pair_total != expected:
        raise ScanError(
            f"n={n} ({mode}): clusters account for {result.pair_total} crossing pairs, "
            f"expected {expected}"
        )

    result.elapsed_ms = int((time.perf_counter() - started) * 1000)
    logger.info(
        f"Scanned n={n} ({mode}, jobs={jobs}) in {result.elapsed_ms} ms: "
        f"{len(first)} simple points, {len(clusters)} multiple points"
    )
    return result
