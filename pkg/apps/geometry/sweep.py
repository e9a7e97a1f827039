"""
Per-diagonal sweep: every intersection point on one diagonal, clustered
along the chord and confirmed exactly.

Workers run these functions in separate processes, so nothing here
touches Django settings; the caller passes tolerance and mode in.
"""

import itertools
import multiprocessing
import os
from dataclasses import dataclass, field

import numpy as np

from .diagonals import Diagonal, canonical_rotation, concurrent_exact


# Chord positions carry rounding error; below this floor the crossings of
# one point can land in separate groups.
MIN_TOLERANCE = 1e-12


class ScanError(RuntimeError):
    """Exact confirmation contradicted the numeric clustering."""


def diagonal_arrays(n):
    """Endpoints of every diagonal, indexed in sorted Diagonal order."""
    a, b = np.triu_indices(n, k=2)
    keep = (b - a) != n - 1
    return a[keep].astype(np.int64), b[keep].astype(np.int64)


def vertex_coordinates(n):
    angles = 2 * np.pi * np.arange(n) / n
    return np.cos(angles), np.sin(angles)


def sweep_indices(n, mode):
    """Diagonals to sweep along: all of them, or those from vertex 0 in slice mode."""
    a, b = diagonal_arrays(n)
    if mode == 'slice':
        return np.flatnonzero(a == 0)
    return np.arange(len(a))


def crossing_partners(n, index, a, b):
    """Indices of the diagonals crossing diagonal `index`, center pairs excluded."""
    ai, bi = a[index], b[index]
    inside_a = (ai < a) & (a < bi)
    inside_b = (ai < b) & (b < bi)
    outside_a = (a < ai) | (a > bi)
    outside_b = (b < ai) | (b > bi)
    mask = (inside_a & outside_b) | (outside_a & inside_b)
    if 2 * (bi - ai) == n:
        mask &= 2 * (b - a) != n
    return np.flatnonzero(mask)


def _rotation_codes(n, a1, b1, a2, b2, shift):
    """Integer codes of rotated diagonal pairs, ordered as sorted tuples compare."""
    ends = [(v + shift) % n for v in (a1, b1, a2, b2)]
    lo1, hi1 = np.minimum(ends[0], ends[1]), np.maximum(ends[0], ends[1])
    lo2, hi2 = np.minimum(ends[2], ends[3]), np.maximum(ends[2], ends[3])
    first = lo1 * n + hi1
    second = lo2 * n + hi2
    return np.minimum(first, second) * n * n + np.maximum(first, second)


def least_rotation_mask(n, a1, b1, a2, b2):
    """True where the pair of diagonals is already its own least rotation."""
    identity = _rotation_codes(n, a1, b1, a2, b2, 0)
    keep = np.ones(len(identity), dtype=bool)
    for vertex in (a1, b1, a2, b2):
        shifted = _rotation_codes(n, a1, b1, a2, b2, (-vertex) % n)
        keep &= identity <= shifted
    return keep


@dataclass
class SweepOutput:
    """Records found while sweeping one batch of diagonals."""

    pair_first: list = field(default_factory=list)
    pair_second: list = field(default_factory=list)
    pair_x: list = field(default_factory=list)
    pair_y: list = field(default_factory=list)
    clusters: list = field(default_factory=list)
    min_separation: float = float('inf')
    max_spread: float = 0.0

    def merge(self, other):
        self.pair_first += other.pair_first
        self.pair_second += other.pair_second
        self.pair_x += other.pair_x
        self.pair_y += other.pair_y
        self.clusters += other.clusters
        self.min_separation = min(self.min_separation, other.min_separation)
        self.max_spread = max(self.max_spread, other.max_spread)


class DiagonalSweep:
    """Sweeps the diagonals of one n-gon; one instance per worker process."""

    def __init__(self, n, mode, tolerance):
        self.n = n
        self.mode = mode
        self.tolerance = max(tolerance, MIN_TOLERANCE)
        self.a, self.b = diagonal_arrays(n)
        self.xs, self.ys = vertex_coordinates(n)

    def diagonal(self, index):
        return Diagonal(int(self.a[index]), int(self.b[index]))

    def _positions(self, index, partners):
        """Distance along the chord, and coordinates, of each crossing."""
        ax, ay = self.xs[self.a[index]], self.ys[self.a[index]]
        bx, by = self.xs[self.b[index]], self.ys[self.b[index]]
        cx, cy = self.xs[self.a[partners]], self.ys[self.a[partners]]
        dx, dy = self.xs[self.b[partners]], self.ys[self.b[partners]]
        ex, ey = bx - ax, by - ay
        fx, fy = dx - cx, dy - cy
        t = ((cx - ax) * fy - (cy - ay) * fx) / (ex * fy - ey * fx)
        return t * np.hypot(ex, ey), ax + t * ex, ay + t * ey

    def _keeps_pairs(self, index, partners):
        if self.mode == 'slice':
            first = np.full(len(partners), self.a[index])
            second = np.full(len(partners), self.b[index])
            return least_rotation_mask(
                self.n, first, second, self.a[partners], self.b[partners]
            )
        return partners > index

    def _keeps_cluster(self, index, members):
        if self.mode == 'slice':
            diagonals = tuple(self.diagonal(m) for m in members)
            return canonical_rotation(diagonals, self.n) == diagonals
        return members[0] == index

    def _split_exact(self, index, group):
        """Partition partners lying close together by exact concurrency with `index`."""
        d = self.diagonal(index)
        classes = []
        for partner in group:
            e = self.diagonal(partner)
            for members in classes:
                if concurrent_exact(d, self.diagonal(members[0]), e, self.n):
                    members.append(partner)
                    break
            else:
                classes.append([partner])
        return classes

    def _confirm(self, members):
        diagonals = [self.diagonal(m) for m in members]
        for triple in itertools.combinations(diagonals, 3):
            if not concurrent_exact(*triple, self.n):
                raise ScanError(
                    f"n={self.n}: diagonals {', '.join(map(str, triple))} "
                    f"clustered together but are not concurrent"
                )
        if len(members) >= 8:
            raise ScanError(
                f"n={self.n}: {len(members)} diagonals meet off center at "
                f"{', '.join(map(str, diagonals))}"
            )

    def sweep(self, index, output):
        partners = crossing_partners(self.n, index, self.a, self.b)
        if not len(partners):
            return
        s, px, py = self._positions(index, partners)
        order = np.argsort(s, kind='stable')
        partners, s, px, py = partners[order], s[order], px[order], py[order]

        gaps = np.diff(s)
        wide = gaps > self.tolerance
        if wide.any():
            output.min_separation = min(output.min_separation, float(gaps[wide].min()))
        starts = np.concatenate(([0], np.flatnonzero(wide) + 1))
        sizes = np.diff(np.concatenate((starts, [len(s)])))

        single = starts[sizes == 1]
        keep = self._keeps_pairs(index, partners[single])
        single = single[keep]
        self._emit_pairs(index, partners[single], px[single], py[single], output)

        for start, size in zip(starts[sizes > 1], sizes[sizes > 1]):
            span = slice(start, start + size)
            position = dict(zip(partners[span].tolist(), range(start, start + size)))
            classes = self._split_exact(index, partners[span].tolist())
            for members in classes:
                rows = [position[m] for m in members]
                output.max_spread = max(output.max_spread, float(s[rows].max() - s[rows].min()))
            if len(classes) > 1:
                firsts = sorted(s[position[members[0]]] for members in classes)
                output.min_separation = min(output.min_separation, float(np.diff(firsts).min()))
            for members in classes:
                rows = [position[m] for m in members]
                if len(members) == 1:
                    partner = np.array(members)
                    if self._keeps_pairs(index, partner)[0]:
                        self._emit_pairs(index, partner, px[rows], py[rows], output)
                    continue
                cluster = tuple(sorted([int(index), *members]))
                self._confirm(cluster)
                if self._keeps_cluster(index, cluster):
                    output.clusters.append(
                        (cluster, float(px[rows].mean()), float(py[rows].mean()))
                    )

    def _emit_pairs(self, index, partners, px, py, output):
        first = np.minimum(partners, index)
        second = np.maximum(partners, index)
        output.pair_first.append(first)
        output.pair_second.append(second)
        output.pair_x.append(px)
        output.pair_y.append(py)


_worker_sweeps = {}


def sweep_batch(task):
    """Pool entry point: sweep a batch of diagonal indices."""
    n, mode, tolerance, indices = task
    key = (n, mode, tolerance)
    if key not in _worker_sweeps:
        _worker_sweeps.clear()
        _worker_sweeps[key] = DiagonalSweep(n, mode, tolerance)
    sweeper = _worker_sweeps[key]
    output = SweepOutput()
    for index in indices:
        sweeper.sweep(int(index), output)
    return output


def resolve_jobs(jobs):
    """0 means one job per available core."""
    if jobs < 0:
        raise ValueError(f"jobs must be at least 0, got {jobs}")
    return jobs or os.cpu_count() or 1


def run_sweeps(n, mode, tolerance, jobs=1):
    """Sweep every relevant diagonal, batched round-robin across `jobs` processes."""
    jobs = resolve_jobs(jobs)
    indices = sweep_indices(n, mode)
    batches = max(1, min(len(indices), 4 * jobs))
    tasks = [(n, mode, tolerance, indices[start::batches]) for start in range(batches)]
    if jobs == 1:
        outputs = [sweep_batch(task) for task in tasks]
    else:
        with multiprocessing.Pool(jobs) as pool:
            outputs = pool.map(sweep_batch, tasks)
    total = SweepOutput()
    for output in outputs:
        total.merge(output)
    return total
