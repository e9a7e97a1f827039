"""
Intersection and region counts assembled from a scan or from the closed forms.
"""

import logging
from dataclasses import dataclass
from math import comb

from apps.formulas.closed_forms import (
    FormulaIntegrityError,
    I_closed,
    R_closed,
    ak_map,
    bk_from_ak,
    edges_from_multiplicities,
)
from apps.formulas.tame import delta

from .scan import scan

logger = logging.getLogger(__name__)

GEOMETRIC = 'geometric'
CLOSED_FORM = 'closed_form'


@dataclass(frozen=True)
class CountsRecord:
    n: int
    a: dict
    I: int
    V: int
    E: int
    R: int
    provenance: str
    mode: str = ''
    elapsed_ms: int = 0
    digest: str = ''

    @classmethod
    def from_multiplicities(cls, n, a, provenance, mode='', elapsed_ms=0, digest=''):
        """Derive I, V, E and R from a_k with the center's delta_2 term and Euler's formula."""
        a = {k: a.get(k, 0) for k in range(2, 8)}
        points = delta(2, n) + sum(a.values())
        vertices = n + points
        edges = edges_from_multiplicities(n, a)
        return cls(
            n=n, a=a, I=points, V=vertices, E=edges, R=edges - vertices + 1,
            provenance=provenance, mode=mode, elapsed_ms=elapsed_ms, digest=digest,
        )

    @property
    def b(self):
        """Diagonal k-subsets meeting off center, k = 2..8."""
        return {k: bk_from_ak(self.a, k) for k in range(2, 9)}

    def per_slice(self):
        """a_k / n and (I - delta_2) / n, the counts for one rotation orbit."""
        values = [self.a[k] for k in range(2, 8)] + [self.I - delta(2, self.n)]
        for value in values:
            if value % self.n:
                raise ValueError(f"n={self.n}: {value} is not divisible by n")
        return [value // self.n for value in values]

    def pairs_conserved(self):
        """Crossing pairs at the points plus those at the center give C(n, 4)."""
        total = sum(comb(k, 2) * count for k, count in self.a.items())
        total += comb(self.n // 2, 2) * delta(2, self.n)
        return total == comb(self.n, 4)

    def same_counts(self, other):
        return (self.n, self.a, self.I, self.E, self.R) == (other.n, other.a, other.I, other.E, other.R)

    def as_json(self, deterministic=False):
        data = {
            'n': self.n,
            'a': {str(k): count for k, count in self.a.items()},
            'b': {str(k): count for k, count in self.b.items()},
            'I': self.I,
            'V': self.V,
            'E': self.E,
            'R': self.R,
            'provenance': self.provenance,
        }
        if self.mode:
            data['mode'] = self.mode
        if self.digest:
            data['scan_digest'] = self.digest
        if not deterministic:
            data['elapsed_ms'] = self.elapsed_ms
        return data

    @classmethod
    def from_json(cls, data):
        return cls(
            n=data['n'],
            a={int(k): count for k, count in data['a'].items()},
            I=data['I'],
            V=data['V'],
            E=data['E'],
            R=data['R'],
            provenance=data['provenance'],
            mode=data.get('mode', ''),
            elapsed_ms=data.get('elapsed_ms', 0),
            digest=data.get('scan_digest', ''),
        )


def closed_record(n):
    record = CountsRecord.from_multiplicities(n, ak_map(n), CLOSED_FORM)
    if (record.I, record.R) != (I_closed(n), R_closed(n)):
        raise FormulaIntegrityError(f"n={n}: closed forms for a_k disagree with I and R")
    return record


def record_from_scan(result):
    return CountsRecord.from_multiplicities(
        result.n, result.multiplicity_counts(), GEOMETRIC, mode=result.mode,
        elapsed_ms=result.elapsed_ms, digest=result.digest(),
    )


def count_all(n, mode='slice', jobs=1, cache=None):
    """
    Counts for the n-gon from a geometric scan.

    Args:
        n: number of vertices, at least 3
        mode: 'full' or 'slice'
        jobs: worker processes, 0 for one per core
        cache: CountsCache to read and fill, or None to always scan
    """
    if cache is not None:
        record = cache.load(n, mode)
        if record is not None:
            logger.info(f"Cache hit for n={n} ({mode})")
            return record
    record = record_from_scan(scan(n, mode=mode, jobs=jobs))
    if cache is not None:
        cache.store(record)
    return record
