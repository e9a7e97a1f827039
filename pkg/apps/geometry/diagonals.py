"""
Diagonals of the regular n-gon and exact predicates on them.

Vertex j sits at angle 2*pi*j/n on the unit circle. Everything here is
integer or Fraction arithmetic; floating point never decides a predicate.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from apps.catalog.arcs import ArcSextuple
from apps.exactnum.sines import sin_product_equal


class DiagonalError(ValueError):
    """Vertices that do not form a diagonal, or chords in the wrong position."""


@dataclass(frozen=True, order=True)
class Diagonal:
    a: int
    b: int

    @classmethod
    def of(cls, p, q, n):
        """The diagonal joining vertices p and q of the n-gon, in either order."""
        if n < 3:
            raise DiagonalError(f"A polygon needs at least 3 vertices, got {n}")
        a, b = sorted((p % n, q % n))
        if a == b or b - a in (1, n - 1):
            raise DiagonalError(f"({p}, {q}) is not a diagonal of the {n}-gon")
        return cls(a, b)

    def is_diameter(self, n):
        return 2 * (self.b - self.a) == n

    def rotated(self, shift, n):
        return Diagonal.of(self.a + shift, self.b + shift, n)

    def __str__(self):
        return f"{self.a}-{self.b}"


def all_diagonals(n):
    """Every diagonal of the n-gon in sorted order."""
    return [
        Diagonal(a, b)
        for a in range(n)
        for b in range(a + 2, n)
        if b - a != n - 1
    ]


def crossing(d1, d2, n):
    """True iff the diagonals have four distinct endpoints that interleave."""
    if {d1.a, d1.b} & {d2.a, d2.b}:
        return False
    return (d1.a < d2.a < d1.b) != (d1.a < d2.b < d1.b)


def is_center_pair(d1, d2, n):
    return d1 != d2 and d1.is_diameter(n) and d2.is_diameter(n)


def _check_triple(diagonals, n):
    for first, second in itertools.combinations(diagonals, 2):
        if not crossing(first, second, n):
            raise DiagonalError(f"{first} and {second} do not cross in the {n}-gon")


def arcs_of_triple(d1, d2, d3, n):
    """
    The six arcs cut by three pairwise crossing diagonals.

    With endpoints p0 < ... < p5 the chords are p0p3, p1p4 and p2p5, and
    the arcs are read counterclockwise from p0.
    """
    _check_triple((d1, d2, d3), n)
    points = sorted((d1.a, d1.b, d2.a, d2.b, d3.a, d3.b))
    chords = {frozenset((points[i], points[i + 3])) for i in range(3)}
    if chords != {frozenset((d.a, d.b)) for d in (d1, d2, d3)}:
        raise DiagonalError(f"{d1}, {d2}, {d3} are not in crossing position")
    gaps = [points[i + 1] - points[i] for i in range(5)] + [points[0] + n - points[5]]
    return ArcSextuple(tuple(Fraction(gap, n) for gap in gaps))


def concurrent_exact(d1, d2, d3, n):
    """True iff the three diagonals pass through one interior point."""
    if not all(crossing(p, q, n) for p, q in itertools.combinations((d1, d2, d3), 2)):
        return False
    if all(d.is_diameter(n) for d in (d1, d2, d3)):
        return True
    return sin_product_equal(*arcs_of_triple(d1, d2, d3, n).sine_arguments())


def canonical_rotation(diagonals, n):
    """Lexicographically least rotation of a diagonal set, as a sorted tuple."""
    diagonals = tuple(diagonals)
    shifts = {(-vertex) % n for d in diagonals for vertex in (d.a, d.b)}
    return min(
        tuple(sorted(d.rotated(shift, n) for d in diagonals)) for shift in shifts
    )


def cluster_arcs(diagonals, n):
    """The 2k arcs between consecutive endpoints of k concurrent diagonals."""
    points = sorted(vertex for d in diagonals for vertex in (d.a, d.b))
    if len(set(points)) != len(points):
        raise DiagonalError("Concurrent diagonals cannot share an endpoint")
    gaps = [q - p for p, q in zip(points, points[1:])] + [points[0] + n - points[-1]]
    return tuple(Fraction(gap, n) for gap in gaps)
