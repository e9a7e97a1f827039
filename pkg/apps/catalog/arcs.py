"""
Arc sequences and the affine families of the catalog.

Arcs are fractions of the circumference. An ArcSextuple lists the six arcs
cut by three crossing chords in circular order u, x, v, y, w, z; positions
0, 2, 4 form the class (U, V, W) and positions 1, 3, 5 the class (X, Y, Z).
"""

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from apps.exactnum.rational import format_rational
from apps.exactnum.sines import check_partition

_AFFINE_TERM = re.compile(r'([+-]?)(\d+(?:/\d+)?)?(t)?')


@dataclass(frozen=True)
class AffineForm:
    """const + slope * t"""

    const: Fraction
    slope: Fraction = Fraction(0)

    @classmethod
    def parse(cls, text):
        """Read forms such as "1/3-2t", "t" or "-1/6+4t"."""
        text = text.replace(' ', '')
        const = Fraction(0)
        slope = Fraction(0)
        position = 0
        while position < len(text):
            match = _AFFINE_TERM.match(text, position)
            sign, number, variable = match.groups()
            if match.end() == position or (number is None and variable is None):
                raise ValueError(f"Cannot parse affine form {text!r}")
            value = Fraction(number) if number else Fraction(1)
            if sign == '-':
                value = -value
            if variable:
                slope += value
            else:
                const += value
            position = match.end()
        return cls(const, slope)

    def at(self, t):
        return self.const + self.slope * t

    def __str__(self):
        pieces = []
        if self.const or not self.slope:
            pieces.append(format_rational(self.const))
        if self.slope:
            magnitude = abs(self.slope)
            coefficient = '' if magnitude == 1 else format_rational(magnitude)
            sign = '-' if self.slope < 0 else ('+' if pieces else '')
            pieces.append(f"{sign}{coefficient}t")
        return ''.join(pieces)


@dataclass(frozen=True)
class AffineFamily:
    """Forms in one parameter t, valid on the open interval (lower, upper)."""

    forms: tuple
    lower: Fraction
    upper: Fraction

    @classmethod
    def parse(cls, texts, lower, upper):
        return cls(
            tuple(AffineForm.parse(text) for text in texts),
            Fraction(lower),
            Fraction(upper),
        )

    def at(self, t):
        return tuple(form.at(t) for form in self.forms)

    def contains(self, t):
        return self.lower < t < self.upper

    def solve(self, values):
        """The t in range with at(t) == values, or None."""
        t = None
        for form, value in zip(self.forms, values):
            if form.slope == 0:
                if form.const != value:
                    return None
                continue
            candidate = (value - form.const) / form.slope
            if t is None:
                t = candidate
            elif candidate != t:
                return None
        if t is None or not self.contains(t):
            return None
        return t

    def sums_to_one(self):
        return (
            sum(form.const for form in self.forms) == 1
            and sum(form.slope for form in self.forms) == 0
        )

    def positive_on_range(self):
        for form in self.forms:
            low, high = form.at(self.lower), form.at(self.upper)
            if low < 0 or high < 0 or (low == 0 and high == 0):
                return False
        return True

    def samples(self, count):
        """`count` evenly spaced rational parameters strictly inside the range."""
        width = self.upper - self.lower
        return [self.lower + width * Fraction(j, count + 1) for j in range(1, count + 1)]


class FamilyPattern(AffineFamily):
    """A one-parameter family of triples, forms in (U, V, W, X, Y, Z) order."""


class MultiFamily(AffineFamily):
    """A one-parameter family of k-diagonal points, 2k arcs counterclockwise."""

    @property
    def k(self):
        return len(self.forms) // 2


@dataclass(frozen=True)
class ArcSextuple:
    arcs: tuple

    def __post_init__(self):
        arcs = tuple(Fraction(a) for a in self.arcs)
        if len(arcs) != 6:
            raise ValueError(f"An arc sextuple needs six arcs, got {len(arcs)}")
        check_partition(arcs)
        object.__setattr__(self, 'arcs', arcs)

    @classmethod
    def from_triples(cls, u, v, w, x, y, z):
        """Interleave table order (U, V, W, X, Y, Z) into circular order."""
        return cls((u, x, v, y, w, z))

    @property
    def first_class(self):
        return self.arcs[0::2]

    @property
    def second_class(self):
        return self.arcs[1::2]

    def sine_arguments(self):
        return self.first_class + self.second_class

    def __str__(self):
        return ' '.join(format_rational(a) for a in self.arcs)


def canonical_sextuple(sextuple):
    """
    Sort both alternation classes and put the one with the smaller
    least element first (ties broken on the whole triple).
    """
    first = tuple(sorted(sextuple.first_class))
    second = tuple(sorted(sextuple.second_class))
    return (min(first, second), max(first, second))


def dihedral_images(arcs):
    """Every rotation and reflection of a circular arc sequence."""
    arcs = tuple(arcs)
    size = len(arcs)
    mirrored = tuple(reversed(arcs))
    for shift in range(size):
        yield arcs[shift:] + arcs[:shift]
        yield mirrored[shift:] + mirrored[:shift]


def circular_key(arcs):
    """Least image under rotation and reflection; identifies unlabeled configurations."""
    return min(dihedral_images(arcs))


def sub_triples(arcs):
    """
    ArcSextuples of every 3 of the k diagonals of a 2k-arc configuration.

    Diagonal i joins endpoints i and i + k, so choosing i < j < l picks
    endpoints i, j, l, i+k, j+k, l+k in circular order.
    """
    arcs = tuple(arcs)
    k = len(arcs) // 2
    boundaries = [Fraction(0)]
    for arc in arcs:
        boundaries.append(boundaries[-1] + arc)
    for i, j, l in itertools.combinations(range(k), 3):
        points = (i, j, l, i + k, j + k, l + k, 2 * k + i)
        yield ArcSextuple(tuple(
            boundaries[b] - boundaries[a] if b <= 2 * k else
            boundaries[2 * k] - boundaries[a] + boundaries[b - 2 * k]
            for a, b in zip(points, points[1:])
        ))
