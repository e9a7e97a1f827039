"""
Classification of concurrent triples and k-diagonal points.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm

from apps.exactnum.rational import format_rational
from apps.exactnum.sines import sin_product_equal

from .arcs import ArcSextuple, canonical_sextuple, circular_key, dihedral_images
from .tables import (
    EXCEPTIONAL_DENOMINATORS,
    FIVE_DIAGONAL_FAMILIES,
    FOUR_DIAGONAL_FAMILIES,
    SPORADIC_SOLUTIONS,
    TRIPLE_FAMILIES,
    CatalogMismatchError,
)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class LabelKind(Enum):
    TRIVIAL = 'trivial'
    FAMILY = 'family'
    SPORADIC = 'sporadic'
    NOT_CONCURRENT = 'not_concurrent'


@dataclass(frozen=True)
class ClassLabel:
    kind: LabelKind
    index: int = None
    t: Fraction = None
    denominator: int = None

    @property
    def is_concurrent(self):
        return self.kind is not LabelKind.NOT_CONCURRENT

    def __str__(self):
        if self.kind is LabelKind.TRIVIAL:
            return "Trivial"
        if self.kind is LabelKind.FAMILY:
            return f"Family #{self.index} (t={format_rational(self.t)})"
        if self.kind is LabelKind.SPORADIC:
            return f"Sporadic #{self.index} (denominator {self.denominator})"
        return "Not concurrent"


NOT_CONCURRENT = ClassLabel(LabelKind.NOT_CONCURRENT)


def _unique_permutations(values):
    return sorted(set(itertools.permutations(values)))


def _family_parameter(family, key):
    """Least t for which some arrangement of the key matches the family."""
    found = []
    for first, second in (key, key[::-1]):
        for left in _unique_permutations(first):
            for right in _unique_permutations(second):
                t = family.solve(left + right)
                if t is not None:
                    found.append(t)
    return min(found) if found else None


def classify_all(sextuple):
    """
    Every catalog entry the sextuple matches, in priority order:
    Trivial, then families by index, then sporadic rows.
    """
    key = canonical_sextuple(sextuple)
    matches = []
    if key[0] == key[1] and sum(key[0]) == HALF:
        matches.append(ClassLabel(LabelKind.TRIVIAL))
    for index, family in enumerate(TRIPLE_FAMILIES, 1):
        t = _family_parameter(family, key)
        if t is not None:
            matches.append(ClassLabel(LabelKind.FAMILY, index=index, t=t))
    for row in SPORADIC_SOLUTIONS:
        if row.key == key:
            matches.append(ClassLabel(LabelKind.SPORADIC, index=row.index, denominator=row.denominator))
    return matches


def classify(sextuple):
    """
    Label a triple against the catalog.

    Args:
        sextuple: ArcSextuple in circular order

    Returns:
        the highest-priority ClassLabel, NOT_CONCURRENT when nothing matches

    Raises:
        CatalogMismatchError if the label disagrees with the exact identity
    """
    matches = classify_all(sextuple)
    holds = sin_product_equal(*sextuple.sine_arguments())
    if bool(matches) != holds:
        raise CatalogMismatchError(
            f"Catalog and sine identity disagree on {sextuple} "
            f"(matches={[str(m) for m in matches]}, identity={holds})"
        )
    return matches[0] if matches else NOT_CONCURRENT


def _catalog_keys(n):
    keys = set()
    if n % 2 == 0:
        half = n // 2
        for a in range(1, half):
            for b in range(a, half - a):
                c = half - a - b
                if c < b:
                    break
                triple = (Fraction(a, n), Fraction(b, n), Fraction(c, n))
                keys.add((triple, triple))
    for family in TRIPLE_FAMILIES:
        for m in range(1, n):
            t = Fraction(m, n)
            if not family.contains(t):
                continue
            values = family.at(t)
            if all((value * n).denominator == 1 for value in values):
                keys.add(canonical_sextuple(ArcSextuple.from_triples(*values)))
    for row in SPORADIC_SOLUTIONS:
        if n % row.denominator == 0:
            keys.add(row.key)
    return keys


def enumerate_triples(n):
    """
    Concurrent triples of an n-gon, one per configuration up to rotation
    and reflection of the circle.

    Returns:
        list of (ArcSextuple, ClassLabel), sorted by circular key
    """
    if n < 3:
        raise ValueError(f"A polygon needs at least 3 vertices, got {n}")
    classes = set()
    for first, second in _catalog_keys(n):
        for left in _unique_permutations(first):
            for right in _unique_permutations(second):
                arcs = (left[0], right[0], left[1], right[1], left[2], right[2])
                classes.add(circular_key(arcs))
    result = []
    for arcs in sorted(classes):
        sextuple = ArcSextuple(arcs)
        result.append((sextuple, classify(sextuple)))
    logger.debug(f"n={n}: {len(result)} concurrent triple configurations")
    return result


class MultiKind(Enum):
    IN_FAMILY = 'in_family'
    EXCEPTIONAL = 'exceptional'
    INVALID = 'invalid'


@dataclass(frozen=True)
class MultiLabel:
    kind: MultiKind
    index: int = None
    t: Fraction = None
    denominator: int = None
    reason: str = ''

    def __str__(self):
        if self.kind is MultiKind.IN_FAMILY:
            return f"Family #{self.index} (t={format_rational(self.t)})"
        if self.kind is MultiKind.EXCEPTIONAL:
            return f"Exceptional (denominator {self.denominator})"
        return f"Invalid ({self.reason})"


def validate_multi(arcs, k):
    """
    Place a k-diagonal point against the multi-diagonal catalog.

    Args:
        arcs: the 2k arcs between consecutive endpoints, in circular order
        k: number of diagonals, 4 to 7

    Returns:
        MultiLabel: in a family (k = 4, 5), exceptional with a listed
        denominator, or invalid
    """
    if k not in (4, 5, 6, 7):
        raise ValueError(f"Only 4 to 7 diagonals can meet off center, got k={k}")
    arcs = tuple(Fraction(a) for a in arcs)
    if len(arcs) != 2 * k:
        return MultiLabel(MultiKind.INVALID, reason=f"expected {2 * k} arcs, got {len(arcs)}")
    if any(a <= 0 for a in arcs):
        return MultiLabel(MultiKind.INVALID, reason="arcs must be positive")
    if sum(arcs) != 1:
        return MultiLabel(MultiKind.INVALID, reason=f"arcs sum to {sum(arcs)}")

    families = {4: FOUR_DIAGONAL_FAMILIES, 5: FIVE_DIAGONAL_FAMILIES}.get(k, ())
    images = list(dihedral_images(arcs))
    for index, family in enumerate(families, 1):
        found = [t for t in (family.solve(image) for image in images) if t is not None]
        if found:
            return MultiLabel(MultiKind.IN_FAMILY, index=index, t=min(found))

    denominator = lcm(*(a.denominator for a in arcs))
    if denominator in EXCEPTIONAL_DENOMINATORS:
        return MultiLabel(MultiKind.EXCEPTIONAL, denominator=denominator)
    return MultiLabel(
        MultiKind.INVALID,
        denominator=denominator,
        reason=f"denominator {denominator} outside the exceptional list",
    )
