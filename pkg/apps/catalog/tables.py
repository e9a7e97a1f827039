"""
The solution catalog as exact data.

TRIPLE_FAMILIES    the four one-parameter families of concurrent triples
SPORADIC_SOLUTIONS the 65 isolated triples, grouped by denominator
FOUR_DIAGONAL_FAMILIES / FIVE_DIAGONAL_FAMILIES  one-parameter families of
                   four- and five-diagonal points, arcs counterclockwise
EXCEPTIONAL_DENOMINATORS  the only denominators of k >= 4 points outside
                   those families
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from apps.exactnum.rational import parse_rational
from apps.exactnum.sines import sin_product_equal

from .arcs import ArcSextuple, FamilyPattern, MultiFamily, canonical_sextuple, sub_triples

logger = logging.getLogger(__name__)


class CatalogMismatchError(ValueError):
    """A catalog row that fails the exact identity, or a classification gap."""


# (U, V, W, X, Y, Z, lower, upper)
TRIPLE_FAMILIES = (
    FamilyPattern.parse(('1/6', 't', '1/3-2t', '1/3+t', 't', '1/6-t'), 0, '1/6'),
    FamilyPattern.parse(('1/6', '1/2-3t', 't', '1/6-t', '2t', '1/6+t'), 0, '1/6'),
    FamilyPattern.parse(('1/6', '1/6-2t', '2t', '1/6-2t', 't', '1/2+t'), 0, '1/12'),
    FamilyPattern.parse(('1/3-4t', 't', '1/3+t', '1/6-2t', '3t', '1/6+t'), 0, '1/12'),
)


@dataclass(frozen=True)
class SporadicSolution:
    index: int
    denominator: int
    relation_type: str
    values: tuple

    @cached_property
    def sextuple(self):
        return ArcSextuple.from_triples(*self.values)

    @cached_property
    def key(self):
        return canonical_sextuple(self.sextuple)


# denominator -> [(relation type, rows)], rows as "U V W X Y Z"
_SPORADIC_ROWS = (
    (30, '2(R_5:R_3)', (
        '1/10 2/15 3/10 2/15 1/6 1/6',
        '1/15 1/15 7/15 1/15 1/10 7/30',
        '1/30 7/30 4/15 1/15 1/10 3/10',
        '1/30 1/10 7/15 1/15 1/15 4/15',
        '1/30 1/15 19/30 1/15 1/10 1/10',
    )),
    (30, '(R_5:R_3)+2R_3', (
        '1/15 1/6 4/15 1/10 1/10 3/10',
        '1/15 2/15 11/30 1/10 1/6 1/6',
        '1/30 1/6 13/30 1/10 2/15 2/15',
        '1/30 1/30 7/10 1/30 1/15 2/15',
    )),
    (30, 'R_5+R_3+2R_2', (
        '1/30 7/30 3/10 1/15 2/15 7/30',
        '1/30 1/6 11/30 1/15 1/10 4/15',
        '1/30 1/10 13/30 1/30 2/15 4/15',
        '1/30 1/15 8/15 1/30 1/10 7/30',
    )),
    (42, '(R_7:5R_3)', (
        '1/14 5/42 5/14 2/21 5/42 5/21',
        '1/21 4/21 13/42 1/14 1/6 3/14',
        '1/42 3/14 5/14 1/21 1/6 4/21',
        '1/42 1/6 19/42 1/14 2/21 4/21',
        '1/42 1/6 13/42 1/21 1/14 8/21',
        '1/42 1/21 13/21 1/42 1/14 3/14',
    )),
    (60, '2(R_5:R_3)', (
        '1/20 1/12 29/60 1/15 1/10 13/60',
        '1/20 1/12 9/20 1/15 1/12 4/15',
        '1/20 1/12 5/12 1/20 1/10 3/10',
        '1/60 4/15 3/10 1/20 1/12 17/60',
        '1/60 13/60 9/20 1/12 1/10 2/15',
        '1/60 13/60 5/12 1/20 2/15 1/6',
    )),
    (60, '(R_5:3R_3)+2R_2', (
        '1/12 1/6 17/60 2/15 3/20 11/60',
        '1/12 2/15 19/60 1/10 3/20 13/60',
        '1/15 11/60 13/60 1/12 1/10 7/20',
        '1/20 11/60 3/10 1/12 7/60 4/15',
        '1/20 1/10 23/60 1/15 1/12 19/60',
        '1/30 7/60 19/60 1/20 1/15 5/12',
        '1/30 1/12 7/12 1/15 1/10 2/15',
        '1/30 1/20 11/20 1/30 1/15 4/15',
        '1/60 3/10 7/20 1/12 7/60 2/15',
        '1/60 4/15 23/60 1/12 1/10 3/20',
        '1/60 7/30 5/12 1/15 7/60 3/20',
        '1/60 13/60 11/30 1/20 1/12 4/15',
        '1/60 1/6 31/60 1/15 1/10 2/15',
        '1/60 1/6 5/12 1/20 1/15 17/60',
        '1/60 2/15 9/20 1/30 1/12 17/60',
        '1/60 1/10 31/60 1/30 1/15 4/15',
    )),
    (84, '(R_7:R_3)+2R_2', (
        '1/12 3/14 19/84 11/84 13/84 4/21',
        '1/14 11/84 23/84 1/12 2/21 29/84',
        '1/21 13/84 23/84 1/14 1/12 31/84',
        '1/42 1/12 7/12 1/21 1/14 4/21',
        '1/84 25/84 5/14 5/84 1/12 4/21',
        '1/84 5/21 5/12 5/84 1/14 17/84',
        '1/84 3/14 37/84 1/21 1/12 17/84',
        '1/84 1/6 43/84 1/21 1/14 4/21',
    )),
    (90, '(R_5:R_3)+2R_3', (
        '1/18 13/90 7/18 11/90 2/15 7/45',
        '1/45 19/90 16/45 1/18 1/10 23/90',
        '1/90 23/90 31/90 2/45 1/15 5/18',
        '1/90 17/90 47/90 1/18 4/45 2/15',
    )),
    (120, '(R_5:R_3)+3R_2', (
        '13/120 3/20 31/120 2/15 19/120 23/120',
        '1/12 19/120 29/120 1/10 13/120 37/120',
        '1/20 23/120 29/120 1/15 13/120 41/120',
        '1/60 13/120 73/120 1/20 1/12 2/15',
        '1/120 7/20 43/120 7/120 11/120 2/15',
        '1/120 3/10 49/120 7/120 1/12 17/120',
        '1/120 4/15 53/120 1/20 11/120 17/120',
        '1/120 13/60 61/120 1/20 1/12 2/15',
    )),
    (210, '(R_7:(R_5:2R_3))', (
        '1/15 41/210 8/35 1/14 31/210 61/210',
        '13/210 1/10 83/210 1/14 4/35 9/35',
        '1/35 2/15 97/210 1/14 17/210 47/210',
        '1/210 3/14 121/210 11/210 1/15 3/35',
    )),
)


def _build_sporadics():
    rows = []
    for denominator, relation_type, texts in _SPORADIC_ROWS:
        for text in texts:
            values = tuple(parse_rational(piece) for piece in text.split())
            rows.append(SporadicSolution(len(rows) + 1, denominator, relation_type, values))
    return tuple(rows)


SPORADIC_SOLUTIONS = _build_sporadics()

SPORADIC_DENOMINATORS = tuple(sorted({row.denominator for row in SPORADIC_SOLUTIONS}))

FOUR_DIAGONAL_FAMILIES = tuple(MultiFamily.parse(forms, 0 if low is None else low, high) for forms, low, high in (
    (('t', 't', 't', '1/6-2t', '1/6', '1/3+t', '1/6', '1/6-2t'), None, '1/12'),
    (('t', '1/6-t', '1/6-t', '1/6-t', 't', '1/6', '1/6+t', '1/6'), None, '1/6'),
    (('1/6-4t', '2t', 't', '3t', '1/6-4t', '1/6', '1/6+t', '1/3+t'), None, '1/24'),
    (('2t', '1/2-t', '2t', '1/6-2t', 't', '1/6-t', 't', '1/6-2t'), None, '1/12'),
    (('1/3-4t', '1/6+t', '1/2-3t', '-1/6+4t', '1/6-2t', 't', '1/6-t', '-1/6+4t'), '1/24', '1/12'),
    (('2t', 't', '3t', '1/6-2t', '1/6', '1/6-t', '1/3-t', '1/6-2t'), None, '1/12'),
    (('t', 't', '2t', '1/3-t', '1/6', '1/6-t', '1/6-t', '1/6-t'), None, '1/6'),
    (('1/3-4t', '1/6', 't', 't', '1/6-2t', '1/3-2t', '3t', '3t'), None, '1/12'),
    (('2t', '1/3-2t', '1/6-t', '1/6-t', '1/6', '1/6', 't', 't'), None, '1/6'),
    (('1/3-4t', '2t', 't', 't', '1/6-2t', '1/6', '1/6+t', '1/6+t'), None, '1/12'),
    (('1/3-4t', '2t', '1/6-t', 't', '1/6-2t', '2t', '1/3-t', '3t'), None, '1/12'),
    (('2t', '1/6-t', 't', '1/6-t', 't', '1/6-t', '2t', '1/2-3t'), None, '1/6'),
))

FIVE_DIAGONAL_FAMILIES = tuple(MultiFamily.parse(forms, 0 if low is None else low, high) for forms, low, high in (
    (('t', '2t', '1/6-2t', '1/6', '1/6-t', '1/6-t', '1/6', '1/6-2t', '2t', 't'), None, '1/12'),
    (('t', '2t', '1/6-4t', '1/6', '1/6+t', '1/6+t', '1/6', '1/6-4t', '2t', 't'), None, '1/24'),
    (('t', '1/6-2t', '-1/6+4t', '1/3-4t', '1/6+t', '1/6+t', '1/3-4t', '-1/6+4t', '1/6-2t', 't'),
     '1/24', '1/12'),
    (('t', '1/6-2t', '2t', '1/3-4t', '3t', '3t', '1/3-4t', '2t', '1/6-2t', 't'), None, '1/12'),
))

EXCEPTIONAL_DENOMINATORS = (
    12, 18, 24, 30, 36, 42, 48, 60, 72, 84, 90, 96, 120, 168, 180, 210, 240, 420,
)


def self_check(family_samples=20, multi_samples=3):
    """
    Re-verify every row with the exact sine-product test.

    Multi-diagonal families are checked through every triple of their
    diagonals at `multi_samples` parameters; 0 keeps only the sum and
    positivity checks.

    Raises:
        CatalogMismatchError naming the first bad row
    """
    for index, family in enumerate(TRIPLE_FAMILIES, 1):
        if not family.sums_to_one() or not family.positive_on_range():
            raise CatalogMismatchError(f"Triple family {index} is not a valid arc family")
        for t in family.samples(family_samples):
            if not sin_product_equal(*family.at(t)):
                raise CatalogMismatchError(f"Triple family {index} fails at t={t}")

    for row in SPORADIC_SOLUTIONS:
        if sum(row.values) != 1 or not sin_product_equal(*row.values):
            raise CatalogMismatchError(
                f"Sporadic row {row.index} (denominator {row.denominator}) fails"
            )

    for label, families in (('four', FOUR_DIAGONAL_FAMILIES), ('five', FIVE_DIAGONAL_FAMILIES)):
        for index, family in enumerate(families, 1):
            if not family.sums_to_one() or not family.positive_on_range():
                raise CatalogMismatchError(f"{label}-diagonal family {index} is not a valid arc family")
            for t in family.samples(multi_samples):
                for triple in sub_triples(family.at(t)):
                    if not sin_product_equal(*triple.sine_arguments()):
                        raise CatalogMismatchError(
                            f"{label}-diagonal family {index} fails at t={t}"
                        )
    logger.info(
        f"Catalog self-check passed: {len(TRIPLE_FAMILIES)} families, "
        f"{len(SPORADIC_SOLUTIONS)} sporadic rows, "
        f"{len(FOUR_DIAGONAL_FAMILIES) + len(FIVE_DIAGONAL_FAMILIES)} multi-diagonal families"
    )
