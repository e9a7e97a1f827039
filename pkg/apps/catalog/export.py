"""CSV rows for the catalog tables, fractions as exact "p/q" strings."""

import csv
import io

from apps.exactnum.rational import format_rational

from .tables import (
    FIVE_DIAGONAL_FAMILIES,
    FOUR_DIAGONAL_FAMILIES,
    SPORADIC_SOLUTIONS,
    TRIPLE_FAMILIES,
)

TABLE_CHOICES = ('families', 'sporadics', 'four', 'five')


def family_rows():
    header = ['index', 'U', 'V', 'W', 'X', 'Y', 'Z', 't_min', 't_max']
    rows = [
        [index, *(str(form) for form in family.forms),
         format_rational(family.lower), format_rational(family.upper)]
        for index, family in enumerate(TRIPLE_FAMILIES, 1)
    ]
    return header, rows


def sporadic_rows():
    header = ['index', 'denominator', 'relation_type', 'U', 'V', 'W', 'X', 'Y', 'Z']
    rows = [
        [row.index, row.denominator, row.relation_type, *(format_rational(v) for v in row.values)]
        for row in SPORADIC_SOLUTIONS
    ]
    return header, rows


def multi_rows(families):
    k = families[0].k
    header = ['index', 'k', *(f'arc{i}' for i in range(1, 2 * k + 1)), 't_min', 't_max']
    rows = [
        [index, k, *(str(form) for form in family.forms),
         format_rational(family.lower), format_rational(family.upper)]
        for index, family in enumerate(families, 1)
    ]
    return header, rows


def table_rows(name):
    if name == 'families':
        return family_rows()
    if name == 'sporadics':
        return sporadic_rows()
    if name == 'four':
        return multi_rows(FOUR_DIAGONAL_FAMILIES)
    if name == 'five':
        return multi_rows(FIVE_DIAGONAL_FAMILIES)
    raise ValueError(f"Unknown catalog table {name!r}; choose from {', '.join(TABLE_CHOICES)}")


def table_csv(name):
    header, rows = table_rows(name)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()
