"""
Report formatting shared by the commands. Fractions are written as "p/q"
strings, never decimals.
"""

import csv
import io
import json

from django.core.serializers.json import DjangoJSONEncoder

FORMATS = ('json', 'csv', 'table')

COUNTS_HEADER = ('n', 'a2', 'a3', 'a4', 'a5', 'a6', 'a7', 'I', 'R')
PER_SLICE_HEADER = ('n', 'a2/n', 'a3/n', 'a4/n', 'a5/n', 'a6/n', 'a7/n', '(I-1)/n')
FIT_HEADER = ('column', 'basis', 'coefficient')


def counts_row(record):
    return (record.n, *(record.a[k] for k in range(2, 8)), record.I, record.R)


def per_slice_row(record):
    return (record.n, *record.per_slice())


def to_json(data):
    return json.dumps(data, cls=DjangoJSONEncoder, indent=2)


def to_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def to_table(header, rows):
    """Right-aligned plain text columns."""
    cells = [[str(value) for value in row] for row in (header, *rows)]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ['  '.join(value.rjust(width) for value, width in zip(row, widths)) for row in cells]
    return '\n'.join(lines) + '\n'


def render_rows(header, rows, output_format):
    """One report from a header and rows: JSON objects keyed by header, CSV or a text table."""
    if output_format == 'json':
        return to_json([dict(zip(header, row)) for row in rows])
    if output_format == 'csv':
        return to_csv(header, rows)
    return to_table(header, rows)


def record_line(record):
    a = ' '.join(f"a{k}={record.a[k]}" for k in range(2, 8))
    return f"{record.provenance} n={record.n} {a} I={record.I} V={record.V} E={record.E} R={record.R}"


def fit_rows(fits):
    """Rows of (column, basis tag, p/q) for fitted tame functions in column order."""
    return [
        (column, tag, coefficient)
        for column, function in fits.items()
        for tag, coefficient in function.as_json().items()
    ]
