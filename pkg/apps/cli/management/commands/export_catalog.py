from apps.catalog.export import TABLE_CHOICES, table_csv, table_rows

from ...base import NgonCommand
from ...reports import to_json


class Command(NgonCommand):
    help = 'Export the catalog tables: triple families, sporadic triples, 4- and 5-diagonal families'
    default_format = 'csv'

    def add_arguments(self, parser):
        parser.add_argument('--table', choices=(*TABLE_CHOICES, 'all'), default='all')
        parser.add_argument('--format', choices=('csv', 'json'), default=self.default_format)
        parser.add_argument('--out', help='Write to this file instead of stdout')

    def handle(self, *args, **options):
        names = TABLE_CHOICES if options['table'] == 'all' else (options['table'],)
        if options['format'] == 'json':
            data = {}
            for name in names:
                header, rows = table_rows(name)
                data[name] = [dict(zip(header, row)) for row in rows]
            report = to_json(data if len(names) > 1 else data[names[0]])
        elif len(names) == 1:
            report = table_csv(names[0])
        else:
            report = '\n'.join(f"# {name}\n{table_csv(name)}" for name in names)
        self.emit(report, options['out'])
