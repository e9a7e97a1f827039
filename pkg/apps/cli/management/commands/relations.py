from apps.relations.enumeration import MAX_SUPPORTED_WEIGHT, UnsupportedRangeError, enumerate_minimal

from ...base import NgonCommand, usage_error
from ...reports import render_rows, to_json


class Command(NgonCommand):
    help = 'List the minimal vanishing sums of roots of unity up to a weight, grouped by class'

    def add_arguments(self, parser):
        parser.add_argument('--max-weight', type=int, default=MAX_SUPPORTED_WEIGHT)
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        try:
            census = enumerate_minimal(options['max_weight'])
        except UnsupportedRangeError as e:
            raise usage_error(str(e)) from e

        total = sum(relation_class.count for relation_class, _ in census)
        if options['format'] == 'json':
            report = to_json([
                {
                    'class_label': relation_class.label,
                    'count': relation_class.count,
                    'relations': [[list(term) for term in relation.as_triples()] for relation in relations],
                }
                for relation_class, relations in census
            ])
        else:
            rows = [(rc.label, rc.weight, rc.count) for rc, _ in census]
            report = render_rows(('class', 'weight', 'count'), rows, options['format'])
            if options['format'] == 'table':
                report += f"{total} relations\n"
        self.emit(report, options['out'])
