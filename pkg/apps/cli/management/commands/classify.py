from apps.catalog.arcs import ArcSextuple
from apps.catalog.classify import classify, classify_all, validate_multi
from apps.catalog.tables import CatalogMismatchError
from apps.exactnum.rational import parse_rational

from ...base import NgonCommand, usage_error, verification_failure


class Command(NgonCommand):
    help = 'Label arcs against the catalog: six arcs for a triple, 2k arcs for k = 4..7 diagonals'

    def add_arguments(self, parser):
        parser.add_argument('arcs', nargs='+', metavar='ARC', help='Arc as p/q of the circumference')
        parser.add_argument('--interleaved', action='store_true',
                            help='Six arcs are in circular order rather than table order U V W X Y Z')
        parser.add_argument('--all', action='store_true', help='List every matching catalog entry')

    def handle(self, *args, **options):
        try:
            arcs = [parse_rational(text) for text in options['arcs']]
        except ValueError as e:
            raise usage_error(str(e)) from e

        if len(arcs) == 6:
            self.emit(self.triple(arcs, options['interleaved'], options['all']))
        elif len(arcs) % 2 == 0 and 4 <= len(arcs) // 2 <= 7:
            self.emit(str(validate_multi(arcs, len(arcs) // 2)))
        else:
            raise usage_error(f"Expected 6 arcs or 2k arcs with k = 4..7, got {len(arcs)}")

    def triple(self, arcs, interleaved, show_all):
        try:
            sextuple = ArcSextuple(arcs) if interleaved else ArcSextuple.from_triples(*arcs)
        except ValueError as e:
            raise usage_error(str(e)) from e
        try:
            label = classify(sextuple)
        except CatalogMismatchError as e:
            raise verification_failure(str(e)) from e
        if show_all and label.is_concurrent:
            return '\n'.join(str(match) for match in classify_all(sextuple))
        return str(label)
