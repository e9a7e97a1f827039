import logging

from apps.formulas.closed_forms import FormulaIntegrityError
from apps.geometry.counts import closed_record, count_all
from apps.geometry.sweep import ScanError

from ...base import NgonCommand, RunConfig, polygon_size, verification_failure
from ...reports import COUNTS_HEADER, counts_row, record_line, to_csv, to_json

logger = logging.getLogger(__name__)

SOURCES = ('geometric', 'closed', 'both')


class Command(NgonCommand):
    help = 'Count interior intersection points and regions of the regular n-gon'

    def add_arguments(self, parser):
        parser.add_argument('n', type=polygon_size)
        parser.add_argument('--source', choices=SOURCES, default='geometric')
        self.add_scan_arguments(parser)
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        n = options['n']
        config = RunConfig.from_options('count', [n], options)
        source = options['source']

        records = []
        try:
            if source in ('geometric', 'both'):
                records.append(count_all(n, mode=config.mode, jobs=config.jobs, cache=config.cache()))
            if source in ('closed', 'both'):
                records.append(closed_record(n))
        except (ScanError, FormulaIntegrityError) as e:
            logger.error(f"Counting failed for n={n}", exc_info=True)
            raise verification_failure(str(e)) from e

        for record in records:
            if not record.pairs_conserved():
                raise verification_failure(f"n={n}: {record.provenance} counts do not conserve crossing pairs")

        if config.output_format == 'json':
            data = [record.as_json(deterministic=config.deterministic) for record in records]
            self.emit(to_json(data if len(data) > 1 else data[0]), config.out)
        elif config.output_format == 'csv':
            self.emit(to_csv(COUNTS_HEADER, [counts_row(record) for record in records]), config.out)
        else:
            lines = [record_line(record) for record in records]
            if source == 'both' and records[0].same_counts(records[1]):
                lines.append(f"match n={n} I={records[0].I} R={records[0].R}")
            self.emit('\n'.join(lines), config.out)

        if source == 'both' and not records[0].same_counts(records[1]):
            raise verification_failure(
                f"n={n}: geometric and closed-form counts differ "
                f"({record_line(records[0])} vs {record_line(records[1])})"
            )
