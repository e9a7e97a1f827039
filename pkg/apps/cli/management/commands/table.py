import logging
from fractions import Fraction

from apps.formulas.closed_forms import FormulaIntegrityError
from apps.formulas.tame import DEFAULT_ANCHORS, InsufficientAnchorsError, NotTameError, tame_fit
from apps.geometry.counts import closed_record, count_all
from apps.geometry.sweep import ScanError

from ...base import NgonCommand, RunConfig, polygon_size, usage_error, verification_failure
from ...reports import (
    COUNTS_HEADER,
    FIT_HEADER,
    PER_SLICE_HEADER,
    counts_row,
    fit_rows,
    per_slice_row,
    render_rows,
    to_json,
)

logger = logging.getLogger(__name__)


class Command(NgonCommand):
    help = 'Counts for a range of n as a table, optionally per slice or as fitted tame functions'
    default_format = 'csv'

    def add_arguments(self, parser):
        parser.add_argument('start', type=polygon_size)
        parser.add_argument('stop', type=polygon_size)
        parser.add_argument('--multiples-of', type=int, default=1, help='Keep only n divisible by this')
        parser.add_argument('--per-slice', action='store_true',
                            help='Divide a_k and I-1 by n, one rotation orbit per row')
        parser.add_argument('--source', choices=('geometric', 'closed', 'both'), default='geometric')
        parser.add_argument('--fit', action='store_true',
                            help='Print the tame function fitted to each a_k/n column')
        self.add_scan_arguments(parser)
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        start, stop, step = options['start'], options['stop'], options['multiples_of']
        if stop < start:
            raise usage_error(f"Empty range {start}..{stop}")
        if step < 1:
            raise usage_error(f"--multiples-of must be positive, got {step}")
        config = RunConfig.from_options('table', [n for n in range(start, stop + 1) if n % step == 0], options)
        if not config.n_values:
            raise usage_error(f"No multiple of {step} in {start}..{stop}")
        if options['fit']:
            missing = sorted(set(DEFAULT_ANCHORS) - set(config.n_values))
            if missing:
                raise usage_error(f"--fit needs every default anchor in range; missing {missing}")

        records = [self.record(n, options['source'], config) for n in config.n_values]

        if options['fit']:
            self.emit(self.fit_report(records, config.output_format), config.out)
            return
        if options['per_slice']:
            try:
                rows = [per_slice_row(record) for record in records]
            except ValueError as e:
                raise verification_failure(str(e)) from e
            header = PER_SLICE_HEADER
        else:
            rows = [counts_row(record) for record in records]
            header = COUNTS_HEADER
        self.emit(render_rows(header, rows, config.output_format), config.out)

    def record(self, n, source, config):
        try:
            if source == 'closed':
                return closed_record(n)
            record = count_all(n, mode=config.mode, jobs=config.jobs, cache=config.cache())
            if source == 'both' and not record.same_counts(closed_record(n)):
                raise verification_failure(f"n={n}: geometric and closed-form counts differ")
            return record
        except (ScanError, FormulaIntegrityError) as e:
            logger.error(f"Counting failed for n={n}", exc_info=True)
            raise verification_failure(str(e)) from e

    def fit_report(self, records, output_format):
        anchors = [record for record in records if record.n in DEFAULT_ANCHORS]
        fits = {}
        try:
            for k in range(2, 8):
                fits[f'a{k}/n'] = tame_fit({r.n: Fraction(r.a[k], r.n) for r in anchors})
        except InsufficientAnchorsError as e:
            raise usage_error(str(e)) from e
        except NotTameError as e:
            raise verification_failure(str(e)) from e
        if output_format == 'json':
            return to_json({column: function.as_json() for column, function in fits.items()})
        return render_rows(FIT_HEADER, fit_rows(fits), output_format)
