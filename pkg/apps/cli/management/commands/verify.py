import logging

from apps.formulas.closed_forms import FormulaIntegrityError
from apps.geometry.sweep import ScanError

from ...base import NgonCommand, RunConfig, polygon_sizes, verification_failure
from ...reports import to_table
from ...verification import CHECK_NAMES, verify_polygon

logger = logging.getLogger(__name__)


class Command(NgonCommand):
    help = 'Cross-check scans, closed forms and the catalog for a set of n; prints a pass/fail matrix'

    def add_arguments(self, parser):
        parser.add_argument('sizes', nargs='+', metavar='N', help='n or an inclusive range A..B')
        parser.add_argument('--expect-empty-triples', action='store_true',
                            help='Also require that no three diagonals meet')
        self.add_scan_arguments(parser)
        parser.add_argument('--out', help='Write the matrix to this file instead of stdout')

    def handle(self, *args, **options):
        config = RunConfig.from_options('verify', polygon_sizes(options['sizes']), options)
        cache = config.cache()

        rows = []
        failure = None
        for n in config.n_values:
            try:
                checks = verify_polygon(
                    n, mode=config.mode, jobs=config.jobs, cache=cache,
                    expect_empty_triples=options['expect_empty_triples'],
                )
            except (ScanError, FormulaIntegrityError) as e:
                logger.error(f"Verification of n={n} stopped", exc_info=True)
                failure = f"n={n}: {e}"
                break
            cells = {check.name: check.cell for check in checks}
            rows.append((n, *(cells.get(name, '-') for name in CHECK_NAMES)))
            failed = next((check for check in checks if not check.success), None)
            if failed is not None:
                failure = f"n={n}: {failed.name} failed: {failed.error_message}"
                break

        self.emit(to_table(('n', *CHECK_NAMES), rows), config.out)
        if failure is not None:
            raise verification_failure(failure)
        logger.info(f"All checks passed for {len(rows)} polygon(s)")
