import logging

from apps.geometry.render import render_svg
from apps.geometry.sweep import ScanError

from ...base import NgonCommand, RunConfig, polygon_size, usage_error, verification_failure

logger = logging.getLogger(__name__)


class Command(NgonCommand):
    help = 'Draw the n-gon with its diagonals and intersection points as SVG'

    def add_arguments(self, parser):
        parser.add_argument('n', type=polygon_size)
        parser.add_argument('-o', '--out', required=True, help='SVG file to write')
        parser.add_argument('--width', type=int, default=800, help='Image size in pixels')
        parser.add_argument('--stroke', type=float, default=0.002, help='Line width as a fraction of the width')
        parser.add_argument('--highlight', type=int, default=2,
                            help='Draw only points where at least this many diagonals meet')
        parser.add_argument('--jobs', type=int, default=1)

    def handle(self, *args, **options):
        config = RunConfig.from_options('render', [options['n']], options)
        if options['width'] < 1 or options['stroke'] <= 0:
            raise usage_error("--width and --stroke must be positive")
        try:
            path = render_svg(
                config.n_values[0], config.out, width=options['width'], stroke=options['stroke'],
                highlight=options['highlight'], jobs=config.jobs,
            )
        except OSError as e:
            raise usage_error(f"Cannot write {config.out}: {e}") from e
        except ScanError as e:
            logger.error(f"Rendering n={config.n_values[0]} failed", exc_info=True)
            raise verification_failure(str(e)) from e
        self.stdout.write(f"Wrote {path}")
