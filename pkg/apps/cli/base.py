"""
Shared plumbing for the management commands: common flags, run
configuration, report output and the exit code contract.

Exit codes: 0 success, 1 usage error, 2 verification or internal failure.
"""

import argparse
import logging
import re
from dataclasses import dataclass
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.geometry.cache import CountsCache
from apps.geometry.scan import MODES
from apps.geometry.sweep import resolve_jobs

from .reports import FORMATS

logger = logging.getLogger(__name__)

USAGE_ERROR = 1
VERIFICATION_FAILURE = 2

_RANGE = re.compile(r'^(\d+)(?:\.\.(\d+))?$')


def usage_error(message):
    return CommandError(message, returncode=USAGE_ERROR)


def verification_failure(message):
    return CommandError(message, returncode=VERIFICATION_FAILURE)


def polygon_size(value):
    """argparse type for n: an integer of at least 3."""
    try:
        n = int(value)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"n must be an integer, got {value!r}") from None
    if n < 3:
        raise argparse.ArgumentTypeError(f"A polygon needs at least 3 vertices, got n={n}")
    return n


def polygon_sizes(specs):
    """
    Expand "a..b" ranges and single values into a sorted list of n.

    Raises:
        CommandError (usage) on malformed specs, empty ranges or n < 3
    """
    values = set()
    for spec in specs:
        match = _RANGE.match(spec.strip())
        if not match:
            raise usage_error(f"Expected N or A..B, got {spec!r}")
        try:
            low = polygon_size(match.group(1))
            high = polygon_size(match.group(2)) if match.group(2) else low
        except argparse.ArgumentTypeError as e:
            raise usage_error(str(e)) from e
        if high < low:
            raise usage_error(f"Empty range {spec!r}")
        values.update(range(low, high + 1))
    return sorted(values)


@dataclass(frozen=True)
class RunConfig:
    command: str
    n_values: tuple
    mode: str = 'slice'
    jobs: int = 1
    output_format: str = 'table'
    cache_dir: str = None
    out: str = None
    deterministic: bool = False

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1 after resolving, got {self.jobs}")
        if any(n < 3 for n in self.n_values):
            raise ValueError(f"A polygon needs at least 3 vertices, got {min(self.n_values)}")

    @classmethod
    def from_options(cls, command, n_values, options):
        try:
            return cls(
                command=command,
                n_values=tuple(n_values),
                mode=options.get('mode', 'slice'),
                jobs=resolve_jobs(options.get('jobs', settings.NGON_DEFAULT_JOBS)),
                output_format=options.get('format', 'table'),
                cache_dir=options.get('cache_dir') or settings.NGON_CACHE_DIR,
                out=options.get('out'),
                deterministic=options.get('deterministic', False),
            )
        except ValueError as e:
            raise usage_error(str(e)) from e

    def cache(self):
        return CountsCache(self.cache_dir)


class NgonCommand(BaseCommand):
    """
    Base class for the project's commands.

    Argument parse errors leave with exit status 1 rather than argparse's 2,
    which is reserved for failed verification.
    """

    requires_system_checks = []
    default_format = 'table'

    def run_from_argv(self, argv):
        self._arguments_parsed = False
        try:
            super().run_from_argv(argv)
        except SystemExit as e:
            if e.code == 2 and not self._arguments_parsed:
                raise SystemExit(USAGE_ERROR) from e
            raise

    def execute(self, *args, **options):
        self._arguments_parsed = True
        return super().execute(*args, **options)

    def add_scan_arguments(self, parser):
        parser.add_argument('--mode', choices=MODES, default='slice',
                            help='Scan every point (full) or one per rotation orbit (slice)')
        parser.add_argument('--jobs', type=int, default=settings.NGON_DEFAULT_JOBS,
                            help='Worker processes; 0 uses every core')
        parser.add_argument('--cache-dir', help='Directory for cached geometric counts')

    def add_output_arguments(self, parser, formats=FORMATS):
        parser.add_argument('--format', choices=formats, default=self.default_format)
        parser.add_argument('--out', help='Write the report to this file instead of stdout')
        parser.add_argument('--deterministic', action='store_true',
                            help='Leave out timing fields')

    def emit(self, text, out=None):
        """Write a report to --out or stdout, always ending with one newline."""
        text = text if text.endswith('\n') else text + '\n'
        if out:
            try:
                Path(out).write_text(text, encoding='utf-8')
            except OSError as e:
                raise usage_error(f"Cannot write {out}: {e}") from e
            logger.info(f"Wrote {out}")
        else:
            self.stdout.write(text, ending='')
