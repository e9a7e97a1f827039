import json
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from pathlib import Path
from unittest import mock

from django.conf import settings
from django.core.management import CommandError, call_command, load_command_class
from django.test import SimpleTestCase, override_settings

from apps.cli import verification
from apps.cli.base import RunConfig, polygon_sizes
from apps.cli.management.commands import count as count_command
from apps.cli.verification import CheckResult, check_euler, check_per_slice, verify_polygon
from apps.formulas.closed_forms import AK_OVER_N
from apps.geometry.counts import closed_record, count_all
from apps.geometry.tests.test_base import TABLE_PER_SLICE, TABLE_SMALL, slow


class CommandTestCase(SimpleTestCase):
    """Base class running commands against a throwaway cache directory"""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.folder = Path(self.directory.name)
        self.settings_override = override_settings(NGON_CACHE_DIR=self.directory.name)
        self.settings_override.enable()

    def tearDown(self):
        self.settings_override.disable()
        self.directory.cleanup()

    def call(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO(), **options)
        return out.getvalue()

    def exit_code(self, *argv):
        """Run a command as from manage.py and return its exit status and stdout."""
        out, err = StringIO(), StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            command = load_command_class('apps.cli', argv[0])
            try:
                command.run_from_argv(['manage.py', *argv])
            except SystemExit as e:
                return e.code, out.getvalue()
        return 0, out.getvalue()


class RunConfigTestCase(SimpleTestCase):
    """Test cases for argument helpers"""

    def test_polygon_sizes(self):
        """Test ranges and single values are merged and sorted"""
        self.assertEqual(polygon_sizes(['7', '3..5', '4']), [3, 4, 5, 7])

    def test_bad_sizes(self):
        """Test malformed specs are usage errors"""
        for specs in (['2..5'], ['9..4'], ['x'], ['3-5']):
            with self.assertRaises(CommandError) as cm:
                polygon_sizes(specs)
            self.assertEqual(cm.exception.returncode, 1, specs)

    def test_run_config(self):
        """Test jobs resolve to at least one worker"""
        config = RunConfig.from_options('count', [12], {'jobs': 0, 'mode': 'full'})
        self.assertGreaterEqual(config.jobs, 1)
        self.assertEqual(config.mode, 'full')
        with self.assertRaises(CommandError):
            RunConfig.from_options('count', [12], {'jobs': -2})


class LoggingConfigTestCase(SimpleTestCase):
    """Test cases for the logging configuration"""

    def test_loggers(self):
        """Test both loggers default to INFO on the verbose console handler"""
        loggers = settings.LOGGING['loggers']
        self.assertEqual(loggers['django']['level'], os.environ.get('DJANGO_LOG_LEVEL', 'INFO'))
        self.assertEqual(loggers['apps']['level'], os.environ.get('NGON_LOG_LEVEL', 'INFO'))
        self.assertEqual(list(settings.LOGGING['formatters']), ['verbose'])


class CountCommandTestCase(CommandTestCase):
    """Test cases for the count command"""

    def test_both_sources_match(self):
        """Test the 30-gon from scan and closed forms"""
        output = self.call('count', '30', '--source', 'both')
        self.assertIn('match n=30 I=16801 R=21480', output)
        self.assertIn('geometric n=30 a2=13800', output)

    def test_odd_polygon(self):
        """Test the 9-gon has simple points only"""
        output = self.call('count', '9', '--source', 'both')
        self.assertIn('a2=126 a3=0', output)
        self.assertIn('match', output)

    def test_json_output(self):
        """Test JSON carries b, V, E and the scan digest"""
        data = json.loads(self.call('count', '12', '--format', 'json', '--deterministic'))
        self.assertEqual(data['I'], 301)
        self.assertEqual(data['a']['4'], 12)
        self.assertEqual(data['R'], 444)
        self.assertEqual((data['V'], data['E']), (313, 756))
        self.assertEqual(data['b']['4'], 12)
        self.assertEqual(len(data['scan_digest']), 64)
        self.assertNotIn('elapsed_ms', data)

    def test_deterministic_and_cached(self):
        """Test repeated runs are byte-identical and the second is served from the cache"""
        first = self.call('count', '18', '--format', 'json', '--deterministic')
        self.assertTrue(any(self.folder.iterdir()))
        second = self.call('count', '18', '--format', 'json', '--deterministic')
        self.assertEqual(first, second)

    def test_cache_dir_flag(self):
        """Test --cache-dir overrides the configured directory"""
        other = self.folder / 'other'
        other.mkdir()
        self.call('count', '10', '--cache-dir', str(other))
        self.assertEqual([p.name for p in other.iterdir()], ['counts-n10-slice-v1.0.0.json'])

    def test_csv_output(self):
        """Test the CSV header and row for the 12-gon"""
        output = self.call('count', '12', '--format', 'csv', '--source', 'closed')
        self.assertEqual(output, 'n,a2,a3,a4,a5,a6,a7,I,R\n12,228,60,12,0,0,0,301,444\n')

    def test_out_file(self):
        """Test --out writes the report instead of printing it"""
        path = self.folder / 'count.txt'
        output = self.call('count', '7', '--source', 'closed', '--out', str(path))
        self.assertEqual(output, '')
        self.assertIn('I=35', path.read_text())

    def test_usage_error(self):
        """Test n below 3 is a usage error"""
        with self.assertRaises(CommandError) as cm:
            self.call('count', '2')
        self.assertEqual(cm.exception.returncode, 1)

    def test_exit_codes(self):
        """Test argparse errors exit 1 and a mismatch exits 2"""
        self.assertEqual(self.exit_code('count', '2')[0], 1)
        self.assertEqual(self.exit_code('count', '12', '--mode', 'half')[0], 1)
        self.assertEqual(self.exit_code('count', '12', '--source', 'closed')[0], 0)
        with mock.patch.object(count_command, 'closed_record', return_value=closed_record(8)):
            code, output = self.exit_code('count', '7', '--source', 'both')
        self.assertEqual(code, 2)
        self.assertNotIn('match', output)


class TableCommandTestCase(CommandTestCase):
    """Test cases for the table command"""

    def test_small_table(self):
        """Test n = 3..30 reproduces the published table"""
        lines = self.call('table', '3', '30').splitlines()
        self.assertEqual(lines[0], 'n,a2,a3,a4,a5,a6,a7,I,R')
        self.assertEqual(len(lines), 29)
        for line in lines[1:]:
            values = tuple(int(v) for v in line.split(','))
            self.assertEqual(values[1:], TABLE_SMALL[values[0]], values[0])

    def test_single_row(self):
        """Test a one-row table for the pentagon"""
        self.assertEqual(self.call('table', '5', '5').splitlines()[1], '5,5,0,0,0,0,0,5,11')

    def test_per_slice(self):
        """Test the per-slice table for multiples of 6"""
        lines = self.call('table', '6', '30', '--multiples-of', '6', '--per-slice').splitlines()
        self.assertEqual(lines[0], 'n,a2/n,a3/n,a4/n,a5/n,a6/n,a7/n,(I-1)/n')
        for line in lines[1:]:
            values = tuple(int(v) for v in line.split(','))
            self.assertEqual(values[1:], TABLE_PER_SLICE[values[0]], values[0])

    def test_closed_source_json(self):
        """Test JSON rows keyed by column name"""
        rows = json.loads(self.call('table', '60', '120', '--multiples-of', '60', '--per-slice',
                                    '--source', 'closed', '--format', 'json'))
        self.assertEqual(rows[0]['(I-1)/n'], 6753)
        self.assertEqual(rows[1]['n'], 120)

    def test_text_table(self):
        """Test the aligned text table"""
        output = self.call('table', '3', '4', '--format', 'table', '--source', 'closed')
        self.assertEqual(output.splitlines()[0].split(), ['n', 'a2', 'a3', 'a4', 'a5', 'a6', 'a7', 'I', 'R'])

    def test_fit_closed(self):
        """Test fitting the closed-form columns recovers the closed forms"""
        fits = json.loads(self.call('table', '3', '420', '--source', 'closed', '--fit', '--format', 'json'))
        for k, function in AK_OVER_N.items():
            self.assertEqual(fits[f'a{k}/n'], function.as_json(), k)

    def test_fit_needs_anchors(self):
        """Test --fit without every anchor in range is a usage error"""
        with self.assertRaises(CommandError) as cm:
            self.call('table', '3', '30', '--fit', '--source', 'closed')
        self.assertEqual(cm.exception.returncode, 1)

    def test_bad_ranges(self):
        """Test empty and filtered-out ranges"""
        for args in (('10', '5'), ('7', '11', '--multiples-of', '6'), ('3', '9', '--multiples-of', '0')):
            with self.assertRaises(CommandError) as cm:
                self.call('table', *args)
            self.assertEqual(cm.exception.returncode, 1, args)


class VerifyCommandTestCase(CommandTestCase):
    """Test cases for the verify command and its checks"""

    def test_small_range_passes(self):
        """Test every check passes for n = 3..30"""
        output = self.call('verify', '3..30')
        self.assertNotIn('FAIL', output)
        self.assertEqual(len(output.splitlines()), 29)

    def test_odd_polygon_empty_triples(self):
        """Test the odd case with the empty-triples check"""
        output = self.call('verify', '7', '--expect-empty-triples')
        self.assertIn('pass', output)
        self.assertNotIn('FAIL', output)

    def test_even_polygon_is_not_empty(self):
        """Test the empty-triples check fails at the octagon with exit 2"""
        with self.assertRaises(CommandError) as cm:
            self.call('verify', '8', '--expect-empty-triples')
        self.assertEqual(cm.exception.returncode, 2)
        self.assertIn('empty failed', str(cm.exception))

    def test_failure_exit_code(self):
        """Test the matrix is printed and the status is 2 on failure"""
        code, output = self.exit_code('verify', '8', '--expect-empty-triples')
        self.assertEqual(code, 2)
        self.assertIn('FAIL', output)

    def test_checks(self):
        """Test the individual checks at the 30-gon"""
        checks = verify_polygon(30)
        self.assertTrue(all(check.success for check in checks))
        self.assertEqual([c.name for c in checks],
                         ['closed', 'pairs', 'euler', 'multiplicity', 'triples', 'per_slice'])
        multiplicity = next(c for c in checks if c.name == 'multiplicity')
        self.assertEqual(multiplicity.cell, 'pass(7)')

    def test_check_result(self):
        """Test CheckResult cells"""
        result = CheckResult(success=False, name='pairs', n=9, error_message='broken')
        self.assertEqual(result.cell, 'FAIL')
        self.assertEqual(result.error_message, 'broken')
        self.assertIsNone(result.detail)
        self.assertEqual(check_per_slice(count_all(12)).cell, 'pass(25)')

    def test_euler_uses_closed_regions(self):
        """Test the Euler check compares E - V + 1 with the closed region count"""
        record = count_all(12)
        self.assertTrue(check_euler(record).success)
        with mock.patch.object(verification, 'R_closed', return_value=record.R + 1):
            result = check_euler(record)
        self.assertFalse(result.success)
        self.assertIn(f"R={record.R + 1}", result.error_message)

    @slow
    def test_sixty_gon(self):
        """Test the 60-gon including its per-slice total"""
        output = self.call('verify', '60')
        self.assertIn('pass(6753)', output)
        self.assertNotIn('FAIL', output)


class RelationsCommandTestCase(CommandTestCase):
    """Test cases for the relations command"""

    def test_summary(self):
        """Test the weight-12 census summary"""
        output = self.call('relations', '--max-weight', '12')
        self.assertTrue(output.endswith('107 relations\n'))

    def test_json(self):
        """Test the JSON listing of classes"""
        data = json.loads(self.call('relations', '--format', 'json'))
        self.assertEqual(sum(entry['count'] for entry in data), 107)
        self.assertEqual(data[0]['class_label'], 'R_2')
        self.assertEqual(data[0]['relations'], [[[1, 0, 1], [2, 1, 1]]])
        for entry in data:
            self.assertEqual(len(entry['relations']), entry['count'])

    def test_small_weight(self):
        """Test a lower weight bound"""
        output = self.call('relations', '--max-weight', '5')
        self.assertTrue(output.endswith('3 relations\n'))

    def test_weight_above_range(self):
        """Test weights beyond 12 are refused"""
        with self.assertRaises(CommandError) as cm:
            self.call('relations', '--max-weight', '13')
        self.assertEqual(cm.exception.returncode, 1)


class ClassifyCommandTestCase(CommandTestCase):
    """Test cases for the classify command"""

    def test_sporadic(self):
        """Test the first sporadic row"""
        output = self.call('classify', '1/10', '2/15', '3/10', '2/15', '1/6', '1/6')
        self.assertEqual(output, 'Sporadic #1 (denominator 30)\n')

    def test_interleaved(self):
        """Test the same triple in circular order"""
        output = self.call('classify', '--interleaved', '1/10', '2/15', '2/15', '1/6', '3/10', '1/6')
        self.assertEqual(output, 'Sporadic #1 (denominator 30)\n')

    def test_trivial_and_not_concurrent(self):
        """Test the hexagon's diameters and a heptagon triple"""
        self.assertEqual(self.call('classify', *['1/6'] * 6), 'Trivial\n')
        self.assertEqual(self.call('classify', *['1/7'] * 5, '2/7'), 'Not concurrent\n')

    def test_multi(self):
        """Test eight and twelve arcs go to the multi-diagonal catalog"""
        arcs = ('1/24', '1/24', '1/24', '1/12', '1/6', '3/8', '1/6', '1/12')
        self.assertEqual(self.call('classify', *arcs), 'Family #1 (t=1/24)\n')
        self.assertEqual(self.call('classify', *['1/12'] * 12), 'Exceptional (denominator 12)\n')

    def test_bad_arcs(self):
        """Test wrong counts, bad sums and unparsable values"""
        for arcs in (['1/6'] * 5, ['1/6'] * 5 + ['1/3'], ['1/6'] * 5 + ['x']):
            with self.assertRaises(CommandError) as cm:
                self.call('classify', *arcs)
            self.assertEqual(cm.exception.returncode, 1, arcs)


class RenderCommandTestCase(CommandTestCase):
    """Test cases for the render command"""

    def test_render(self):
        """Test the file is written with deterministic bytes"""
        first, second = self.folder / 'a.svg', self.folder / 'b.svg'
        self.call('render', '30', '-o', str(first))
        self.call('render', '30', '-o', str(second))
        self.assertEqual(first.read_bytes(), second.read_bytes())
        self.assertTrue(first.read_text().startswith('<?xml'))

    def test_options(self):
        """Test width and highlight reach the drawing"""
        path = self.folder / 'hex.svg'
        output = self.call('render', '12', '-o', str(path), '--width', '300', '--highlight', '4')
        self.assertIn('Wrote', output)
        svg = path.read_text()
        self.assertIn('width="300"', svg)
        self.assertEqual(svg.count('<circle'), 12 + 1)

    def test_missing_directory(self):
        """Test an unwritable path is a usage error"""
        with self.assertRaises(CommandError) as cm:
            self.call('render', '5', '-o', str(self.folder / 'missing' / 'x.svg'))
        self.assertEqual(cm.exception.returncode, 1)


class ExportCatalogCommandTestCase(CommandTestCase):
    """Test cases for the export_catalog command"""

    def test_sporadics_csv(self):
        """Test the 65 sporadic rows"""
        lines = self.call('export_catalog', '--table', 'sporadics').splitlines()
        self.assertEqual(lines[0], 'index,denominator,relation_type,U,V,W,X,Y,Z')
        self.assertEqual(len(lines), 66)
        self.assertTrue(lines[1].startswith('1,30,'))

    def test_families_csv(self):
        """Test the four triple families with forms written as text"""
        lines = self.call('export_catalog', '--table', 'families').splitlines()
        self.assertEqual(lines[0], 'index,U,V,W,X,Y,Z,t_min,t_max')
        self.assertEqual(len(lines), 5)

    def test_all(self):
        """Test every table is exported under its own heading"""
        output = self.call('export_catalog')
        for name in ('families', 'sporadics', 'four', 'five'):
            self.assertIn(f'# {name}\n', output)
        data = json.loads(self.call('export_catalog', '--format', 'json'))
        self.assertEqual(len(data['sporadics']), 65)
        self.assertEqual(data['four'][0]['k'], 4)
