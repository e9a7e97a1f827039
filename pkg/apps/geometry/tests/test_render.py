import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from apps.geometry.render import POINT_COLORS, render_svg
from apps.geometry.templatetags.svg_extras import coord


class RenderTestCase(SimpleTestCase):
    """Test cases for the SVG drawing"""

    def setUp(self):
        """Set up an output directory"""
        self.directory = tempfile.TemporaryDirectory()
        self.folder = Path(self.directory.name)

    def tearDown(self):
        self.directory.cleanup()

    def render(self, n, name, **options):
        return render_svg(n, self.folder / name, **options).read_text(encoding='utf-8')

    def test_triangle(self):
        """Test a triangle has no diagonals and no points"""
        svg = self.render(3, 'triangle.svg')
        self.assertTrue(svg.startswith('<?xml'))
        self.assertIn('<polygon', svg)
        self.assertNotIn('<line', svg)
        self.assertNotIn('<circle', svg)

    def test_byte_identical(self):
        """Test repeated renders produce the same bytes"""
        first = self.render(12, 'first.svg')
        second = self.render(12, 'second.svg')
        self.assertEqual(first, second)
        self.assertEqual(first.count('<line'), 54)
        self.assertEqual(first.count('<circle'), 301)

    def test_highlight(self):
        """Test highlighting hides simple points in the 16-gon"""
        svg = self.render(16, 'sixteen.svg', highlight=3)
        self.assertNotIn(POINT_COLORS[2], svg)
        self.assertEqual(svg.count(f'fill="{POINT_COLORS[3]}"'), 208)
        self.assertEqual(svg.count(f'fill="{POINT_COLORS["center"]}"'), 1)

    def test_center_follows_highlight(self):
        """Test the octagon center is drawn only while n/2 reaches the threshold"""
        center = f'fill="{POINT_COLORS["center"]}"'
        self.assertEqual(self.render(8, 'four.svg', highlight=4).count(center), 1)
        hidden = self.render(8, 'five.svg', highlight=5)
        self.assertEqual(hidden.count(center), 0)
        self.assertNotIn('<circle', hidden)

    def test_thirty_gon_colors(self):
        """Test the 30-gon shows thirty seven-fold points"""
        svg = self.render(30, 'thirty.svg', highlight=7, width=400)
        self.assertEqual(svg.count(f'fill="{POINT_COLORS[7]}"'), 30)
        self.assertIn('width="400"', svg)

    def test_unwritable_path(self):
        """Test a missing directory raises"""
        with self.assertRaises(OSError):
            render_svg(5, self.folder / 'missing' / 'out.svg')

    def test_coord_filter(self):
        """Test fixed precision and no negative zero"""
        self.assertEqual(coord(-1e-17), '0.000000000000')
        self.assertEqual(coord(-0.5), '-0.500000000000')
        self.assertEqual(coord(1), '1.000000000000')
