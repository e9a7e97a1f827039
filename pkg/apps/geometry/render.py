"""
SVG drawing of the n-gon, its diagonals and their intersection points.
"""

import logging
import math
from pathlib import Path

from django.template.loader import render_to_string

from .diagonals import all_diagonals
from .scan import scan

logger = logging.getLogger(__name__)

POINT_COLORS = {
    2: '#808080',
    3: '#1f77b4',
    4: '#2ca02c',
    5: '#ff7f0e',
    6: '#d62728',
    7: '#9467bd',
    'center': '#000000',
}


def _vertex(j, n):
    # SVG y grows downward
    angle = 2 * math.pi * j / n
    return math.cos(angle), -math.sin(angle)


def svg_context(n, width=800, stroke=0.002, highlight=2, jobs=1):
    if n < 3:
        raise ValueError(f"A polygon needs at least 3 vertices, got {n}")
    vertices = [_vertex(j, n) for j in range(n)]
    diagonals = [(*vertices[d.a], *vertices[d.b]) for d in all_diagonals(n)]
    points = []
    if n >= 4:
        for cluster in scan(n, mode='full', jobs=jobs):
            if cluster.is_center and n // 2 >= highlight:
                points.append(('center', cluster.x, -cluster.y))
            elif cluster.k >= highlight:
                points.append((cluster.k, cluster.x, -cluster.y))
    return {
        'n': n,
        'width': width,
        'stroke': stroke,
        'radius': 2.5 * stroke,
        'vertices': vertices,
        'diagonals': diagonals,
        'points': points,
        'colors': POINT_COLORS,
    }


def render_svg(n, path, width=800, stroke=0.002, highlight=2, jobs=1):
    """
    Write the drawing to `path`.

    Points are emitted in diagonal-set order and coordinates with twelve
    decimals, so equal arguments give byte-identical files.

    Args:
        n: number of vertices, at least 3
        path: output file
        width: pixel width and height
        stroke: line width in units of the circumradius
        highlight: draw only points where at least this many diagonals meet
        jobs: worker processes for the scan

    Raises:
        OSError if the file cannot be written
    """
    svg = render_to_string('geometry/polygon.svg', svg_context(n, width, stroke, highlight, jobs))
    path = Path(path)
    path.write_text(svg, encoding='utf-8')
    logger.info(f"Wrote {path} ({n}-gon, points with k >= {highlight})")
    return path
