"""
Closed forms for the diagonal arrangement of a regular n-gon.

Every quantity is a tame function of n, evaluated exactly with Fractions
and checked to be a nonnegative integer before it is returned.
"""

import logging
from fractions import Fraction
from math import comb

from .tame import TameFunction, delta, tame_eval

logger = logging.getLogger(__name__)

MULTIPLICITIES = (2, 3, 4, 5, 6, 7)


class FormulaIntegrityError(ValueError):
    """A closed form produced a non-integer or negative count."""


class InconsistentCountsError(ValueError):
    """Cumulative counts b_k that no multiplicities a_k produce."""


def _check_n(n):
    if n < 3:
        raise ValueError(f"A polygon needs at least 3 vertices, got {n}")


def _exact_count(value, what, n):
    if value.denominator != 1 or value < 0:
        raise FormulaIntegrityError(f"{what}({n}) = {value} is not a nonnegative integer")
    return int(value)


# a_k(n) / n for k = 2..7
AK_OVER_N = {
    2: TameFunction.of({
        'n^3': Fraction(1, 24), 'n^2': Fraction(-1, 4), 'n': Fraction(11, 24), '1': Fraction(-1, 4),
        'n^2*d2': Fraction(-5, 16), 'n*d2': Fraction(23, 8), 'd2': Fraction(-9, 2),
        'd4': Fraction(-9, 4), 'n*d6': Fraction(-19, 2), 'd6': 55, 'd12': 54, 'd18': 84,
        'd24': 50, 'd30': -24, 'd42': -100, 'd60': -432, 'd84': -204, 'd90': -144,
        'd120': -204, 'd210': -144,
    }),
    3: TameFunction.of({
        'n^2*d2': Fraction(5, 48), 'n*d2': -1, 'd2': Fraction(19, 12), 'd4': Fraction(3, 4),
        'n*d6': Fraction(7, 6), 'd6': Fraction(-19, 3), 'd12': -8, 'd18': -20, 'd24': -16,
        'd30': -19, 'd42': 8, 'd60': 68, 'd84': 60, 'd90': 48, 'd120': 60, 'd210': 48,
    }),
    4: TameFunction.of({
        'n*d6': Fraction(7, 12), 'd6': Fraction(-7, 2), 'd12': Fraction(-5, 2), 'd18': -4,
        'd24': 3, 'd42': 6, 'd60': 34, 'd84': -6, 'd120': -6,
    }),
    5: TameFunction.of({
        'n*d6': Fraction(1, 4), 'd6': Fraction(-3, 2), 'd12': Fraction(-3, 2), 'd24': -2,
        'd42': 4, 'd84': 6, 'd120': 6,
    }),
    6: TameFunction.of({'d30': 4, 'd60': -4}),
    7: TameFunction.of({'d30': 1, 'd60': 4}),
}


def I_closed(n):
    """Number of interior intersection points."""
    _check_n(n)
    d = lambda m: delta(m, n)  # noqa: E731
    value = (
        Fraction(comb(n, 4))
        + Fraction(-5 * n ** 3 + 45 * n ** 2 - 70 * n + 24, 24) * d(2)
        - Fraction(3 * n, 2) * d(4)
        + Fraction(-45 * n ** 2 + 262 * n, 6) * d(6)
        + 42 * n * d(12) + 60 * n * d(18) + 35 * n * d(24)
        - 38 * n * d(30) - 82 * n * d(42) - 330 * n * d(60)
        - 144 * n * d(84) - 96 * n * d(90) - 144 * n * d(120) - 96 * n * d(210)
    )
    return _exact_count(value, 'I', n)


def R_closed(n):
    """Number of regions the diagonals cut the interior into."""
    _check_n(n)
    d = lambda m: delta(m, n)  # noqa: E731
    value = (
        Fraction(n ** 4 - 6 * n ** 3 + 23 * n ** 2 - 42 * n + 24, 24)
        + Fraction(-5 * n ** 3 + 42 * n ** 2 - 40 * n - 48, 48) * d(2)
        - Fraction(3 * n, 4) * d(4)
        + Fraction(-53 * n ** 2 + 310 * n, 12) * d(6)
        + Fraction(49 * n, 2) * d(12) + 32 * n * d(18) + 19 * n * d(24)
        - 36 * n * d(30) - 50 * n * d(42) - 190 * n * d(60)
        - 78 * n * d(84) - 48 * n * d(90) - 78 * n * d(120) - 48 * n * d(210)
    )
    return _exact_count(value, 'R', n)


def ak_closed(k, n):
    """Interior points, center excluded, where exactly k diagonals meet."""
    _check_n(n)
    if k not in AK_OVER_N:
        raise ValueError(f"Multiplicity must be between 2 and 7, got {k}")
    return _exact_count(n * tame_eval(AK_OVER_N[k], n), f'a{k}', n)


def ak_map(n):
    return {k: ak_closed(k, n) for k in MULTIPLICITIES}


def b2_closed(n):
    """Crossing pairs of diagonals away from the center."""
    _check_n(n)
    return comb(n, 4) - comb(n // 2, 2) * delta(2, n)


def bk_from_ak(a, k):
    """Off-center points where at least k diagonals meet, each counted C(m, k) times."""
    return sum(comb(m, k) * count for m, count in a.items() if m >= k)


def ak_from_bk(b):
    """
    Recover a_k from the cumulative counts, largest k first.

    Raises:
        InconsistentCountsError if some a_k would come out negative
    """
    a = {}
    for k in sorted(b, reverse=True):
        value = b[k] - sum(comb(m, k) * a[m] for m in a)
        if value < 0:
            raise InconsistentCountsError(f"b_{k} = {b[k]} gives a_{k} = {value}")
        a[k] = value
    return dict(sorted(a.items()))


def V_closed(n):
    """Vertices of the planar graph: polygon corners plus interior points."""
    return n + I_closed(n)


def edges_from_multiplicities(n, a):
    """
    Edges of the planar graph from the degree sum: every corner has degree
    n - 1, the center n, and a point on k diagonals 2k.
    """
    degrees = n * (n - 1) + n * delta(2, n)
    degrees += sum(2 * k * count for k, count in a.items())
    return degrees // 2


def E_closed(n):
    """Edges of the planar graph, sides included."""
    _check_n(n)
    return edges_from_multiplicities(n, ak_map(n))


def max_offcenter_multiplicity(n):
    """Largest k with a_k(n) > 0, 0 when no off-center point exists."""
    _check_n(n)
    if n < 5:
        return 0
    if n == 6:
        return 2
    if n == 12:
        return 4
    if n % 2:
        return 2
    if n % 30 == 0:
        return 7
    if n % 6 == 0:
        return 5
    return 3
