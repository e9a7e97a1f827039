"""
Exact test of sin(pi U) sin(pi V) sin(pi W) = sin(pi X) sin(pi Y) sin(pi Z).

Product-to-sum turns the identity into a vanishing sum of twelve roots of
unity: with

    a1 = V+W-U-1/2   a2 = W+U-V-1/2   a3 = U+V-W-1/2
    a4 = Y+Z-X+1/2   a5 = Z+X-Y+1/2   a6 = X+Y-Z+1/2

it holds iff sum_j (e^(i pi a_j) + e^(-i pi a_j)) = 0. Each e^(i pi p/q)
is zeta_2q^p, so the whole sum lives in the ring of order 2*lcm(q_j).
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .cyclotomic import CycSum, cyc_is_zero

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class ArcPartitionError(ValueError):
    """Six values that do not split the circle into positive arcs."""


def check_partition(values):
    for value in values:
        if not 0 < value < 1:
            raise ArcPartitionError(f"Arc {value} is not strictly between 0 and 1")
    total = sum(values)
    if total != 1:
        raise ArcPartitionError(f"Arcs sum to {total}, not 1")


def sine_key(u, v, w, x, y, z):
    """
    Canonical ordering that leaves the identity unchanged.

    Sorting inside each triple and swapping the triples are both
    symmetries of the equation.
    """
    first = tuple(sorted((u, v, w)))
    second = tuple(sorted((x, y, z)))
    return min(first, second) + max(first, second)


def sine_sum(u, v, w, x, y, z):
    """The twelve-term CycSum whose vanishing is the identity."""
    alphas = (
        v + w - u - HALF,
        w + u - v - HALF,
        u + v - w - HALF,
        y + z - x + HALF,
        z + x - y + HALF,
        x + y - z + HALF,
    )
    scale = lcm(*(a.denominator for a in alphas))
    terms = []
    for alpha in alphas:
        exponent = alpha.numerator * (scale // alpha.denominator)
        terms.append((exponent, 1))
        terms.append((-exponent, 1))
    return CycSum(2 * scale, tuple(terms))


@lru_cache(maxsize=1 << 18)
def _holds(key):
    return cyc_is_zero(sine_sum(*key))


def sin_product_equal(u, v, w, x, y, z):
    """
    Decide the sine-product identity exactly.

    Args:
        u, v, w: one alternation class of arcs, as fractions of the circle
        x, y, z: the other class

    Returns:
        True iff the two sine products are equal
    """
    values = tuple(Fraction(a) for a in (u, v, w, x, y, z))
    check_partition(values)
    return _holds(sine_key(*values))
