"""
Exact rationals for arc lengths and family parameters.

Arc lengths are fractions of the circumference, so a Fraction in lowest
terms is both the value and its hash key.
"""

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_TEXT = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


def rat(num, den=1):
    """
    Build a normalized fraction.

    Args:
        num: integer numerator
        den: integer denominator, nonzero

    Returns:
        Fraction in lowest terms with the sign on the numerator
    """
    if den == 0:
        raise ZeroDivisionError(f"Zero denominator in {num}/{den}")
    return Fraction(num, den)


def parse_rational(text):
    """Parse "p/q" or "p" into a Fraction; raises ValueError on anything else."""
    match = _RATIONAL_TEXT.match(str(text))
    if not match:
        raise ValueError(f"Not a rational number: {text!r}")
    numerator, denominator = match.groups()
    denominator = int(denominator) if denominator else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in {text!r}")
    return rat(int(numerator), denominator)


def format_rational(value):
    """Render as "p/q", or "p" for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
