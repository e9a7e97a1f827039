"""
Tame functions: rational combinations of a fixed basis of polynomials in
n and divisibility indicators delta_m(n).

A tame function is determined by its values on enough anchors, so a
quantity sampled at the anchors can be fitted exactly and compared with
a closed form.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import Matrix, Rational

from apps.exactnum.rational import format_rational

logger = logging.getLogger(__name__)


class InsufficientAnchorsError(ValueError):
    """Sample points do not pin down every basis coefficient."""


class NotTameError(ValueError):
    """No tame function takes the sampled values."""


def delta(m, n):
    """1 if m divides n, else 0."""
    if m < 1 or n < 1:
        raise ValueError(f"delta needs positive arguments, got m={m}, n={n}")
    return 1 if n % m == 0 else 0


_DIVISOR_TAGS = (2, 4, 6, 12, 18, 24, 30, 36, 42, 48, 60, 72, 84, 90, 96, 120, 168, 180, 210, 420)

_BASIS_FUNCTIONS = {
    'n^3': lambda n: n ** 3,
    'n^2': lambda n: n ** 2,
    'n': lambda n: n,
    '1': lambda n: 1,
    'n^2*d2': lambda n: n * n * delta(2, n),
    'n*d2': lambda n: n * delta(2, n),
    'n*d6': lambda n: n * delta(6, n),
    'd24(n-6)': lambda n: 1 if n % 24 == 6 else 0,
}
for _m in _DIVISOR_TAGS:
    _BASIS_FUNCTIONS[f'd{_m}'] = lambda n, m=_m: delta(m, n)

BASIS = (
    'n^3', 'n^2', 'n', '1', 'n^2*d2', 'n*d2', 'd2', 'd4', 'n*d6', 'd6', 'd12',
    'd18', 'd24', 'd24(n-6)', 'd30', 'd36', 'd42', 'd48', 'd60', 'd72', 'd84',
    'd90', 'd96', 'd120', 'd168', 'd180', 'd210', 'd420',
)

# 27 anchors determine the basis only together with n = 102
DEFAULT_ANCHORS = (
    3, 4, 5, 6, 7, 8, 9, 10, 12, 18, 24, 30, 36, 42, 48, 54, 60, 66, 72, 84,
    90, 96, 120, 168, 180, 210, 420, 102,
)


def basis_value(tag, n):
    try:
        return _BASIS_FUNCTIONS[tag](n)
    except KeyError:
        raise ValueError(f"Unknown basis tag {tag!r}") from None


@dataclass(frozen=True)
class TameFunction:
    """Nonzero coefficients as (tag, Fraction) pairs in basis order."""

    coefficients: tuple = ()

    @classmethod
    def of(cls, mapping):
        for tag in mapping:
            if tag not in _BASIS_FUNCTIONS:
                raise ValueError(f"Unknown basis tag {tag!r}")
        return cls(tuple(
            (tag, Fraction(mapping[tag])) for tag in BASIS if mapping.get(tag, 0) != 0
        ))

    def as_dict(self):
        return dict(self.coefficients)

    def as_json(self):
        return {tag: format_rational(value) for tag, value in self.coefficients}

    def is_zero(self):
        return not self.coefficients

    def __call__(self, n):
        return tame_eval(self, n)


def tame_eval(function, n):
    """Exact value of the tame function at n."""
    total = Fraction(0)
    for tag, coefficient in function.coefficients:
        total += coefficient * basis_value(tag, n)
    return total


def tame_fit(samples):
    """
    Solve for the tame function taking the sampled values.

    Args:
        samples: mapping n -> exact value

    Returns:
        TameFunction

    Raises:
        InsufficientAnchorsError: the samples leave a coefficient free
        NotTameError: the samples are inconsistent with every tame function
    """
    points = sorted(samples)
    matrix = Matrix([[basis_value(tag, n) for tag in BASIS] for n in points])
    rank = matrix.rank()
    if rank < len(BASIS):
        raise InsufficientAnchorsError(
            f"insufficient anchors: rank {rank} of {len(BASIS)} from {len(points)} samples"
        )
    values = [Fraction(samples[n]) for n in points]
    rhs = Matrix([Rational(v.numerator, v.denominator) for v in values])
    try:
        solution, _ = matrix.gauss_jordan_solve(rhs)
    except ValueError as exc:
        raise NotTameError(f"not tame on samples: {exc}") from exc
    coefficients = {
        tag: Fraction(int(entry.p), int(entry.q)) for tag, entry in zip(BASIS, solution)
    }
    logger.debug(f"Fitted tame function on {len(points)} samples")
    return TameFunction.of(coefficients)
