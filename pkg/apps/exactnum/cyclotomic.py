"""
Formal sums of roots of unity and the exact zero test.

A CycSum is an integer combination of powers of zeta_N = exp(2*pi*i/N).
It is zero exactly when its exponent polynomial is divisible by the N-th
cyclotomic polynomial, so the zero test reduces each power x^e modulo
Phi_N with integer arithmetic and never touches floating point.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd, lcm

from sympy import divisors, mobius

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2*pi*i*exponent/order); the exponent is kept reduced mod order."""

    order: int
    exponent: int = 0

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"Root of unity needs a positive order, got {self.order}")
        object.__setattr__(self, 'exponent', self.exponent % self.order)

    def reduced(self):
        """Same root written with its primitive order."""
        common = gcd(self.exponent, self.order)
        return RootOfUnity(self.order // common, self.exponent // common)

    def as_sum(self):
        return CycSum(self.order, ((self.exponent, 1),))


@dataclass(frozen=True)
class CycSum:
    """
    Sum of c_e * zeta_N^e over a fixed ring order N.

    `terms` is normalized on construction: exponents reduced mod N, equal
    exponents merged, zero coefficients dropped, sorted by exponent.
    """

    ring_order: int
    terms: tuple = ()

    def __post_init__(self):
        if self.ring_order < 1:
            raise ValueError(f"Ring order must be positive, got {self.ring_order}")
        collected = {}
        for exponent, coefficient in self.terms:
            key = exponent % self.ring_order
            collected[key] = collected.get(key, 0) + coefficient
        object.__setattr__(
            self,
            'terms',
            tuple(sorted((e, c) for e, c in collected.items() if c)),
        )

    @classmethod
    def from_coefficients(cls, ring_order, coefficients):
        return cls(ring_order, tuple(coefficients.items()))

    @property
    def coefficients(self):
        return dict(self.terms)

    @property
    def weight(self):
        return sum(c for _, c in self.terms)

    def is_empty(self):
        return not self.terms

    def minimal_ring(self):
        """Rewrite over the smallest ring order that holds every exponent."""
        common = self.ring_order
        for exponent, _ in self.terms:
            common = gcd(common, exponent)
        if common <= 1:
            return self
        return CycSum(
            self.ring_order // common,
            tuple((e // common, c) for e, c in self.terms),
        )


class CycOp(Enum):
    ADD = 'add'
    SUB = 'sub'
    MUL = 'mul'
    NEGATE = 'negate'
    ROTATE = 'rotate'


def lift(value, order):
    """Embed `value` into the ring of the given order (a multiple of its own)."""
    if order % value.ring_order:
        raise ValueError(
            f"Cannot lift ring order {value.ring_order} into order {order}"
        )
    factor = order // value.ring_order
    return CycSum(order, tuple((e * factor, c) for e, c in value.terms))


def _aligned(a, b):
    order = lcm(a.ring_order, b.ring_order)
    return lift(a, order), lift(b, order)


def add(a, b):
    a, b = _aligned(a, b)
    return CycSum(a.ring_order, a.terms + b.terms)


def negate(a):
    return CycSum(a.ring_order, tuple((e, -c) for e, c in a.terms))


def sub(a, b):
    return add(a, negate(b))


def mul(a, b):
    a, b = _aligned(a, b)
    return CycSum(
        a.ring_order,
        tuple((e1 + e2, c1 * c2) for e1, c1 in a.terms for e2, c2 in b.terms),
    )


def rotate(a, root):
    """Multiply every term by a single root of unity."""
    if isinstance(root, CycSum):
        if len(root.terms) != 1 or root.terms[0][1] != 1:
            raise ValueError("Rotation needs a single root of unity with coefficient 1")
        root = RootOfUnity(root.ring_order, root.terms[0][0])
    return mul(a, root.as_sum())


def cyc_arith(a, b, op):
    """
    Apply one ring operation.

    Args:
        a: left operand
        b: right operand; ignored for NEGATE, a root for ROTATE
        op: CycOp or its string value

    Returns:
        CycSum over the lcm of the operand orders
    """
    op = CycOp(op)
    if op is CycOp.ADD:
        return add(a, b)
    if op is CycOp.SUB:
        return sub(a, b)
    if op is CycOp.MUL:
        return mul(a, b)
    if op is CycOp.NEGATE:
        return negate(a)
    return rotate(a, b)


def fold_signs(value):
    """
    Turn -zeta^e into +zeta^(e + N/2) so every coefficient is positive.

    Odd ring orders are doubled first so that -1 is available.
    """
    if value.ring_order % 2:
        value = lift(value, 2 * value.ring_order)
    half = value.ring_order // 2
    return CycSum(
        value.ring_order,
        tuple((e + half, -c) if c < 0 else (e, c) for e, c in value.terms),
    )


def _times_binomial(poly, degree):
    # poly * (x^degree - 1)
    result = [0] * (len(poly) + degree)
    for i, c in enumerate(poly):
        result[i + degree] += c
        result[i] -= c
    return result


def _divide_binomial(poly, degree):
    # exact poly / (x^degree - 1), top coefficient first
    top = len(poly) - 1
    quotient = [0] * (top - degree + 1)
    for i in range(top, degree - 1, -1):
        carry = quotient[i] if i < len(quotient) else 0
        quotient[i - degree] = poly[i] + carry
    for i in range(degree):
        expected = -(quotient[i] if i < len(quotient) else 0)
        if poly[i] != expected:
            raise ArithmeticError(f"x^{degree} - 1 does not divide the product")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order):
    """Integer coefficients of Phi_order, lowest degree first."""
    if order < 1:
        raise ValueError(f"Cyclotomic order must be positive, got {order}")
    numerator = [1]
    denominators = []
    for d in divisors(order):
        sign = mobius(order // d)
        if sign == 1:
            numerator = _times_binomial(numerator, d)
        elif sign == -1:
            denominators.append(d)
    for d in denominators:
        numerator = _divide_binomial(numerator, d)
    return tuple(numerator)


@lru_cache(maxsize=64)
def power_residues(order):
    """
    Rows r_e = x^e mod Phi_order for 0 <= e < order.

    Each row has length deg(Phi_order); Phi is monic, so stepping
    r_{e+1} = x * r_e only needs one subtraction of the top coefficient.
    """
    phi = cyclotomic_polynomial(order)
    degree = len(phi) - 1
    current = [0] * degree
    current[0] = 1
    rows = []
    for _ in range(order):
        rows.append(tuple(current))
        top = current[-1]
        shifted = [0] + current[:-1]
        if top:
            for i in range(degree):
                shifted[i] -= top * phi[i]
        current = shifted
    logger.debug(f"Built {order} power residues of degree {degree}")
    return tuple(rows)


def cyc_is_zero(value):
    """True iff the sum is exactly zero as a complex number."""
    if value.is_empty():
        return True
    value = value.minimal_ring()
    rows = power_residues(value.ring_order)
    remainder = [0] * len(rows[0])
    for exponent, coefficient in value.terms:
        for i, entry in enumerate(rows[exponent]):
            if entry:
                remainder[i] += coefficient * entry
    return not any(remainder)
