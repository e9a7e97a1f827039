"""
Vanishing sums of roots of unity.

A relation is stored as a CycSum with positive coefficients (the
multiplicities) whose value is exactly zero. Rotation multiplies every
term by one root of unity; canonical_form picks one representative per
rotation class.
"""

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np
from sympy import isprime

from apps.exactnum.cyclotomic import (
    CycSum,
    RootOfUnity,
    add,
    cyc_is_zero,
    fold_signs,
    lift,
    negate,
    power_residues,
    rotate,
)


class InvalidRelationError(ValueError):
    """A sum that is not a vanishing combination with positive multiplicities."""


class CompositionError(ValueError):
    """Anchors that collide or subtrahends that overlap the base relation."""


@dataclass(frozen=True)
class Relation:
    terms: CycSum

    def __post_init__(self):
        if self.terms.is_empty():
            raise InvalidRelationError("A relation needs at least one term")
        if any(c < 1 for _, c in self.terms.terms):
            raise InvalidRelationError(
                f"Multiplicities must be positive, got {self.terms.terms}"
            )
        if not cyc_is_zero(self.terms):
            raise InvalidRelationError(f"Sum does not vanish: {self.terms.terms}")

    @property
    def ring_order(self):
        return self.terms.ring_order

    @property
    def weight(self):
        return self.terms.weight

    @property
    def roots(self):
        return tuple(RootOfUnity(self.ring_order, e) for e, _ in self.terms.terms)

    def multiplicity(self, root):
        order = self.ring_order
        root = root.reduced()
        if order % root.order:
            return 0
        return self.terms.coefficients.get(root.exponent * (order // root.order), 0)

    def contains_one(self):
        return self.terms.coefficients.get(0, 0) > 0

    def rotated(self, root):
        return Relation(rotate(self.terms, root))

    def as_triples(self):
        """[order, exponent, multiplicity] per term, each root in lowest terms."""
        rows = []
        for exponent, multiplicity in self.terms.terms:
            root = RootOfUnity(self.ring_order, exponent).reduced()
            rows.append([root.order, root.exponent, multiplicity])
        return sorted(rows)


def base_relation(p):
    """R_p = 1 + zeta_p + ... + zeta_p^(p-1)."""
    if not isprime(p):
        raise InvalidRelationError(f"R_p needs a prime, got {p}")
    return Relation(CycSum(p, tuple((e, 1) for e in range(p))))


def compose(base, subtrahends):
    """
    Build (S : T_1, ..., T_j).

    Each T_i must contain the root 1; it is rotated onto its anchor, a
    root of S, so that the two share exactly that root. The rotated T_i
    are subtracted from S and the resulting minus signs folded into roots.

    Args:
        base: the relation S
        subtrahends: list of (T_i, anchor) pairs, anchor a RootOfUnity

    Returns:
        the composed Relation
    """
    anchors = [anchor for _, anchor in subtrahends]
    anchor_keys = {(a.reduced().order, a.reduced().exponent) for a in anchors}
    if len(anchor_keys) != len(anchors):
        raise CompositionError(f"Anchors collide: {anchors}")

    result = base.terms
    for part, anchor in subtrahends:
        if not base.multiplicity(anchor):
            raise CompositionError(f"Anchor {anchor} is not a root of the base relation")
        if not part.contains_one():
            raise CompositionError("Subtrahend must contain the root 1 before anchoring")
        placed = part.rotated(anchor)
        shared = [r for r in placed.roots if base.multiplicity(r)]
        if len(shared) != 1:
            raise CompositionError(
                f"Subtrahend anchored at {anchor} shares {len(shared)} roots with the base"
            )
        result = add(result, negate(placed.terms))

    composed = fold_signs(result).minimal_ring()
    expected = base.weight + sum(part.weight - 2 for part, _ in subtrahends)
    if composed.weight != expected:
        raise CompositionError(f"Composition weight {composed.weight} differs from {expected}")
    return Relation(composed)


def is_minimal(relation):
    """
    True iff no proper nonempty sub-multiset vanishes.

    Every choice 0 <= b_i <= a_i is tested at once: the rows x^e mod Phi_N
    of the terms form a matrix, and a choice vanishes iff its combination
    of rows is zero.
    """
    terms = relation.terms.minimal_ring()
    rows = power_residues(terms.ring_order)
    exponents = [e for e, _ in terms.terms]
    multiplicities = [c for _, c in terms.terms]
    residues = np.array([rows[e] for e in exponents], dtype=np.int64)
    choices = np.array(
        list(itertools.product(*(range(a + 1) for a in multiplicities))),
        dtype=np.int64,
    )
    vanishing = ~np.any(choices @ residues, axis=1)
    totals = choices.sum(axis=1)
    proper = (totals > 0) & (totals < relation.weight)
    return not bool(np.any(vanishing & proper))


def _canonical_terms(terms):
    order = terms.ring_order
    exponents = [e for e, _ in terms.terms]
    step = order
    for e in exponents:
        step = gcd(step, e - exponents[0])
    reduced_order = order // step
    best = None
    for pivot in exponents:
        candidate = tuple(sorted(
            (((e - pivot) % order) // step, c) for e, c in terms.terms
        ))
        if best is None or candidate < best:
            best = candidate
    return reduced_order, best


def canonical_form(relation):
    """
    The least rotation of the relation, written over its smallest ring.

    The least rotation always puts some term at exponent 0, so only the
    rotations by inverses of member roots are compared.
    """
    reduced_order, terms = _canonical_terms(relation.terms)
    return Relation(CycSum(reduced_order, terms))


def canonical_key(relation):
    return _canonical_terms(relation.terms)


def disjoint_union(*relations):
    """Sum of relations as one relation; never minimal for two or more parts."""
    total = relations[0].terms
    for other in relations[1:]:
        total = add(total, other.terms)
    return Relation(total)


def lifted(relation, order):
    return Relation(lift(relation.terms, order))
