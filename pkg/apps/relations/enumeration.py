"""
Census of minimal relations of small weight.

Candidates follow the composition grammar: a base R_p, or (R_p : T_1..T_j)
with j < p and every T_i a smaller-prime class other than R_2. Each
candidate is checked for minimality and deduplicated up to rotation; the
first type to produce a rotation class keeps it.
"""

import itertools
import logging
from collections import OrderedDict
from dataclasses import dataclass

from sympy import primerange

from apps.exactnum.cyclotomic import RootOfUnity

from .relation import (
    CompositionError,
    base_relation,
    canonical_form,
    canonical_key,
    compose,
    is_minimal,
)

logger = logging.getLogger(__name__)

MAX_SUPPORTED_WEIGHT = 12


class UnsupportedRangeError(ValueError):
    """Requested weight lies outside the searched range."""


@dataclass(frozen=True)
class RelationType:
    """Composition tree: R_base, or (R_base : parts...)."""

    base: int
    parts: tuple = ()

    @property
    def weight(self):
        return self.base + sum(part.weight - 2 for part in self.parts)

    @property
    def label(self):
        if not self.parts:
            return f"R_{self.base}"
        pieces = []
        for part, group in itertools.groupby(self.parts):
            count = len(list(group))
            pieces.append(f"{count}{part.label}" if count > 1 else part.label)
        return f"(R_{self.base}:{','.join(pieces)})"

    def sort_key(self):
        return (
            self.weight,
            self.base,
            tuple(sorted((part.weight for part in self.parts), reverse=True)),
            self.label,
        )

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class RelationClass:
    relation_type: RelationType
    count: int

    @property
    def label(self):
        return self.relation_type.label

    @property
    def weight(self):
        return self.relation_type.weight


R2 = RelationType(2)


def _part_order(part):
    return (part.weight, part.label)


def _anchored_variants(relation_type, found):
    """Every rotation of the class's relations that contains the root 1."""
    variants = OrderedDict()
    for relation in found[relation_type]:
        for root in relation.roots:
            turned = relation.rotated(RootOfUnity(root.order, -root.exponent))
            variants.setdefault(turned.terms, turned)
    return list(variants.values())


def _realizations(base, parts, found):
    p = base.ring_order
    variant_lists = [_anchored_variants(part, found) for part in parts]
    # R_p is invariant under zeta_p, so the first part can sit at exponent 0
    for tail in itertools.permutations(range(1, p), len(parts) - 1):
        anchors = (0,) + tail
        for choice in itertools.product(*variant_lists):
            subtrahends = [
                (relation, RootOfUnity(p, anchor))
                for relation, anchor in zip(choice, anchors)
            ]
            try:
                yield compose(base, subtrahends)
            except CompositionError as exc:
                logger.debug(f"Skipped candidate for R_{p}: {exc}")


def _register(relation, relation_type, seen, found):
    key = canonical_key(relation)
    if key in seen:
        return False
    if not is_minimal(relation):
        logger.debug(f"Dropped non-minimal candidate of type {relation_type}")
        return False
    seen[key] = relation_type
    found.setdefault(relation_type, []).append(canonical_form(relation))
    return True


def enumerate_minimal(max_weight=MAX_SUPPORTED_WEIGHT):
    """
    All minimal relations up to rotation with weight at most max_weight.

    Returns:
        list of (RelationClass, [Relation, ...]) sorted by weight, base
        prime and part weights; relations inside a class in canonical order
    """
    if max_weight > MAX_SUPPORTED_WEIGHT:
        raise UnsupportedRangeError(
            f"Minimal relations are only enumerated up to weight {MAX_SUPPORTED_WEIGHT}, "
            f"got {max_weight}"
        )
    seen = {}
    found = {}
    for p in primerange(2, max_weight + 1):
        p = int(p)
        base = base_relation(p)
        _register(base, RelationType(p), seen, found)
        budget = max_weight - p
        lower = sorted(
            (t for t in found if t.base < p and t != R2 and t.weight - 2 <= budget),
            key=RelationType.sort_key,
        )
        for size in range(1, p):
            if size > budget:
                break
            for combo in itertools.combinations_with_replacement(lower, size):
                if sum(t.weight - 2 for t in combo) > budget:
                    continue
                parts = tuple(sorted(combo, key=_part_order, reverse=True))
                relation_type = RelationType(p, parts)
                for relation in _realizations(base, parts, found):
                    _register(relation, relation_type, seen, found)

    census = []
    for relation_type in sorted(found, key=RelationType.sort_key):
        relations = sorted(found[relation_type], key=lambda r: r.as_triples())
        if relation_type.weight > max_weight:
            continue
        census.append((RelationClass(relation_type, len(relations)), relations))
    total = sum(cls.count for cls, _ in census)
    logger.info(f"Enumerated {total} minimal relations of weight <= {max_weight}")
    return census
