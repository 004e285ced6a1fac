"""
Structure of an enumerated monoid: idempotents, units, inverses, Green's H-classes
and the factorizable part
"""

import logging
import random
from typing import List, Optional, Set

import numpy as np

from constants import MULTIPLICATION_TABLE_LIMIT
from services.blockbij import compose, inverse, is_uniform
from services.froidure_pin import EnumeratedMonoid

logger = logging.getLogger(__name__)


def _has_table(M: EnumeratedMonoid) -> bool:
    return M.size <= MULTIPLICATION_TABLE_LIMIT


def idempotents(M: EnumeratedMonoid) -> List[int]:
    """Indices e with e * e = e, identity first"""
    if _has_table(M):
        table = M.multiplication_table()
        diagonal = table[np.arange(M.size), np.arange(M.size)]
        return np.flatnonzero(diagonal == np.arange(M.size)).tolist()
    if M.is_concrete:
        return [i for i, a in enumerate(M.elements) if a.is_idempotent()]
    return [i for i in range(M.size) if M.multiply(i, i) == i]


def units(M: EnumeratedMonoid) -> List[int]:
    if M.is_concrete:
        return [i for i, a in enumerate(M.elements) if a.is_unit()]
    return M.units()


def is_regular(M: EnumeratedMonoid) -> bool:
    """Every a has some b with a b a = a"""
    if _has_table(M):
        table = M.multiplication_table()
        for a in range(M.size):
            if not np.any(table[table[a], a] == a):
                return False
        return True
    if M.is_concrete:
        # the flipped diagram is always a candidate
        return all(compose(compose(a, inverse(a)), a) == a for a in M.elements)
    raise ValueError("Regularity test needs a multiplication table or concrete elements")


def idempotents_commute(
    M: EnumeratedMonoid, sample: Optional[int] = None, seed: Optional[int] = None
) -> bool:
    """All pairs of idempotents commute; with ``sample`` only that many random pairs are tried"""
    es = idempotents(M)
    if sample is None and _has_table(M):
        table = M.multiplication_table()
        block = table[np.ix_(es, es)]
        return bool(np.array_equal(block, block.T))
    if sample is None:
        pairs = ((e, f) for i, e in enumerate(es) for f in es[i + 1 :])
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(es), rng.choice(es)) for _ in range(sample))
    for e, f in pairs:
        if M.multiply(e, f) != M.multiply(f, e):
            logger.warning(f"Idempotents {e} and {f} do not commute")
            return False
    return True


def is_inverse_monoid(
    M: EnumeratedMonoid, sample: Optional[int] = None, seed: Optional[int] = None
) -> bool:
    """Regular with commuting idempotents"""
    return is_regular(M) and idempotents_commute(M, sample=sample, seed=seed)


def inverse_counts(M: EnumeratedMonoid) -> np.ndarray:
    """For each a, the number of b with a b a = a and b a b = b"""
    table = M.multiplication_table()
    everything = np.arange(M.size)
    counts = np.empty(M.size, dtype=np.int64)
    for a in range(M.size):
        aba = table[table[a], a] == a
        bab = table[table[:, a], everything] == everything
        counts[a] = np.count_nonzero(aba & bab)
    return counts


def has_unique_inverses(M: EnumeratedMonoid) -> bool:
    return bool(np.all(inverse_counts(M) == 1))


def green_h_class(M: EnumeratedMonoid, a: int) -> Set[int]:
    r_class = next(c for c in M.green_r_classes() if a in c)
    l_class = next(c for c in M.green_l_classes() if a in c)
    return set(r_class & l_class)


def green_h_classes(M: EnumeratedMonoid) -> List[Set[int]]:
    r_of = {}
    for k, c in enumerate(M.green_r_classes()):
        for a in c:
            r_of[a] = k
    l_of = {}
    for k, c in enumerate(M.green_l_classes()):
        for a in c:
            l_of[a] = k
    classes = {}
    for a in range(M.size):
        classes.setdefault((r_of[a], l_of[a]), set()).add(a)
    return sorted(classes.values(), key=min)


def is_completely_regular(M: EnumeratedMonoid, a: int) -> bool:
    """The H-class of a is a group, i.e. contains an idempotent"""
    return any(M.multiply(h, h) == h for h in green_h_class(M, a))


def factorizable_part(M: EnumeratedMonoid) -> Set[int]:
    """E(M) G(M)"""
    es, gs = idempotents(M), units(M)
    return {M.multiply(e, g) for e in es for g in gs}


def factorizable_part_right(M: EnumeratedMonoid) -> Set[int]:
    """G(M) E(M)"""
    es, gs = idempotents(M), units(M)
    return {M.multiply(g, e) for g in gs for e in es}


def uniform_elements(M: EnumeratedMonoid) -> Set[int]:
    return {i for i, a in enumerate(M.elements) if is_uniform(a)}
