"""
Froidure-Pin enumeration of a monoid from concrete generators, and the
EnumeratedMonoid it produces (also built from a completed Todd-Coxeter table)
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config import Config
from constants import MULTIPLICATION_TABLE_LIMIT
from errors import CapExceeded, DegreeTooSmall, SizeMismatch
from services.blockbij import BlockBijection, compose, epsilon, gen_s, gen_x, identity, inverse
from services.words import T, X, Letter, Word, s
from utils.performance import monitor_performance

logger = logging.getLogger(__name__)

NO_PREFIX = -1


@dataclass
class EnumeratedMonoid:
    """
    Elements in shortlex order of their representative words, with right and
    left Cayley tables over the letters.

    Element 0 is the identity and its representative is the empty word. For
    every other element i, ``rep_word(i) = rep_word(prefix[i]) + letters[last[i]]``.
    ``elements`` holds BlockBijections for concrete monoids and class numbers for
    presented ones.
    """

    letters: Tuple[Any, ...]
    elements: List[Hashable]
    prefix: np.ndarray
    last: np.ndarray
    right_cayley: np.ndarray
    left_cayley: np.ndarray
    index: Dict[Hashable, int]
    _table: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def is_concrete(self) -> bool:
        return bool(self.elements) and isinstance(self.elements[0], BlockBijection)

    def letter_path(self, i: int) -> List[int]:
        """Letter indices of the representative word of element i"""
        path = []
        while i != 0:
            path.append(int(self.last[i]))
            i = int(self.prefix[i])
        path.reverse()
        return path

    def word_of(self, i: int) -> Word:
        return tuple(self.letters[a] for a in self.letter_path(i))

    @property
    def rep_words(self) -> List[Word]:
        return [self.word_of(i) for i in range(self.size)]

    def index_of(self, element: Hashable) -> int:
        return self.index[element]

    def element_of_word(self, w: Sequence) -> int:
        """Trace a word (letters from ``letters``) from the identity"""
        position = {letter: a for a, letter in enumerate(self.letters)}
        i = 0
        for letter in w:
            i = int(self.right_cayley[i, position[letter]])
        return i

    def multiply(self, i: int, j: int) -> int:
        """Index of element i times element j"""
        if self._table is not None:
            return int(self._table[i, j])
        right = self.right_cayley
        for a in self.letter_path(j):
            i = right[i, a]
        return int(i)

    def multiplication_table(self) -> np.ndarray:
        """Full N x N product table, built one column at a time from the prefix of each word"""
        if self._table is None:
            size = self.size
            if size > MULTIPLICATION_TABLE_LIMIT:
                raise CapExceeded("multiplication table", MULTIPLICATION_TABLE_LIMIT, size)
            dtype = np.int32
            table = np.empty((size, size), dtype=dtype)
            table[:, 0] = np.arange(size, dtype=dtype)
            # columns in index order: prefix[j] < j is already filled
            for j in range(1, size):
                table[:, j] = self.right_cayley[table[:, self.prefix[j]], self.last[j]]
            self._table = table
        return self._table

    # Green's relations

    def _cayley_graph(self, table: np.ndarray) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.size))
        for a in range(table.shape[1]):
            graph.add_edges_from(zip(range(self.size), table[:, a].tolist()))
        return graph

    def _classes(self, table: np.ndarray) -> List[frozenset]:
        components = nx.strongly_connected_components(self._cayley_graph(table))
        return sorted((frozenset(c) for c in components), key=min)

    def green_r_classes(self) -> List[frozenset]:
        """a R b iff aS = bS: strongly connected components of the right Cayley graph"""
        return self._classes(self.right_cayley)

    def green_l_classes(self) -> List[frozenset]:
        """a L b iff Sa = Sb: strongly connected components of the left Cayley graph"""
        return self._classes(self.left_cayley)

    def units(self) -> List[int]:
        """The group of units, i.e. the H-class of the identity"""
        r_class = next(c for c in self.green_r_classes() if 0 in c)
        l_class = next(c for c in self.green_l_classes() if 0 in c)
        return sorted(r_class & l_class)

    def inverse_of(self, i: int) -> int:
        """
        Index of the inverse of element i: the flipped diagram for concrete
        monoids, otherwise the first b with aba = a and bab = b.
        """
        if self.is_concrete:
            return self.index[inverse(self.elements[i])]
        table = self.multiplication_table()
        row = table[i]
        for b in range(self.size):
            if table[row[b], i] == i and table[table[b, i], b] == b:
                return b
        raise ValueError(f"Element {i} has no inverse")


def left_cayley_from_right(right: np.ndarray, prefix: np.ndarray, last: np.ndarray) -> np.ndarray:
    """
    left(0, a) is the element of letter a; for i = u b (u = prefix[i], b = last[i])
    left(i, a) = right(left(u, a), b).
    """
    size, degree = right.shape
    left = np.empty_like(right)
    left[0] = right[0]
    for i in range(1, size):
        left[i] = right[left[prefix[i]], last[i]]
    return left


@monitor_performance("froidure_pin")
def froidure_pin(
    gens: Sequence[BlockBijection],
    letters: Optional[Sequence[Any]] = None,
    cap: Optional[int] = None,
    unit: Optional[BlockBijection] = None,
) -> EnumeratedMonoid:
    """
    Breadth-first closure of ``unit`` (default: the identity) under right
    multiplication by the generators, in shortlex order of words.

    Raises:
        SizeMismatch: generators of different degrees
        CapExceeded: more than ``cap`` elements
    """
    if not gens:
        raise ValueError("At least one generator is required")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise SizeMismatch(f"Generators must share one degree, got {sorted({g.n for g in gens})}")
    letters = tuple(letters) if letters is not None else tuple(range(len(gens)))
    if len(letters) != len(gens):
        raise SizeMismatch(f"{len(letters)} letters for {len(gens)} generators")
    cap = cap or Config.FP_MAX_ELEMENTS

    start = unit if unit is not None else identity(n)
    elements: List[BlockBijection] = [start]
    index: Dict[BlockBijection, int] = {start: 0}
    prefix = [NO_PREFIX]
    last = [NO_PREFIX]
    right_rows: List[List[int]] = []

    i = 0
    while i < len(elements):
        current = elements[i]
        row = []
        for a, g in enumerate(gens):
            product = compose(current, g)
            j = index.get(product)
            if j is None:
                j = len(elements)
                if j >= cap:
                    logger.error(f"froidure_pin stopped at {j} elements (cap {cap})")
                    raise CapExceeded("froidure_pin", cap, j + 1)
                elements.append(product)
                index[product] = j
                prefix.append(i)
                last.append(a)
            row.append(j)
        right_rows.append(row)
        i += 1
        if i % 1000 == 0:
            logger.debug(f"froidure_pin: {i} of {len(elements)} elements expanded")

    right = np.array(right_rows, dtype=np.int32)
    prefix_arr = np.array(prefix, dtype=np.int32)
    last_arr = np.array(last, dtype=np.int32)
    left = left_cayley_from_right(right, prefix_arr, last_arr)
    logger.info(f"froidure_pin: degree {n}, {len(gens)} generators, {len(elements)} elements")
    return EnumeratedMonoid(letters, elements, prefix_arr, last_arr, right, left, index)


def phi_generators(n: int, kind: str = "xs") -> Tuple[Tuple[Letter, ...], List[BlockBijection]]:
    """
    Letters and generator images at degree n.

    ``xs``: x, s_1..s_{n-1} (at n = 2, where x is undefined, t -> epsilon stands in);
    ``f``: t -> epsilon, s_1..s_{n-1}; ``s``: s_1..s_{n-1} only.
    """
    if n < 1:
        raise DegreeTooSmall(f"Degree must be positive, got {n}")
    letters: List[Letter] = [s(i) for i in range(1, n)]
    gens = [gen_s(n, i) for i in range(1, n)]
    if kind == "xs" and n >= 3:
        letters.insert(0, X)
        gens.insert(0, gen_x(n))
    elif kind in ("xs", "f") and n >= 2:
        letters.insert(0, T)
        gens.insert(0, epsilon(n))
    elif kind not in ("xs", "f", "s"):
        raise ValueError(f"Unknown generator set {kind!r}")
    if not gens:
        # degree 1: the trivial monoid, generated by its identity
        return (T,), [identity(1)]
    return tuple(letters), gens


def enumerate_dual_symmetric(n: int, cap: Optional[int] = None) -> EnumeratedMonoid:
    """I_n* enumerated from the generator images"""
    letters, gens = phi_generators(n, "xs")
    return froidure_pin(gens, letters, cap=cap)
