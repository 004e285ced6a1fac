"""
Block bijections of degree n: the elements of the dual symmetric inverse monoid
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, List, Sequence, Tuple

from constants import (
    ERROR_NOT_LOCAL,
    ERROR_NOT_UNIT,
    ERROR_OUT_OF_RANGE,
    ERROR_ROW_MISSING,
    ERROR_SIZE_MISMATCH,
    MIN_DEGREE_EPSILON,
    MIN_DEGREE_X,
)
from errors import (
    DegreeTooSmall,
    IndexOutOfRange,
    NotAUnit,
    NotBiequivalence,
    NotInLocalSubmonoid,
    OutOfRange,
    SizeMismatch,
)
from services.partitions import Partition, UnionFind, make_partition
from utils.formatting import format_block_bijection, render_ascii, render_dot
from utils.validation import parse_block_bijection_text

logger = logging.getLogger(__name__)

# Row tags for from_blocks
TOP = 0
BOTTOM = 1


@dataclass(frozen=True)
class BlockBijection:
    """
    A partition of the 2n vertices 1..n (top) and 1'..n' (bottom) in which
    every block meets both rows.

    Top vertex i is point i-1 of ``diagram``; bottom vertex i' is point n+i-1.
    """

    n: int
    diagram: Partition

    # Construction

    @classmethod
    def _trusted(cls, n: int, labels: Sequence[int]) -> "BlockBijection":
        return cls(n, Partition.from_labels(labels))

    @classmethod
    def from_rows(
        cls, n: int, blocks: Iterable[Tuple[Sequence[int], Sequence[int]]]
    ) -> "BlockBijection":
        """Build from 1-based (tops, bottoms) pairs, e.g. [([1, 2], [3]), ([3], [1, 2])]"""
        points = []
        for top, bottom in blocks:
            block = []
            for v in top:
                if not 1 <= v <= n:
                    raise OutOfRange(f"{ERROR_OUT_OF_RANGE}: top vertex {v} (degree {n})")
                block.append(v - 1)
            for v in bottom:
                if not 1 <= v <= n:
                    raise OutOfRange(f"{ERROR_OUT_OF_RANGE}: bottom vertex {v}' (degree {n})")
                block.append(n + v - 1)
            points.append(block)
        diagram = make_partition(2 * n, points)
        for block in diagram.blocks:
            if block[0] >= n or block[-1] < n:
                raise NotBiequivalence(f"{ERROR_ROW_MISSING}: {block}")
        return cls(n, diagram)

    @classmethod
    def from_blocks(
        cls, n: int, blocks: Iterable[Iterable[Tuple[int, int]]]
    ) -> "BlockBijection":
        """Build from blocks of (row, index) pairs with row TOP or BOTTOM and 1-based index"""
        rows = []
        for block in blocks:
            top, bottom = [], []
            for row, index in block:
                if row == TOP:
                    top.append(index)
                elif row == BOTTOM:
                    bottom.append(index)
                else:
                    raise OutOfRange(f"{ERROR_OUT_OF_RANGE}: row tag {row!r}")
            rows.append((top, bottom))
        return cls.from_rows(n, rows)

    @classmethod
    def from_literal(cls, n: int, text: str) -> "BlockBijection":
        """Parse ``1,2;3|3;1,2``"""
        return cls.from_rows(n, parse_block_bijection_text(text))

    @classmethod
    def identity(cls, n: int) -> "BlockBijection":
        return cls._trusted(n, list(range(n)) * 2)

    @classmethod
    def from_permutation(cls, images: Sequence[int]) -> "BlockBijection":
        """Unit sending top vertex i to bottom vertex images[i-1] (1-based images)"""
        n = len(images)
        labels = list(range(n)) + [0] * n
        for i, image in enumerate(images):
            labels[n + image - 1] = i
        return cls._trusted(n, labels)

    @classmethod
    def from_equivalence(cls, partition: Partition) -> "BlockBijection":
        """The idempotent whose domain and range are ``partition``, blocks matched identically"""
        return cls._trusted(partition.size, partition.labels * 2)

    # Views

    @property
    def labels(self) -> Tuple[int, ...]:
        return self.diagram.labels

    @cached_property
    def _edges(self) -> Tuple[Tuple[int, int], ...]:
        """Spanning star of every block: (first point, other point) pairs"""
        return tuple((block[0], p) for block in self.diagram.blocks for p in block[1:])

    def blocks(self) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """1-based (tops, bottoms) pairs in canonical order"""
        n = self.n
        return [
            (tuple(p + 1 for p in block if p < n), tuple(p - n + 1 for p in block if p >= n))
            for block in self.diagram.blocks
        ]

    @property
    def rank(self) -> int:
        return self.diagram.block_count

    def to_literal(self) -> str:
        return format_block_bijection(self.blocks())

    def render(self, dot: bool = False) -> str:
        if dot:
            return render_dot(self.n, self.blocks())
        return render_ascii(self.n, self.blocks())

    def __str__(self) -> str:
        return self.to_literal()

    # Predicates

    def is_unit(self) -> bool:
        return all(len(block) == 2 and block[0] < self.n <= block[1] for block in self.diagram.blocks)

    def is_idempotent(self) -> bool:
        return compose(self, self) == self


def compose(a: BlockBijection, b: BlockBijection) -> BlockBijection:
    """
    Stack a above b, identify a's bottom row with b's top row, and keep the
    connected components restricted to a's top row and b's bottom row.
    """
    n = a.n
    if b.n != n:
        raise SizeMismatch(f"{ERROR_SIZE_MISMATCH}: degree {n} != {b.n}")
    # points 0..n-1 top of a, n..2n-1 shared middle row, 2n..3n-1 bottom of b
    uf = UnionFind(3 * n)
    union = uf.union
    for p, q in a._edges:
        union(p, q)
    for p, q in b._edges:
        union(p + n, q + n)
    return BlockBijection._trusted(n, uf.labels(list(range(n)) + list(range(2 * n, 3 * n))))


def inverse(a: BlockBijection) -> BlockBijection:
    """Swap the rows of every block"""
    n = a.n
    labels = a.labels
    return BlockBijection._trusted(n, labels[n:] + labels[:n])


def domain(a: BlockBijection) -> Partition:
    return a.diagram.restrict(range(a.n))


def range_of(a: BlockBijection) -> Partition:
    return a.diagram.restrict(range(a.n, 2 * a.n))


def is_uniform(a: BlockBijection) -> bool:
    """Every block has as many top vertices as bottom vertices"""
    n = a.n
    for block in a.diagram.blocks:
        tops = sum(1 for p in block if p < n)
        if 2 * tops != len(block):
            return False
    return True


def is_unit(a: BlockBijection) -> bool:
    return a.is_unit()


@lru_cache(maxsize=None)
def gen_x(n: int) -> BlockBijection:
    """Blocks {1,2;3'}, {3;1',2'} and {i;i'} for i >= 4"""
    if n < MIN_DEGREE_X:
        raise DegreeTooSmall(f"gen_x needs degree >= {MIN_DEGREE_X}, got {n}")
    blocks = [([1, 2], [3]), ([3], [1, 2])] + [([i], [i]) for i in range(4, n + 1)]
    return BlockBijection.from_rows(n, blocks)


@lru_cache(maxsize=None)
def gen_s(n: int, i: int) -> BlockBijection:
    """Transposition diagram: i -> (i+1)', i+1 -> i', every other j -> j'"""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"s_{i} is not a generator at degree {n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = i + 1, i
    return BlockBijection.from_permutation(images)


@lru_cache(maxsize=None)
def epsilon(n: int) -> BlockBijection:
    """The idempotent (1,2|3|...|n)"""
    if n < MIN_DEGREE_EPSILON:
        raise DegreeTooSmall(f"epsilon needs degree >= {MIN_DEGREE_EPSILON}, got {n}")
    return BlockBijection.from_equivalence(Partition.from_labels([0] + list(range(n - 1))))


def identity(n: int) -> BlockBijection:
    return BlockBijection.identity(n)


def in_local_submonoid(b: BlockBijection) -> bool:
    e = epsilon(b.n)
    return compose(e, compose(b, e)) == b


def upsilon(b: BlockBijection) -> BlockBijection:
    """
    Identify vertices 1 = 2 and 1' = 2' of an element of the local submonoid
    of epsilon, giving a block bijection of degree n-1.
    """
    if not in_local_submonoid(b):
        raise NotInLocalSubmonoid(f"{ERROR_NOT_LOCAL}: {b}")
    n = b.n
    labels = b.labels
    merged = labels[0:1] + labels[2:n] + labels[n : n + 1] + labels[n + 2 :]
    return BlockBijection._trusted(n - 1, merged)


def upsilon_inverse(c: BlockBijection) -> BlockBijection:
    """Split vertex 1 (and 1') of a degree n-1 diagram back into 1, 2 (and 1', 2')"""
    m = c.n
    labels = c.labels
    split = labels[0:1] * 2 + labels[1:m] + labels[m : m + 1] * 2 + labels[m + 1 :]
    return BlockBijection._trusted(m + 1, split)


def conjugate(a: BlockBijection, g: BlockBijection) -> BlockBijection:
    """g^-1 a g for a unit g"""
    if not g.is_unit():
        raise NotAUnit(f"{ERROR_NOT_UNIT}: {g}")
    return compose(compose(inverse(g), a), g)
