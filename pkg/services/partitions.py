"""
Set partitions of a finite point set, stored in canonical block form
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Sequence, Tuple

from constants import ERROR_GAP, ERROR_OUT_OF_RANGE, ERROR_OVERLAP, ERROR_SIZE_MISMATCH
from errors import OutOfRange, OverlapOrGap, SizeMismatch
from utils.formatting import format_partition
from utils.validation import parse_partition_text

logger = logging.getLogger(__name__)


class UnionFind:
    """
    Disjoint-set forest over the points 0..size-1 with path compression and
    union by size.

    Examples:
        >>> uf = UnionFind(3)
        >>> uf.union(0, 2)
        True
        >>> uf.find(0) == uf.find(2)
        True
    """

    __slots__ = ("parent", "weight")

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.weight = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; return False if they were already merged"""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.weight[rx] < self.weight[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.weight[rx] += self.weight[ry]
        return True

    def labels(self, points: Sequence[int]) -> Tuple[int, ...]:
        """Restricted growth string of the induced partition on ``points``"""
        seen = {}
        out = []
        for p in points:
            root = self.find(p)
            label = seen.get(root)
            if label is None:
                label = seen[root] = len(seen)
            out.append(label)
        return tuple(out)


def canonical_labels(labels: Sequence[int]) -> Tuple[int, ...]:
    """Relabel blocks in order of first occurrence (blocks sorted by minimum)"""
    seen = {}
    out = []
    for label in labels:
        new = seen.get(label)
        if new is None:
            new = seen[label] = len(seen)
        out.append(new)
    return tuple(out)


@dataclass(frozen=True)
class Partition:
    """
    An equivalence relation on {0, ..., size-1}.

    ``labels[p]`` is the index of the block holding point p; blocks are numbered
    in order of their minimum element, so two partitions are equal exactly when
    their label tuples are equal.
    """

    size: int
    labels: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...] = field(compare=False, hash=False, repr=False)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        rgs = canonical_labels(labels)
        count = max(rgs) + 1 if rgs else 0
        grouped: List[List[int]] = [[] for _ in range(count)]
        for point, label in enumerate(rgs):
            grouped[label].append(point)
        return cls(len(rgs), rgs, tuple(tuple(b) for b in grouped))

    @classmethod
    def discrete(cls, size: int) -> "Partition":
        return cls.from_labels(range(size))

    @classmethod
    def full(cls, size: int) -> "Partition":
        return cls.from_labels([0] * size)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the 1-based text form ``1,2|3``"""
        blocks = parse_partition_text(text)
        size = sum(len(b) for b in blocks)
        return make_partition(size, [[p - 1 for p in b] for b in blocks])

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def restrict(self, points: Sequence[int]) -> "Partition":
        """Induced partition on ``points``, relabelled 0..len(points)-1"""
        return Partition.from_labels([self.labels[p] for p in points])

    def __str__(self) -> str:
        return format_partition(self.blocks)


def make_partition(size: int, blocks: Sequence[Sequence[int]]) -> Partition:
    """
    Build a canonical Partition from 0-based blocks.

    Block order and the order inside a block are irrelevant.

    Raises:
        OutOfRange: a point is outside 0..size-1
        OverlapOrGap: blocks overlap or leave a point uncovered
    """
    if size < 0:
        raise OutOfRange(f"{ERROR_OUT_OF_RANGE}: negative size {size}")
    labels = [-1] * size
    for index, block in enumerate(blocks):
        if not block:
            raise OverlapOrGap(f"{ERROR_GAP}: empty block")
        for point in block:
            if not isinstance(point, int) or not 0 <= point < size:
                raise OutOfRange(f"{ERROR_OUT_OF_RANGE}: {point} (size {size})")
            if labels[point] != -1:
                raise OverlapOrGap(f"{ERROR_OVERLAP}: point {point} appears twice")
            labels[point] = index
    missing = [p for p, label in enumerate(labels) if label == -1]
    if missing:
        raise OverlapOrGap(f"{ERROR_GAP}: missing {missing}")
    return Partition.from_labels(labels)


def join(p: Partition, q: Partition) -> Partition:
    """Smallest equivalence containing both p and q"""
    if p.size != q.size:
        raise SizeMismatch(f"{ERROR_SIZE_MISMATCH}: {p.size} != {q.size}")
    uf = UnionFind(p.size)
    for part in (p, q):
        for block in part.blocks:
            first = block[0]
            for point in block[1:]:
                uf.union(first, point)
    return Partition.from_labels(uf.labels(range(p.size)))


def restricted_growth_strings(size: int) -> Iterator[Tuple[int, ...]]:
    """Every restricted growth string of length ``size`` in lexicographic order"""
    if size == 0:
        yield ()
        return
    rgs = [0] * size
    # ceiling[i] = max(rgs[:i]); position i may hold at most ceiling[i] + 1
    ceiling = [0] * size
    while True:
        yield tuple(rgs)
        i = size - 1
        while i > 0 and rgs[i] == ceiling[i] + 1:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for j in range(i + 1, size):
            rgs[j] = 0
            ceiling[j] = max(ceiling[j - 1], rgs[j - 1])


def enumerate_partitions(size: int) -> Iterator[Partition]:
    """Yield every partition of ``size`` points exactly once (Bell(size) in total)"""
    if size < 0:
        raise OutOfRange(f"{ERROR_OUT_OF_RANGE}: negative size {size}")
    for rgs in restricted_growth_strings(size):
        yield Partition.from_labels(rgs)
