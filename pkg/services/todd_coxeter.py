"""
Todd-Coxeter enumeration of the congruence classes of a finitely presented monoid
"""

import logging
from collections import deque
from typing import Deque, List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from constants import LOOKAHEAD_TRIGGER
from errors import CapExceeded
from services.froidure_pin import NO_PREFIX, EnumeratedMonoid, left_cayley_from_right
from services.words import Presentation, shortlex_key
from utils.performance import monitor_performance

logger = logging.getLogger(__name__)

UNDEFINED = -1

# Relation sides as letter-index tuples
IndexWord = Tuple[int, ...]


class CongruenceTable:
    """
    Class table of a monoid presentation, HLT strategy.

    Class 0 is the class of the empty word and ``table[c][a]`` is the class of
    (word of c) * letter a. Classes that have been identified with a smaller one
    stay in the table; ``find`` maps them to their live representative and
    entries are resolved lazily.
    """

    def __init__(
        self, presentation: Presentation, cap: Optional[int] = None, lookahead: Optional[bool] = None
    ):
        self.presentation = presentation
        self.degree = len(presentation.alphabet)
        self.cap = cap or Config.TC_MAX_CLASSES
        self.use_lookahead = Config.TC_LOOKAHEAD if lookahead is None else lookahead
        position = presentation.letter_index()
        ordered = sorted(
            presentation.relations,
            key=lambda pair: (len(pair[0]) + len(pair[1]), shortlex_key(pair[0]), shortlex_key(pair[1])),
        )
        self.relations: List[Tuple[IndexWord, IndexWord]] = []
        for u, v in ordered:
            u_idx = tuple(position[letter] for letter in u)
            v_idx = tuple(position[letter] for letter in v)
            if len(u_idx) < len(v_idx):
                u_idx, v_idx = v_idx, u_idx
            if u_idx:
                self.relations.append((u_idx, v_idx))
        self.table: List[List[int]] = []
        self.parent: List[int] = []
        self.live = 0
        self.queue: Deque[Tuple[int, int]] = deque()
        self.next_lookahead = max(1, int(LOOKAHEAD_TRIGGER * self.cap))
        self.complete = False
        self.new_class()

    # Class bookkeeping

    def find(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def target(self, c: int, a: int) -> int:
        t = self.table[c][a]
        if t == UNDEFINED:
            return UNDEFINED
        r = self.find(t)
        if r != t:
            self.table[c][a] = r
        return r

    def new_class(self) -> int:
        c = len(self.table)
        self.table.append([UNDEFINED] * self.degree)
        self.parent.append(c)
        self.live += 1
        return c

    def define(self, c: int, a: int) -> int:
        t = self.new_class()
        self.table[c][a] = t
        return t

    def identify(self, a: int, b: int):
        """Merge classes a and b and everything their rows force together"""
        queue = self.queue
        queue.append((a, b))
        while queue:
            x, y = queue.popleft()
            x, y = self.find(x), self.find(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            self.parent[y] = x
            self.live -= 1
            row_x, row_y = self.table[x], self.table[y]
            for letter in range(self.degree):
                ty = row_y[letter]
                if ty == UNDEFINED:
                    continue
                tx = row_x[letter]
                if tx == UNDEFINED:
                    row_x[letter] = ty
                else:
                    queue.append((tx, ty))

    # Scanning

    def trace(self, c: int, w: IndexWord, fill: bool) -> int:
        for a in w:
            t = self.target(c, a)
            if t == UNDEFINED:
                if not fill:
                    return UNDEFINED
                t = self.define(c, a)
            c = t
        return c

    def scan_and_fill(self, c: int, u: IndexWord, v: IndexWord):
        """Make c.u = c.v, defining classes as needed; the last letter of u is deduced"""
        p = self.trace(c, u[:-1], fill=True)
        q = self.trace(c, v, fill=True)
        p = self.find(p)
        last = u[-1]
        t = self.target(p, last)
        if t == UNDEFINED:
            self.table[p][last] = q
        elif t != q:
            self.identify(t, q)

    def _scan(self, c: int, u: IndexWord, v: IndexWord) -> bool:
        """Scan without defining; deduce one missing entry or identify. True if anything changed"""
        p = self.trace(c, u[:-1], fill=False)
        if p == UNDEFINED:
            return False
        q = self.trace(c, v, fill=False)
        if q == UNDEFINED:
            if len(v) == 0:
                return False
            r = self.trace(c, v[:-1], fill=False)
            t = self.target(p, u[-1])
            if r == UNDEFINED or t == UNDEFINED or self.target(r, v[-1]) != UNDEFINED:
                return False
            self.table[r][v[-1]] = t
            return True
        t = self.target(p, u[-1])
        if t == UNDEFINED:
            self.table[p][u[-1]] = q
            return True
        if t != q:
            self.identify(t, q)
            return True
        return False

    def lookahead(self):
        """Scan every relation at every live class without defining new classes"""
        before = self.live
        changed = True
        while changed:
            changed = False
            for c in range(len(self.table)):
                if not self.is_live(c):
                    continue
                for u, v in self.relations:
                    if not self.is_live(c):
                        break
                    if self._scan(c, u, v):
                        changed = True
        logger.debug(f"todd_coxeter lookahead: {before} -> {self.live} live classes")

    def _check_cap(self):
        if self.live < self.next_lookahead:
            return
        if self.use_lookahead:
            self.lookahead()
        if self.live > self.cap:
            logger.error(f"todd_coxeter stopped at {self.live} live classes (cap {self.cap})")
            raise CapExceeded("todd_coxeter", self.cap, self.live)
        self.next_lookahead = max(self.next_lookahead, self.live + (self.cap - self.live) // 2)

    def _consistent(self) -> bool:
        """Every relation holds at every live class; identify where it does not"""
        consistent = True
        for c in range(len(self.table)):
            for u, v in self.relations:
                if not self.is_live(c):
                    break
                p = self.trace(c, u, fill=False)
                q = self.trace(c, v, fill=False)
                if p != q:
                    self.identify(p, q)
                    consistent = False
        return consistent

    def enumerate(self) -> "CongruenceTable":
        """Run HLT to completion"""
        if self.complete:
            return self
        c = 0
        while c < len(self.table):
            if self.is_live(c):
                self._check_cap()
                for u, v in self.relations:
                    if not self.is_live(c):
                        break
                    self.scan_and_fill(c, u, v)
                if self.is_live(c):
                    for a in range(self.degree):
                        if self.target(c, a) == UNDEFINED:
                            self.define(c, a)
            c += 1
            if c % 5000 == 0:
                logger.debug(f"todd_coxeter: class {c} of {len(self.table)}, {self.live} live")
        while not self._consistent():
            logger.debug(f"todd_coxeter: consistency pass, {self.live} live classes")
        self.complete = True
        return self

    @property
    def size(self) -> int:
        return self.live

    def standardize(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Renumber live classes breadth-first from class 0 in letter order.

        Returns (right table, prefix, last) with shortlex-minimal representatives.
        """
        if not self.complete:
            self.enumerate()
        order = {self.find(0): 0}
        queue = deque([self.find(0)])
        prefix = [NO_PREFIX]
        last = [NO_PREFIX]
        while queue:
            c = queue.popleft()
            for a in range(self.degree):
                t = self.target(c, a)
                if t not in order:
                    order[t] = len(order)
                    prefix.append(order[c])
                    last.append(a)
                    queue.append(t)
        right = np.empty((len(order), self.degree), dtype=np.int32)
        for c, k in order.items():
            right[k] = [order[self.target(c, a)] for a in range(self.degree)]
        return right, np.array(prefix, dtype=np.int32), np.array(last, dtype=np.int32)

    def to_monoid(self) -> EnumeratedMonoid:
        """The presented monoid as an EnumeratedMonoid over class numbers"""
        right, prefix, last = self.standardize()
        elements = list(range(len(right)))
        left = left_cayley_from_right(right, prefix, last)
        return EnumeratedMonoid(
            tuple(self.presentation.alphabet),
            elements,
            prefix,
            last,
            right,
            left,
            {i: i for i in elements},
        )


@monitor_performance("todd_coxeter")
def todd_coxeter(
    presentation: Presentation, cap: Optional[int] = None, lookahead: Optional[bool] = None
) -> CongruenceTable:
    """
    Enumerate the monoid presented by ``presentation``.

    Raises:
        CapExceeded: more than ``cap`` live classes remain after lookahead
    """
    if not presentation.alphabet:
        raise ValueError("Presentation has no letters")
    table = CongruenceTable(presentation, cap=cap, lookahead=lookahead).enumerate()
    logger.info(
        f"todd_coxeter: {presentation.name} at degree {presentation.degree}, "
        f"{table.size} classes ({len(table.table)} defined)"
    )
    return table


def presentation_size(presentation: Presentation, cap: Optional[int] = None) -> int:
    return todd_coxeter(presentation, cap=cap).size


def same_class(table: CongruenceTable, u: Sequence, v: Sequence) -> bool:
    """Whether two words over the presentation's alphabet are congruent"""
    position = table.presentation.letter_index()
    return table.find(table.trace(0, tuple(position[x] for x in u), fill=False)) == table.find(
        table.trace(0, tuple(position[x] for x in v), fill=False)
    )
