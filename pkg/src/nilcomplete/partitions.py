"""Integer partitions stored as multisets, with the multiset algebra
(sum, saturating difference, max) and the dominance order.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from typing import Iterable, Iterator

from .errors import EmptyMultiset, InvalidPart, InvalidShape, SumMismatch


class Partition:
    """Immutable multiset of positive integers.

    Stored as a tuple of ``(value, multiplicity)`` pairs sorted by decreasing
    value; iteration yields the parts in non-increasing order.  The empty
    multiset is allowed (it is the partition of 0).
    """

    __slots__ = ("_items", "_len", "_total")

    def __init__(self, parts: Iterable[int] = ()):
        counts = Counter()
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise InvalidPart(f"part {p!r} is not an integer")
            if p <= 0:
                raise InvalidPart(f"part {p} is not positive")
            counts[p] += 1
        self._set_items(tuple(sorted(counts.items(), reverse=True)))

    def _set_items(self, items):
        self._items = items
        self._len = sum(m for _, m in items)
        self._total = sum(v * m for v, m in items)

    @classmethod
    def _from_items(cls, items) -> "Partition":
        obj = cls.__new__(cls)
        obj._set_items(tuple(items))
        return obj

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "Partition":
        for v in counts:
            if v <= 0:
                raise InvalidPart(f"part {v} is not positive")
        return cls._from_items(sorted(((v, m) for v, m in counts.items() if m > 0), reverse=True))

    # -- multiset accessors -------------------------------------------------

    def mult(self, x: int) -> int:
        for v, m in self._items:
            if v == x:
                return m
            if v < x:
                break
        return 0

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self._items)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(v for v, m in self._items for _ in range(m))

    @property
    def total(self) -> int:
        """Sum of the parts."""
        return self._total

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._items

    def __len__(self) -> int:
        # number of parts, written |lambda| in the literature
        return self._len

    def __iter__(self) -> Iterator[int]:
        for v, m in self._items:
            for _ in range(m):
                yield v

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)

    def __add__(self, other: "Partition") -> "Partition":
        return msum(self, other)

    def __sub__(self, other: "Partition") -> "Partition":
        return mdiff(self, other)

    def issubset(self, other: "Partition") -> bool:
        return all(other.mult(v) >= m for v, m in self._items)

    def max(self) -> int:
        return mmax(self)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self._items:
            return Partition()
        parts = self.parts
        return Partition(sum(1 for p in parts if p >= k) for k in range(1, parts[0] + 1))


Multiset = Partition


def normalize(raw: Iterable[int]) -> Partition:
    return Partition(raw)


def msum(a: Partition, b: Partition) -> Partition:
    counts = dict(a._items)
    for v, m in b._items:
        counts[v] = counts.get(v, 0) + m
    return Partition.from_counts(counts)


def mdiff(a: Partition, b: Partition) -> Partition:
    """Saturating difference: multiplicities are clipped at zero."""
    if not b._items:
        return a
    bc = dict(b._items)
    return Partition._from_items((v, m - bc.get(v, 0)) for v, m in a._items if m > bc.get(v, 0))


def mmax(a: Partition) -> int:
    if not a._items:
        raise EmptyMultiset("max of an empty multiset")
    return a._items[0][0]


def remove_max(a: Partition) -> Partition:
    """``a - {max(a)}``; one copy of the largest element is removed."""
    if not a._items:
        raise EmptyMultiset("max of an empty multiset")
    v, m = a._items[0]
    rest = a._items[1:]
    if m > 1:
        return Partition._from_items(((v, m - 1),) + rest)
    return Partition._from_items(rest)


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff ``lam`` dominates (majorizes) ``mu``.

    Both must be partitions of the same integer; ``lam`` dominates ``mu`` when
    it has no more parts and each prefix sum of ``lam`` is at least the
    corresponding prefix sum of ``mu``.
    """
    if lam.total != mu.total:
        raise SumMismatch(f"{lam.total} != {mu.total}")
    if len(lam) > len(mu):
        return False
    a = b = 0
    for x, y in zip(lam.parts, mu.parts):
        a += x
        b += y
        if a < b:
            return False
    return True


def check_shape(n: int, r: int) -> None:
    if not (0 < r < n):
        raise InvalidShape(f"need 0 < r < n, got n={n}, r={r}")


def nr_type(n: int, r: int) -> Partition:
    """Jordan type of the matrix with ones on the r-th subdiagonal of gl_n."""
    check_shape(n, r)
    q, rp = divmod(n, r)
    counts = {q: r - rp}
    if rp:
        counts[q + 1] = rp
    return Partition.from_counts(counts)


def parse_partition(text: str) -> Partition:
    """Parse ``"5,4,1"`` (any order, whitespace tolerated)."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        raw = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise InvalidPart(f"cannot parse partition {text!r}") from exc
    return Partition(raw)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, in descending
    lexicographic order, optionally bounded in length and largest part."""
    if max_parts is None:
        max_parts = n
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        # the remaining n - first must fit in max_parts - 1 parts of size <= first
        if first * max_parts < n:
            break
        for rest in partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def _boltzmann_parameter(n: int, k: int) -> float:
    """x in (0, 1) at which a Boltzmann partition with parts <= k has
    expected size n."""
    def size(x):
        return sum(j * x ** j / (1 - x ** j) for j in range(1, k + 1))

    lo, hi = 0.0, 1.0
    for _ in range(60):
        mid = (lo + hi) / 2
        if size(mid) < n:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def random_partition(n: int, max_parts: int | None = None,
                     rng: random.Random | None = None) -> Partition:
    """A uniformly random partition of ``n`` with at most ``max_parts`` parts.

    Samples the conjugate, a partition with parts <= max_parts, by Boltzmann
    sampling: multiplicities of 2..k are independent geometrics, the
    multiplicity of 1 is whatever remains, and the draw is accepted with
    probability ``x**rest``.  The result is exactly uniform.
    """
    if n < 1:
        raise InvalidPart(f"cannot sample a partition of {n}")
    k = n if max_parts is None else min(max_parts, n)
    if k < 1:
        raise InvalidShape(f"no partition of {n} has at most {max_parts} parts")
    rng = rng or random.Random()
    x = _boltzmann_parameter(n, k)
    logx = math.log(x)
    while True:
        counts: dict[int, int] = {}
        total = 0
        for j in range(2, k + 1):
            # geometric with success probability 1 - x**j
            z = int(math.log(1.0 - rng.random()) / (j * logx))
            if z:
                counts[j] = z
                total += j * z
                if total > n:
                    break
        rest = n - total
        if rest < 0 or rng.random() >= x ** rest:
            continue
        if rest:
            counts[1] = rest
        return Partition.from_counts(counts).conjugate()
