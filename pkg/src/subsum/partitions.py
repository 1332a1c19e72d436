"""Streaming enumeration of integer partitions, plain and restricted.

Partitions are tuples of positive parts in nonincreasing order; the empty
tuple is the unique partition of 0.  Four part-sets are supported: all
positive integers, the odd numbers, the powers of 2, and the powers of 3.
Enumeration never materializes the full list, so callers can fold over
partition streams whose length grows superpolynomially in n.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from typing import Iterator, Mapping

Partition = tuple[int, ...]


class PartitionClass(Enum):
    """Which parts a partition may use."""

    ORDINARY = "ordinary"
    ODD = "odd"
    BINARY = "binary"
    TERNARY = "ternary"

    def allows(self, part: int) -> bool:
        if part < 1:
            return False
        if self is PartitionClass.ORDINARY:
            return True
        if self is PartitionClass.ODD:
            return part % 2 == 1
        base = 2 if self is PartitionClass.BINARY else 3
        while part % base == 0:
            part //= base
        return part == 1


def allowed_parts(pclass: PartitionClass, n: int) -> list[int]:
    """All parts of `pclass` that are <= n, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if pclass is PartitionClass.ORDINARY:
        return list(range(1, n + 1))
    if pclass is PartitionClass.ODD:
        return list(range(1, n + 1, 2))
    base = 2 if pclass is PartitionClass.BINARY else 3
    parts = []
    p = 1
    while p <= n:
        parts.append(p)
        p *= base
    return parts


def enumerate_partitions(n: int, pclass: PartitionClass) -> Iterator[Partition]:
    """Yield every partition of n with parts in `pclass`, reverse-lexicographically.

    Largest first part comes first, so for n=4 the ordinary stream is
    (4), (3,1), (2,2), (2,1,1), (1,1,1,1).  n=0 yields exactly the empty
    partition.  Restricted classes recurse over their own allowed-part
    list rather than filtering the ordinary stream.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield ()
        return
    parts_desc = allowed_parts(pclass, n)[::-1]
    yield from _descend(n, parts_desc, 0)


def _descend(remaining: int, parts_desc: list[int], idx: int) -> Iterator[Partition]:
    if remaining == 0:
        yield ()
        return
    for k in range(idx, len(parts_desc)):
        p = parts_desc[k]
        if p > remaining:
            continue
        for rest in _descend(remaining - p, parts_desc, k):
            yield (p,) + rest


def multiplicities(p: Partition) -> dict[int, int]:
    """Map each part to its multiplicity; no zero entries."""
    return dict(Counter(p))


def from_multiplicities(m: Mapping[int, int]) -> Partition:
    """Inverse of `multiplicities`."""
    parts: list[int] = []
    for part in sorted(m, reverse=True):
        parts.extend([part] * m[part])
    return tuple(parts)


def count(n: int, pclass: PartitionClass) -> int:
    """Number of partitions `enumerate_partitions(n, pclass)` yields.

    Computed by the standard coin-counting recurrence over the allowed
    parts, not by enumeration, so it is cheap enough for progress
    reporting at any desk-scale n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    table = [1] + [0] * n
    for part in allowed_parts(pclass, n):
        for r in range(part, n + 1):
            table[r] += table[r - part]
    return table[n]
