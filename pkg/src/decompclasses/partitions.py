"""Partition combinatorics for nilpotent orbits in gl_n.

A partition of ``n`` is the Jordan type of a nilpotent ``n x n`` matrix.
The dominance order is the closure order on these orbits, and induction
from a block-diagonal Levi adds the padded partitions componentwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary positive parts into a partition, dropping zeros."""
        return cls(tuple(sorted((x for x in parts if x), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)


def as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(tuple(x))


def transpose(lam) -> Partition:
    lam = as_partition(lam)
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for x in lam.parts if x >= j) for j in range(1, lam.parts[0] + 1)))


def dominance_leq(lam, mu) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"cannot compare partitions of {lam.size} and {mu.size}")
    a = b = 0
    for x, y in zip_longest(lam.parts, mu.parts, fillvalue=0):
        a += x
        b += y
        if a > b:
            return False
    return True


def centralizer_dim(lam) -> int:
    """Dimension of the centralizer in gl_n of a nilpotent of Jordan type ``lam``."""
    return sum(c * c for c in transpose(lam).parts)


def orbit_dim(lam) -> int:
    lam = as_partition(lam)
    return lam.size**2 - centralizer_dim(lam)


def induce(parts_list: Sequence) -> Partition:
    """Partition of the orbit induced from a block-diagonal Levi."""
    if not parts_list:
        raise ValueError("induce needs at least one partition")
    rows = [as_partition(p).parts for p in parts_list]
    return Partition(tuple(sum(col) for col in zip_longest(*rows, fillvalue=0)))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out += [(first,) + rest for rest in _partitions(n - first, first)]
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions(n, n)]


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest
