"""Partitions of fixed length, dominance order, staircase shift, enumeration.

A partition here always has an explicit length ``n``: trailing zeros are
significant, since the lifting operators change the number of variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .poly import PolyError


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers, fixed length."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise PolyError("partition must have length >= 1")
        if any(not isinstance(p, int) or p < 0 for p in self.parts):
            raise PolyError(f"parts must be nonnegative integers: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise PolyError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def n(self) -> int:
        return len(self.parts)

    def weight(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-based part, with the convention that part(n+1) is 0."""
        if not 1 <= i <= self.n + 1:
            raise PolyError(f"part index {i} out of range")
        return self.parts[i - 1] if i <= self.n else 0

    def diff(self, i: int, j: int) -> int:
        """The difference part(i) - part(j), 1-based indices."""
        return self.part(i) - self.part(j)

    def shifted(self) -> "ShiftedPartition":
        """Add the staircase (n-1, n-2, ..., 0)."""
        n = self.n
        return ShiftedPartition(tuple(p + n - 1 - i for i, p in enumerate(self.parts)))

    def drop_last(self) -> "Partition":
        return Partition(self.parts[:-1])

    def with_trailing_zero(self) -> "Partition":
        return Partition(self.parts + (0,))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


@dataclass(frozen=True)
class ShiftedPartition:
    """Strictly decreasing exponent vector mu = lambda + staircase."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(a <= b for a, b in zip(self.parts, self.parts[1:])):
            raise PolyError(f"shifted parts must be strictly decreasing: {self.parts}")
        if any(p < 0 for p in self.parts):
            raise PolyError(f"shifted parts must be nonnegative: {self.parts}")

    @property
    def n(self) -> int:
        return len(self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)


def weight(lam: Partition) -> int:
    return lam.weight()


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff the weights agree and every prefix sum of mu is <= lam's."""
    if mu.n != lam.n:
        raise PolyError("dominance comparison needs equal lengths")
    if mu.weight() != lam.weight():
        return False
    acc_m = acc_l = 0
    for a, b in zip(mu.parts, lam.parts):
        acc_m += a
        acc_l += b
        if acc_m > acc_l:
            return False
    return True


def staircase(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def partitions_of_weight(w: int, n: int) -> Iterator[Partition]:
    """Partitions of weight exactly w and length n, descending lex order."""

    def rec(remaining: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            if remaining <= cap:
                yield (remaining,)
            return
        lo = -(-remaining // slots)  # ceil: keep weak decrease feasible
        for p in range(min(cap, remaining), lo - 1, -1):
            for rest in rec(remaining - p, slots - 1, p):
                yield (p,) + rest

    for parts in rec(w, n, w):
        yield Partition(parts)


def enumerate_partitions(max_weight: int, n: int) -> list[Partition]:
    """All partitions of length n with weight <= max_weight.

    Deterministic order: by weight, then descending lex within a weight.
    """
    if max_weight < 0 or n < 1:
        raise PolyError("need max_weight >= 0 and n >= 1")
    out: list[Partition] = []
    for w in range(max_weight + 1):
        out.extend(partitions_of_weight(w, n))
    return out
