"""Ordinary and bar (strict) partitions: enumeration, hooks, bar lengths, cores."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InvalidPrime

__all__ = [
    "Partition",
    "BarPartition",
    "BarLengthTable",
    "SignedBarClass",
    "check_odd_prime",
    "is_prime",
    "enumerate_partitions",
    "hook_lengths",
    "is_t_core",
    "enumerate_bar_partitions",
    "bar_lengths",
    "bar_sign",
    "is_p_bar_core",
    "enumerate_p_bar_cores",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_odd_prime(p: int) -> int:
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise InvalidPrime(f"{p!r} is not an odd prime")
    return p


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(x < 1 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True, order=True)
class BarPartition:
    """A partition with distinct parts, stored in decreasing order."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(x < 1 for x in parts) or any(a <= b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a bar partition: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class BarLengthTable:
    rows: tuple  # one decreasing tuple per row of the shifted diagram

    @property
    def multiset(self) -> Counter:
        return Counter(h for row in self.rows for h in row)

    def flat(self) -> list:
        return [h for row in self.rows for h in row]

    def to_dict(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}


class SignedBarClass(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"


def _partitions(n: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def hook_lengths(lam: Partition) -> list:
    parts = lam.parts
    conj = [sum(1 for a in parts if a > j) for j in range(parts[0])] if parts else []
    return [[a - j + conj[j] - i - 1 for j in range(a)] for i, a in enumerate(parts)]


def is_t_core(lam: Partition, t: int) -> bool:
    if t < 2:
        raise ValueError("t must be at least 2")
    return all(h != t for row in hook_lengths(lam) for h in row)


def _strict(n: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        # the remaining parts are distinct and below first, so at most first*(first-1)/2
        if n - first > first * (first - 1) // 2:
            break
        for rest in _strict(n - first, first - 1):
            yield (first,) + rest


@lru_cache(maxsize=128)
def _bar_partitions_cached(n: int) -> tuple:
    return tuple(BarPartition(p) for p in _strict(n, n))


def enumerate_bar_partitions(n: int) -> list:
    """All strict partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_bar_partitions_cached(n))


def bar_lengths(lam: BarPartition) -> BarLengthTable:
    """Bar lengths of the shifted diagram, row by row.

    Row ``i`` holds ``{1..a_i}`` together with ``a_i + a_j`` for every later
    part, minus one copy of each ``a_i - a_j``.
    """
    parts = lam.parts
    rows = []
    for i, a in enumerate(parts):
        row = Counter(range(1, a + 1))
        for b in parts[i + 1 :]:
            row[a + b] += 1
        for b in parts[i + 1 :]:
            row[a - b] -= 1
        if any(c < 0 for c in row.values()):
            raise AssertionError(f"bar length removal underflow for {parts}")
        rows.append(tuple(sorted(row.elements(), reverse=True)))
    return BarLengthTable(tuple(rows))


def bar_sign(lam: BarPartition) -> SignedBarClass:
    return SignedBarClass.POSITIVE if (lam.n - lam.length) % 2 == 0 else SignedBarClass.NEGATIVE


def is_p_bar_core(lam: BarPartition, p: int) -> bool:
    check_odd_prime(p)
    # multiplicity of p in row i, read off the row formula without building it
    parts = lam.parts
    for i, a in enumerate(parts):
        later = parts[i + 1 :]
        mult = (p <= a) + sum(a + b == p for b in later) - sum(a - b == p for b in later)
        if mult > 0:
            return False
    return True


def enumerate_p_bar_cores(n: int, p: int) -> list:
    check_odd_prime(p)
    return [lam for lam in enumerate_bar_partitions(n) if is_p_bar_core(lam, p)]
