"""The p-runner bar abacus.

Part ``a*p + j`` of a bar partition is a bead at position ``a`` on runner
``j``.  A bar partition is a p-bar-core exactly when runner 0 is empty, the
beads on every runner are pushed down to positions ``0..k-1``, and runners
``j`` and ``p - j`` are never both occupied.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .barcomb import BarPartition, check_odd_prime
from .errors import InvalidAbacus

__all__ = [
    "BarAbacus",
    "abacus_from_bar_partition",
    "validate_bar_core",
    "bar_partition_from_abacus",
    "render_abacus",
]

BEAD = "●"
EMPTY = "·"


@dataclass(frozen=True)
class BarAbacus:
    p: int
    runners: tuple  # runners[j] is the sorted tuple of bead positions on runner j

    def __post_init__(self):
        if len(self.runners) != self.p:
            raise InvalidAbacus(f"expected {self.p} runners, got {len(self.runners)}")
        runners = tuple(tuple(sorted(r)) for r in self.runners)
        for r in runners:
            if any(x < 0 for x in r) or len(set(r)) != len(r):
                raise InvalidAbacus(f"bad bead positions {r}")
        object.__setattr__(self, "runners", runners)

    @classmethod
    def from_counts(cls, p: int, counts) -> "BarAbacus":
        """Pushed-down abacus with ``counts[j]`` beads on runner ``j``."""
        if len(counts) != p or any(c < 0 for c in counts):
            raise InvalidAbacus(f"bad bead counts {counts}")
        return cls(p, tuple(tuple(range(c)) for c in counts))

    @property
    def bead_counts(self) -> tuple:
        return tuple(len(r) for r in self.runners)

    @property
    def total_beads(self) -> int:
        return sum(self.bead_counts)

    def to_dict(self) -> dict:
        return {"p": self.p, "runners": [list(r) for r in self.runners]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "BarAbacus":
        return cls(int(data["p"]), tuple(tuple(r) for r in data["runners"]))


def abacus_from_bar_partition(lam: BarPartition, p: int) -> BarAbacus:
    check_odd_prime(p)
    runners = [[] for _ in range(p)]
    for part in lam.parts:
        level, runner = divmod(part, p)
        runners[runner].append(level)
    return BarAbacus(p, tuple(tuple(r) for r in runners))


def validate_bar_core(ab: BarAbacus) -> bool:
    if ab.runners[0]:
        return False
    for j, r in enumerate(ab.runners):
        if r != tuple(range(len(r))):
            return False
        if j and r and ab.runners[ab.p - j]:
            return False
    return True


def bar_partition_from_abacus(ab: BarAbacus) -> BarPartition:
    if not validate_bar_core(ab):
        raise InvalidAbacus(f"not a bar-core arrangement: {ab.to_dict()}")
    parts = sorted((a * ab.p + j for j, r in enumerate(ab.runners) for a in r), reverse=True)
    return BarPartition(tuple(parts))


def render_abacus(ab: BarAbacus) -> str:
    """Runners as columns 0..p-1, positions increasing upward."""
    height = max((r[-1] + 1 for r in ab.runners if r), default=1)
    width = len(str(ab.p - 1))
    label_w = len(str(height - 1))
    lines = []
    for pos in range(height - 1, -1, -1):
        cells = [(BEAD if pos in r else EMPTY).rjust(width) for r in ab.runners]
        lines.append(f"{str(pos).rjust(label_w)} | " + " ".join(cells))
    lines.append(" " * label_w + " +-" + "-" * ((width + 1) * ab.p - 1))
    lines.append(" " * label_w + "   " + " ".join(str(j).rjust(width) for j in range(ab.p)))
    return "\n".join(lines)
