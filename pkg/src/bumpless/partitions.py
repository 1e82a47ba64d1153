"""Integer partitions and their Young diagrams (English convention)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = ["Partition", "staircase"]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts (trailing zeros trimmed).

    >>> Partition.of([3, 3, 2, 0]).parts
    (3, 3, 2)
    >>> Partition.of([3, 3, 2]).size()
    8
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.parts
        if any(a < b for a, b in zip(p, p[1:])) or (p and p[-1] <= 0):
            raise ValueError(f"not a partition: {p}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        p = list(parts)
        while p and p[-1] == 0:
            p.pop()
        return cls(tuple(p))

    @property
    def rows(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """Row length, 0 beyond the last row (1-indexed)."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col_height(self, j: int) -> int:
        return sum(1 for p in self.parts if p >= j)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def __contains__(self, cell: tuple[int, int]) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams."""
        return all(self.part(i) >= q for i, q in enumerate(other.parts, 1))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)


def staircase(n: int) -> Partition:
    """(n-1, n-2, ..., 1)."""
    return Partition.of(range(n - 1, 0, -1))
