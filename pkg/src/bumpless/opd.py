"""Ordinary pipe dreams on the staircase, as an independent formula oracle.

An ordinary pipe dream of size n is a subset of the staircase diagram
(n-1, n-2, ..., 1) recording crossing positions; every other staircase cell
carries the osculating double-elbow tile.  Crossings are read along rows
right to left, top row first, the crossing at (i, j) contributing the letter
i + j - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidEncodingError, SizeLimitError
from .partitions import staircase
from .perm import Permutation, demazure_product
from .poly import Polynomial, divide_beta_power, oplus

__all__ = [
    "OrdinaryPipeDream",
    "opd_reading_word",
    "opd_demazure",
    "enumerate_opd",
    "grothendieck_opd",
    "DEFAULT_OPD_LIMIT",
]

DEFAULT_OPD_LIMIT = 5

Cell = tuple[int, int]


@dataclass(frozen=True)
class OrdinaryPipeDream:
    """Crossing positions inside the staircase of an n x n grid."""

    n: int
    crossings: frozenset[Cell]

    def __post_init__(self) -> None:
        cells = set(staircase(self.n).cells())
        if not self.crossings <= cells:
            raise InvalidEncodingError("crossings must lie in the staircase")

    @classmethod
    def of(cls, n: int, crossings: Iterable[Cell]) -> "OrdinaryPipeDream":
        return cls(n, frozenset((int(i), int(j)) for i, j in crossings))

    def to_json(self) -> dict:
        return {"n": self.n, "crossings": [list(c) for c in sorted(self.crossings)]}

    @classmethod
    def from_json(cls, data: dict) -> "OrdinaryPipeDream":
        return cls.of(int(data["n"]), data.get("crossings", ()))


def opd_reading_word(s: OrdinaryPipeDream) -> tuple[int, ...]:
    """Rows top to bottom, each row right to left; letter i + j - 1."""
    out = []
    for i in range(1, s.n):
        for j in range(s.n - i, 0, -1):
            if (i, j) in s.crossings:
                out.append(i + j - 1)
    return tuple(out)


def opd_demazure(s: OrdinaryPipeDream) -> Permutation:
    return demazure_product(opd_reading_word(s), s.n)


def enumerate_opd(
    w: Permutation, limit: int | None = None
) -> list[OrdinaryPipeDream]:
    """All crossing subsets with 0-Hecke product w.

    Depth-first over cells in reading order; appending letters never shortens
    a 0-Hecke product, so branches whose running product already exceeds the
    target length are cut.
    """
    cap = DEFAULT_OPD_LIMIT if limit is None else limit
    n = w.n
    if n > cap:
        raise SizeLimitError(f"refusing staircase search in S_{n} (limit {cap})")
    cells = [(i, j) for i in range(1, n) for j in range(n - i, 0, -1)]
    target_len = w.length()
    out: list[OrdinaryPipeDream] = []
    chosen: list[Cell] = []

    def search(idx: int, current: tuple[int, ...], length: int) -> None:
        if length > target_len:
            return
        if idx == len(cells):
            if current == w.oneline:
                out.append(OrdinaryPipeDream.of(n, chosen))
            return
        i, j = cells[idx]
        search(idx + 1, current, length)
        a = i + j - 1
        if current[a - 1] < current[a]:
            swapped = list(current)
            swapped[a - 1], swapped[a] = swapped[a], swapped[a - 1]
            chosen.append((i, j))
            search(idx + 1, tuple(swapped), length + 1)
            chosen.pop()
        else:
            chosen.append((i, j))
            search(idx + 1, current, length)
            chosen.pop()

    search(0, tuple(range(1, n + 1)), 0)
    return out


def grothendieck_opd(w: Permutation, limit: int | None = None) -> Polynomial:
    """Sum over crossing subsets with product w of the product of
    beta * (x_i (+) y_j), normalised by beta^{-length}."""
    total = Polynomial.zero()
    for s in enumerate_opd(w, limit):
        term = Polynomial.one()
        for i, j in sorted(s.crossings):
            term = term * oplus(i, j)
        total = total + term * Polynomial.monomial(1, beta_exp=len(s.crossings))
    return divide_beta_power(total, w.length())
