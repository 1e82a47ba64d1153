"""Grids whose blank tiles form a top-left justified partition, and their
shape-preserving bijection with decreasing tableaux.

Blank and crossing tiles balance within every diagonal, so pairing the k-th
blank from the northwest with the k-th crossing from the southeast is total;
recording each row difference fills the blank's cell with a positive letter.
Composing with the antidiagonal flip (which exchanges blanks and crossings)
identifies these grids with the pipe dreams of a vexillary partner
permutation, which is how the inverse map is computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bpd import Bpd, rothe_bpd
from .errors import InvalidEncodingError, NotHeckeError
from .partitions import Partition, staircase
from .perm import Permutation, from_code, is_reduced_word
from .vex import FlaggedTableau, flag_of, gamma, mu_of

__all__ = [
    "DecreasingTableau",
    "column_reading_word",
    "is_rwt",
    "is_hecke",
    "shape_of",
    "antidiagonal_involution",
    "v_of",
    "omega",
    "omega_inv",
    "enumerate_dt",
]

Cell = tuple[int, int]


@dataclass(frozen=True)
class DecreasingTableau:
    """A filling of a partition shape strictly decreasing along rows and
    columns."""

    shape: Partition
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        lam = self.shape
        if len(self.entries) != lam.rows:
            raise InvalidEncodingError("rows do not match the shape")
        for i, row in enumerate(self.entries, start=1):
            if len(row) != lam.part(i):
                raise InvalidEncodingError(f"row {i} has the wrong length")
            for j, v in enumerate(row, start=1):
                if v < 1:
                    raise InvalidEncodingError("entries must be positive")
                if j > 1 and row[j - 2] <= v:
                    raise InvalidEncodingError("rows must strictly decrease")
                if i > 1 and self.entries[i - 2][j - 1] <= v:
                    raise InvalidEncodingError("columns must strictly decrease")

    def value(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def max_entry(self) -> int:
        return max((v for row in self.entries for v in row), default=0)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "DecreasingTableau":
        rows = tuple(tuple(int(v) for v in row) for row in data)
        return cls(Partition.of(len(r) for r in rows), rows)


def column_reading_word(t: DecreasingTableau) -> tuple[int, ...]:
    """Entries read along columns bottom to top, columns left to right."""
    out = []
    width = t.shape.part(1)
    for j in range(1, width + 1):
        h = t.shape.col_height(j)
        out.extend(t.value(i, j) for i in range(h, 0, -1))
    return tuple(out)


def is_rwt(t: DecreasingTableau) -> bool:
    """True when the column reading word is reduced."""
    word = column_reading_word(t)
    n = max(word, default=0) + 1
    return is_reduced_word(word, n)


def is_hecke(p: Bpd) -> bool:
    """True when the blank tiles fill a top-left justified partition."""
    by_row: dict[int, set[int]] = {}
    for i, j in p.blanks():
        by_row.setdefault(i, set()).add(j)
    widths = [len(by_row.get(i, ())) for i in range(1, p.n + 1)]
    if any(a < b for a, b in zip(widths, widths[1:])):
        return False
    return all(
        cols == set(range(1, len(cols) + 1)) for cols in by_row.values()
    )


def shape_of(p: Bpd) -> Partition:
    if not is_hecke(p):
        raise NotHeckeError("blank tiles do not form a partition")
    widths: dict[int, int] = {}
    for i, j in p.blanks():
        widths[i] = max(widths.get(i, 0), j)
    return Partition.of(widths.get(i, 0) for i in range(1, p.n + 1))


def antidiagonal_involution(p: Bpd) -> Bpd:
    """Reflect across the antidiagonal.  Both elbow kinds are preserved (at
    reflected positions) while blanks and crossings trade places."""
    n = p.n
    flip = lambda c: (n + 1 - c[1], n + 1 - c[0])
    return Bpd.from_elbows(
        n, map(flip, p.elbows_se()), map(flip, p.elbows_nw())
    )


def v_of(shape: Partition, n: int) -> Permutation:
    """The vexillary partner: the permutation whose hook grid has crossings
    exactly at the antidiagonal reflection of the shape.

    Constructed by reflecting the hook grid of the dominant permutation with
    that diagram.
    """
    if not staircase(n).contains(shape):
        raise InvalidEncodingError(f"{shape} does not fit in the staircase of S_{n}")
    dominant = from_code(tuple(shape.parts) + (0,) * (n - shape.rows))
    reflected = antidiagonal_involution(rothe_bpd(dominant))
    return reflected.demazure()


def _diagonal_pairing(p: Bpd) -> dict[Cell, Cell]:
    """Pair the k-th blank from the northwest with the k-th crossing from
    the southeast within every diagonal."""
    blanks: dict[int, list[int]] = {}
    crossings: dict[int, list[int]] = {}
    for i, j in p.blanks():
        blanks.setdefault(j - i, []).append(i)
    for i, j in p.crossings():
        crossings.setdefault(j - i, []).append(i)
    pairing = {}
    for d, rows in blanks.items():
        partners = sorted(crossings.get(d, ()), reverse=True)
        if len(partners) != len(rows):
            raise InvalidEncodingError(
                f"diagonal {d} has unbalanced blanks and crossings"
            )
        for i, i2 in zip(sorted(rows), partners):
            pairing[(i, i + d)] = (i2, i2 + d)
    return pairing


def omega(p: Bpd) -> DecreasingTableau:
    """Fill each blank with the row distance to its paired crossing."""
    lam = shape_of(p)
    pairing = _diagonal_pairing(p)
    rows = []
    for i in range(1, lam.rows + 1):
        rows.append(
            tuple(
                pairing[(i, j)][0] - i for j in range(1, lam.part(i) + 1)
            )
        )
    return DecreasingTableau(lam, tuple(rows))


def omega_inv(t: DecreasingTableau, n: int) -> Bpd:
    """Invert via the explicit chain: the tableau determines a flagged
    tableau for the vexillary partner, which maps to its grid, and the
    antidiagonal flip carries that grid back."""
    lam = t.shape
    if t.max_entry() > n - 1:
        raise InvalidEncodingError(f"entries must lie in [{n - 1}]")
    v = v_of(lam, n)
    if mu_of(v) != lam:
        raise InvalidEncodingError("partner shape mismatch")
    flagged = FlaggedTableau(
        lam,
        tuple(
            tuple(n - j - t.value(i, j) + 1 for j in range(1, lam.part(i) + 1))
            for i in range(1, lam.rows + 1)
        ),
        flag_of(v),
    )
    return antidiagonal_involution(gamma(flagged, v))


def enumerate_dt(shape: Partition, max_entry: int) -> list[DecreasingTableau]:
    """All decreasing tableaux of the shape with entries in [max_entry]."""
    cells = list(shape.cells())
    out: list[DecreasingTableau] = []
    values: dict[Cell, int] = {}

    def fill(idx: int) -> None:
        if idx == len(cells):
            out.append(
                DecreasingTableau(
                    shape,
                    tuple(
                        tuple(values[(i, j)] for j in range(1, shape.part(i) + 1))
                        for i in range(1, shape.rows + 1)
                    ),
                )
            )
            return
        i, j = cells[idx]
        hi = max_entry
        if j > 1:
            hi = min(hi, values[(i, j - 1)] - 1)
        if i > 1:
            hi = min(hi, values[(i - 1, j)] - 1)
        for v in range(hi, 0, -1):
            values[(i, j)] = v
            fill(idx + 1)
        values.pop((i, j), None)

    fill(0)
    return out
