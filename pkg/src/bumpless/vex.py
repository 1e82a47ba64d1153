"""Vexillary (2143-avoiding) permutations: flagged and set-valued tableaux,
their bijections with pipe-dream grids, local moves, and the resulting
tableau formula for Grothendieck polynomials.

For vexillary v the crossing tiles are identical across all of Pipes(v), so
a grid is pinned down by its blank cells (they form the tableau), and the
moves connecting Pipes(v) shrink to 2x2 windows.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .bpd import Bpd, MarkedBpd, Tile, rothe_bpd
from .bpd import lambda_of as _smallest_partition_over_diagram
from .errors import InvalidEncodingError, NotVexillaryError
from .partitions import Partition
from .perm import Permutation
from .poly import Polynomial, oplus

__all__ = [
    "FlaggedTableau",
    "SetValuedTableau",
    "mu_of",
    "lambda_of",
    "flag_of",
    "enumerate_fsyt",
    "enumerate_svt",
    "flatten",
    "saturate",
    "gamma",
    "gamma_bar",
    "local_moves",
    "inverse_local_moves",
    "top_bpd",
    "kmy_sum",
]

Cell = tuple[int, int]


def _require_vexillary(v: Permutation) -> None:
    if not v.is_vexillary():
        raise NotVexillaryError(f"{v} contains the pattern 2143")


def mu_of(v: Permutation) -> Partition:
    """Lehmer code sorted decreasingly; the shape of the tableaux for v."""
    _require_vexillary(v)
    return Partition.of(sorted(v.lehmer_code(), reverse=True))


def lambda_of(v: Permutation) -> Partition:
    """Smallest partition containing the Rothe diagram of v."""
    _require_vexillary(v)
    return _smallest_partition_over_diagram(v)


def flag_of(v: Permutation) -> tuple[int, ...]:
    """Row bound f_i: the deepest row of lambda's diagram on the diagonal
    through (i, mu_i)."""
    _require_vexillary(v)
    mu = mu_of(v)
    lam = lambda_of(v)
    flags = []
    for i, mu_i in enumerate(mu.parts, start=1):
        d = mu_i - i
        flags.append(max(r for r in range(1, lam.rows + 1) if (r, r + d) in lam))
    return tuple(flags)


@dataclass(frozen=True)
class FlaggedTableau:
    """Semistandard filling of a partition shape with row-i entries <= flag[i]."""

    shape: Partition
    entries: tuple[tuple[int, ...], ...]
    flag: tuple[int, ...]

    def __post_init__(self) -> None:
        lam = self.shape
        if len(self.entries) != lam.rows or len(self.flag) < lam.rows:
            raise InvalidEncodingError("rows do not match the shape")
        for i, row in enumerate(self.entries, start=1):
            if len(row) != lam.part(i):
                raise InvalidEncodingError(f"row {i} has the wrong length")
            for j, v in enumerate(row, start=1):
                if v < 1 or v > self.flag[i - 1]:
                    raise InvalidEncodingError(f"entry {v} violates the flag")
                if j > 1 and row[j - 2] > v:
                    raise InvalidEncodingError("rows must weakly increase")
                if i > 1 and j <= lam.part(i - 1) and self.entries[i - 2][j - 1] >= v:
                    raise InvalidEncodingError("columns must strictly increase")

    def value(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def to_json(self) -> list[list[list[int]]]:
        return [[[v] for v in row] for row in self.entries]


@dataclass(frozen=True)
class SetValuedTableau:
    """Filling by nonempty sets such that every selection of one entry per
    cell is a flagged semistandard tableau."""

    shape: Partition
    entries: tuple[tuple[tuple[int, ...], ...], ...]
    flag: tuple[int, ...]

    def __post_init__(self) -> None:
        lam = self.shape
        if len(self.entries) != lam.rows or len(self.flag) < lam.rows:
            raise InvalidEncodingError("rows do not match the shape")
        for i, row in enumerate(self.entries, start=1):
            if len(row) != lam.part(i):
                raise InvalidEncodingError(f"row {i} has the wrong length")
            for j, cell in enumerate(row, start=1):
                if not cell or list(cell) != sorted(set(cell)):
                    raise InvalidEncodingError("cells must be sorted nonempty sets")
                if cell[0] < 1 or cell[-1] > self.flag[i - 1]:
                    raise InvalidEncodingError("cell violates the flag")
                if j > 1 and row[j - 2][-1] > cell[0]:
                    raise InvalidEncodingError("rows must weakly increase")
                if i > 1 and j <= lam.part(i - 1) and (
                    self.entries[i - 2][j - 1][-1] >= cell[0]
                ):
                    raise InvalidEncodingError("columns must strictly increase")

    def cell(self, i: int, j: int) -> tuple[int, ...]:
        return self.entries[i - 1][j - 1]

    def total_entries(self) -> int:
        return sum(len(c) for row in self.entries for c in row)

    def to_json(self) -> list[list[list[int]]]:
        return [[list(c) for c in row] for row in self.entries]


def enumerate_fsyt(shape: Partition, flag: Iterable[int]) -> list[FlaggedTableau]:
    """All flagged semistandard tableaux, filled cell by cell in row-major
    order with semistandard and flag pruning; output order is deterministic."""
    f = tuple(flag)
    cells = list(shape.cells())
    out: list[FlaggedTableau] = []
    values: dict[Cell, int] = {}

    def fill(idx: int) -> None:
        if idx == len(cells):
            out.append(
                FlaggedTableau(
                    shape,
                    tuple(
                        tuple(values[(i, j)] for j in range(1, shape.part(i) + 1))
                        for i in range(1, shape.rows + 1)
                    ),
                    f,
                )
            )
            return
        i, j = cells[idx]
        lo = 1
        if j > 1:
            lo = max(lo, values[(i, j - 1)])
        if i > 1:
            lo = max(lo, values[(i - 1, j)] + 1)
        for v in range(lo, f[i - 1] + 1):
            values[(i, j)] = v
            fill(idx + 1)
        values.pop((i, j), None)

    fill(0)
    return out


def enumerate_svt(shape: Partition, flag: Iterable[int]) -> list[SetValuedTableau]:
    """All flagged set-valued tableaux: each cell takes a nonempty subset of
    the interval allowed by its west and north neighbours."""
    f = tuple(flag)
    cells = list(shape.cells())
    out: list[SetValuedTableau] = []
    chosen: dict[Cell, tuple[int, ...]] = {}

    def fill(idx: int) -> None:
        if idx == len(cells):
            out.append(
                SetValuedTableau(
                    shape,
                    tuple(
                        tuple(chosen[(i, j)] for j in range(1, shape.part(i) + 1))
                        for i in range(1, shape.rows + 1)
                    ),
                    f,
                )
            )
            return
        i, j = cells[idx]
        lo = 1
        if j > 1:
            lo = max(lo, chosen[(i, j - 1)][-1])
        if i > 1:
            lo = max(lo, chosen[(i - 1, j)][-1] + 1)
        pool = range(lo, f[i - 1] + 1)
        for size in range(1, len(pool) + 1):
            for subset in combinations(pool, size):
                chosen[(i, j)] = subset
                fill(idx + 1)
        chosen.pop((i, j), None)

    fill(0)
    return out


def flatten(t: SetValuedTableau) -> FlaggedTableau:
    """Keep only the minimum of every cell."""
    return FlaggedTableau(
        t.shape,
        tuple(tuple(c[0] for c in row) for row in t.entries),
        t.flag,
    )


def saturate(t: FlaggedTableau) -> SetValuedTableau:
    """Add to each cell every value above its minimum that keeps the filling
    flagged semistandard; minima are unchanged, so additions are independent."""
    lam = t.shape
    rows = []
    for i in range(1, lam.rows + 1):
        row = []
        for j in range(1, lam.part(i) + 1):
            hi = t.flag[i - 1]
            if j < lam.part(i):
                hi = min(hi, t.value(i, j + 1))
            if i < lam.rows and j <= lam.part(i + 1):
                hi = min(hi, t.value(i + 1, j) - 1)
            row.append(tuple(range(t.value(i, j), max(hi, t.value(i, j)) + 1)))
        rows.append(tuple(row))
    return SetValuedTableau(lam, tuple(rows), t.flag)


# -- tableaux to grids ---------------------------------------------------------


def _expected_crossings(v: Permutation) -> frozenset[Cell]:
    return rothe_bpd(v).crossings()


def gamma(t: FlaggedTableau, v: Permutation) -> Bpd:
    """The unique grid for v whose blank tiles sit at (T(i,j), T(i,j)+j-i).

    Crossings agree across Pipes(v), so blanks and crossings together pin
    down the corner-sum table and hence the whole grid.
    """
    _require_vexillary(v)
    if t.shape != mu_of(v) or tuple(t.flag) != flag_of(v):
        raise InvalidEncodingError(f"tableau shape/flag do not match {v}")
    n = v.n
    blanks = set()
    for i, j in t.shape.cells():
        k = t.value(i, j)
        blanks.add((k, k + j - i))
    if len(blanks) != t.shape.size():
        raise InvalidEncodingError("tableau cells collide on a diagonal")
    crossings = _expected_crossings(v)
    vals = [[0] * (n + 1) for _ in range(n + 1)]
    tiles = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if (i, j) in blanks:
                jump = 0
            elif (i, j) in crossings:
                jump = 2
            else:
                jump = 1
            r = vals[i - 1][j - 1] + jump
            vals[i][j] = r
            if jump == 0:
                row.append(Tile.BLANK)
            elif jump == 2:
                row.append(Tile.CROSS)
            else:
                rstep = r - vals[i - 1][j]
                cstep = r - vals[i][j - 1]
                row.append(
                    {
                        (1, 1): Tile.ELBOW_SE,
                        (0, 0): Tile.ELBOW_NW,
                        (1, 0): Tile.HORIZONTAL,
                        (0, 1): Tile.VERTICAL,
                    }[(rstep, cstep)]
                )
        tiles.append(tuple(row))
    grid = Bpd(tuple(tiles))
    if grid.blanks() != frozenset(blanks):
        raise InvalidEncodingError("tableau does not describe a grid for v")
    return grid


def gamma_bar(t: SetValuedTableau, v: Permutation) -> MarkedBpd:
    """Minimum entries give the grid; each excess entry k in cell (i, j)
    marks the upward elbow on its diagonal at (k, k+j-i)."""
    base = gamma(flatten(t), v)
    marks = set()
    for i, j in t.shape.cells():
        for k in t.cell(i, j)[1:]:
            marks.add((k, k + j - i))
    return MarkedBpd(base, frozenset(marks))


# -- local moves ----------------------------------------------------------------

_FORWARD_TR = {Tile.HORIZONTAL: Tile.ELBOW_SE, Tile.ELBOW_NW: Tile.VERTICAL}
_FORWARD_BL = {Tile.VERTICAL: Tile.ELBOW_SE, Tile.ELBOW_NW: Tile.HORIZONTAL}
_INVERSE_TR = {v: k for k, v in _FORWARD_TR.items()}
_INVERSE_BL = {v: k for k, v in _FORWARD_BL.items()}


def _two_by_two(p: Bpd) -> Iterator[Cell]:
    for i in range(1, p.n):
        for j in range(1, p.n):
            yield (i, j)


def _replace(p: Bpd, changes: dict[Cell, Tile]) -> Bpd:
    tiles = [list(row) for row in p.tiles]
    for (i, j), t in changes.items():
        tiles[i - 1][j - 1] = t
    return Bpd(tuple(tuple(row) for row in tiles))


def local_moves(p: Bpd) -> list[tuple[Cell, Bpd]]:
    """2x2 moves pushing a blank southeast: the northwest corner holds a
    downward elbow, the southeast corner is blank, and the off-corners carry
    the pipe around.  Returned with the window's northwest cell."""
    out = []
    for i, j in _two_by_two(p):
        if p.tile(i, j) is not Tile.ELBOW_SE or p.tile(i + 1, j + 1) is not Tile.BLANK:
            continue
        tr, bl = p.tile(i, j + 1), p.tile(i + 1, j)
        if tr in _FORWARD_TR and bl in _FORWARD_BL:
            out.append(
                (
                    (i, j),
                    _replace(
                        p,
                        {
                            (i, j): Tile.BLANK,
                            (i + 1, j + 1): Tile.ELBOW_NW,
                            (i, j + 1): _FORWARD_TR[tr],
                            (i + 1, j): _FORWARD_BL[bl],
                        },
                    ),
                )
            )
    return out


def inverse_local_moves(p: Bpd) -> list[tuple[Cell, Bpd]]:
    """The reversed 2x2 moves, pulling a blank back northwest."""
    out = []
    for i, j in _two_by_two(p):
        if p.tile(i, j) is not Tile.BLANK or p.tile(i + 1, j + 1) is not Tile.ELBOW_NW:
            continue
        tr, bl = p.tile(i, j + 1), p.tile(i + 1, j)
        if tr in _INVERSE_TR and bl in _INVERSE_BL:
            out.append(
                (
                    (i, j),
                    _replace(
                        p,
                        {
                            (i, j): Tile.ELBOW_SE,
                            (i + 1, j + 1): Tile.BLANK,
                            (i, j + 1): _INVERSE_TR[tr],
                            (i + 1, j): _INVERSE_BL[bl],
                        },
                    ),
                )
            )
    return out


def top_bpd(v: Permutation) -> Bpd:
    """The unique grid for v whose blanks are top-left justified (they fill
    the diagram of mu); it corresponds to the tableau with T(i, j) = i."""
    mu = mu_of(v)
    t = FlaggedTableau(
        mu,
        tuple(tuple(i for _ in range(mu.part(i))) for i in range(1, mu.rows + 1)),
        flag_of(v),
    )
    return gamma(t, v)


# -- the tableau formula ---------------------------------------------------------


def svt_weight(t: SetValuedTableau) -> Polynomial:
    """beta^{excess} times the product over entries k in cell (i, j) of
    x_k (+) y_{k+j-i}."""
    result = Polynomial.monomial(1, beta_exp=t.total_entries() - t.shape.size())
    for i, j in t.shape.cells():
        for k in t.cell(i, j):
            result = result * oplus(k, k + j - i)
    return result


def kmy_sum(v: Permutation) -> Polynomial:
    """Sum of the set-valued tableau weights for vexillary v; equals the
    divided-difference polynomial."""
    _require_vexillary(v)
    total = Polynomial.zero()
    for t in enumerate_svt(mu_of(v), flag_of(v)):
        total = total + svt_weight(t)
    return total


def fsyt_for(v: Permutation) -> list[FlaggedTableau]:
    return enumerate_fsyt(mu_of(v), flag_of(v))


def svt_for(v: Permutation) -> list[SetValuedTableau]:
    return enumerate_svt(mu_of(v), flag_of(v))
