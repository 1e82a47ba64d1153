"""Alternating sign matrices and their interchangeable encodings.

An alternating sign matrix (ASM) is a square {-1, 0, 1} matrix whose nonzero
entries alternate in sign along every row and column and sum to 1.  This
module provides:

- corner-sum tables and square-ice configurations as equivalent encodings,
- the Rothe diagram of an ASM via defining line segments,
- the entrywise poset (reverse corner-sum dominance),
- pivots, inflation (removing a -1), deflation (creating one), and the
  key: the permutation matrix reached by exhaustive inflation.

Conversions validate their input and reject anything that fails the
characterizing conditions of the target encoding.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidEncodingError, MoveError, SizeLimitError
from .perm import Permutation

__all__ = [
    "Asm",
    "CornerSum",
    "IceConfig",
    "corner_sum",
    "corner_sum_inverse",
    "enumerate_asm",
    "rothe_diagram_asm",
    "negatives",
    "to_ice",
    "from_ice",
    "asm_leq",
    "pivots",
    "inflate",
    "is_removable",
    "deflate",
    "key",
    "DEFAULT_ENUM_LIMIT",
]

DEFAULT_ENUM_LIMIT = 6

Cell = tuple[int, int]


@dataclass(frozen=True)
class Asm:
    """An alternating sign matrix, stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise InvalidEncodingError("matrix is not square")
        for r in self.rows:
            _check_line(r)
        for j in range(n):
            _check_line(tuple(self.rows[i][j] for i in range(n)))

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "Asm":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def from_permutation(cls, w: Permutation) -> "Asm":
        n = w.n
        return cls(
            tuple(
                tuple(1 if w(i) == j else 0 for j in range(1, n + 1))
                for i in range(1, n + 1)
            )
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def is_permutation(self) -> bool:
        return all(v >= 0 for row in self.rows for v in row)

    def to_permutation(self) -> Permutation:
        if not self.is_permutation():
            raise InvalidEncodingError("matrix has negative entries")
        return Permutation(tuple(row.index(1) + 1 for row in self.rows))

    def ones(self) -> frozenset[Cell]:
        return frozenset(
            (i + 1, j + 1)
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
            if v == 1
        )

    def negatives(self) -> frozenset[Cell]:
        return frozenset(
            (i + 1, j + 1)
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
            if v == -1
        )

    def row_prefix(self, i: int, j: int) -> int:
        """Sum of row i over columns 1..j."""
        return sum(self.rows[i - 1][:j])

    def col_prefix(self, i: int, j: int) -> int:
        """Sum of column j over rows 1..i."""
        return sum(self.rows[k][j - 1] for k in range(i))

    def rothe_diagram(self) -> frozenset[Cell]:
        """Cells crossed by no defining line segment.

        A zero cell lies on a horizontal segment iff the nearest nonzero to
        its left is a 1, which is exactly a row prefix sum of 1; likewise
        vertically.
        """
        out = []
        for i in range(1, self.n + 1):
            rp = 0
            for j in range(1, self.n + 1):
                v = self.rows[i - 1][j - 1]
                rp += v
                if v == 0 and rp == 0 and self.col_prefix(i, j) == 0:
                    out.append((i, j))
        return frozenset(out)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(
            " ".join(f"{v:2d}" for v in row) for row in self.rows
        )


def _check_line(line: Sequence[int]) -> None:
    total = 0
    for v in line:
        if v not in (-1, 0, 1):
            raise InvalidEncodingError(f"entry {v} outside {{-1, 0, 1}}")
        total += v
        if total not in (0, 1):
            raise InvalidEncodingError("partial sums leave {0, 1}")
    if total != 1:
        raise InvalidEncodingError("line does not sum to 1")


@dataclass(frozen=True)
class CornerSum:
    """The (n+1) x (n+1) table r(i, j) of top-left block sums, 0 <= i, j <= n."""

    values: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.values) - 1
        v = self.values
        if n < 0 or any(len(row) != n + 1 for row in v):
            raise InvalidEncodingError("table is not (n+1) x (n+1)")
        for i in range(n + 1):
            if v[i][0] != 0 or v[0][i] != 0:
                raise InvalidEncodingError("border row/column must be zero")
            if v[i][n] != i or v[n][i] != i:
                raise InvalidEncodingError("last row/column must be 0..n")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if v[i][j] - v[i - 1][j] not in (0, 1):
                    raise InvalidEncodingError("column steps must be 0 or 1")
                if v[i][j] - v[i][j - 1] not in (0, 1):
                    raise InvalidEncodingError("row steps must be 0 or 1")

    @classmethod
    def of(cls, values: Iterable[Iterable[int]]) -> "CornerSum":
        return cls(tuple(tuple(int(v) for v in row) for row in values))

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def r(self, i: int, j: int) -> int:
        return self.values[i][j]

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.values]


def corner_sum(a: Asm) -> CornerSum:
    n = a.n
    vals = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        acc = 0
        for j in range(1, n + 1):
            acc += a.rows[i - 1][j - 1]
            vals[i][j] = vals[i - 1][j] + acc
    return CornerSum(tuple(tuple(row) for row in vals))


def corner_sum_inverse(r: CornerSum) -> Asm:
    n = r.n
    v = r.values
    return Asm(
        tuple(
            tuple(
                v[i][j] + v[i - 1][j - 1] - v[i - 1][j] - v[i][j - 1]
                for j in range(1, n + 1)
            )
            for i in range(1, n + 1)
        )
    )


# -- square ice -------------------------------------------------------------

# Vertex states, named by their single-letter code:
#   L  horizontal edges in, vertical out   (ASM entry  1; SE elbow tile)
#   R  vertical edges in, horizontal out   (ASM entry -1; NW elbow tile)
#   N  in from north and east              (crossing tile)
#   S  in from south and west              (blank tile)
#   H  in from east and south              (horizontal pipe tile)
#   V  in from west and north              (vertical pipe tile)
# Each state records the absolute arrow direction of its four incident
# edges in the order (west, north, east, south); horizontal edges point E/W
# and vertical edges point N/S.
ICE_STATES = {
    "L": ("E", "N", "W", "S"),
    "R": ("W", "S", "E", "N"),
    "N": ("W", "S", "W", "S"),
    "S": ("E", "N", "E", "N"),
    "H": ("W", "N", "W", "N"),
    "V": ("E", "S", "E", "S"),
}


@dataclass(frozen=True)
class IceConfig:
    """A square ice configuration given by one state letter per vertex.

    Horizontal boundary edges point inwards and vertical boundary edges
    point outwards; every interior vertex has two edges in and two out.
    """

    states: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.states)
        for row in self.states:
            if len(row) != n:
                raise InvalidEncodingError("state grid is not square")
            for ch in row:
                if ch not in ICE_STATES:
                    raise InvalidEncodingError(f"unknown vertex state {ch!r}")
        for i in range(n):
            for j in range(n):
                w, no, e, s = ICE_STATES[self.states[i][j]]
                if j == 0 and w != "E":
                    raise InvalidEncodingError("west boundary must point in")
                if j == n - 1 and e != "W":
                    raise InvalidEncodingError("east boundary must point in")
                if i == 0 and no != "N":
                    raise InvalidEncodingError("north boundary must point out")
                if i == n - 1 and s != "S":
                    raise InvalidEncodingError("south boundary must point out")
                if j + 1 < n and e != ICE_STATES[self.states[i][j + 1]][0]:
                    raise InvalidEncodingError(
                        f"horizontal edge mismatch at {(i + 1, j + 1)}"
                    )
                if i + 1 < n and s != ICE_STATES[self.states[i + 1][j]][1]:
                    raise InvalidEncodingError(
                        f"vertical edge mismatch at {(i + 1, j + 1)}"
                    )

    @classmethod
    def of(cls, rows: Iterable[str]) -> "IceConfig":
        return cls(tuple(rows))

    @property
    def n(self) -> int:
        return len(self.states)

    def state(self, i: int, j: int) -> str:
        return self.states[i - 1][j - 1]

    def to_json(self) -> dict:
        return {"n": self.n, "states": list(self.states)}


def to_ice(a: Asm) -> IceConfig:
    n = a.n
    rows = []
    for i in range(1, n + 1):
        rp = 0
        chars = []
        for j in range(1, n + 1):
            v = a.rows[i - 1][j - 1]
            rp += v
            if v == 1:
                chars.append("L")
            elif v == -1:
                chars.append("R")
            else:
                cp = a.col_prefix(i, j)
                chars.append({(1, 1): "N", (0, 0): "S", (1, 0): "H", (0, 1): "V"}[(rp, cp)])
        rows.append("".join(chars))
    return IceConfig(tuple(rows))


def from_ice(ice: IceConfig) -> Asm:
    value = {"L": 1, "R": -1}
    return Asm(
        tuple(
            tuple(value.get(ch, 0) for ch in row)
            for row in ice.states
        )
    )


# -- enumeration -------------------------------------------------------------


def _valid_rows(n: int) -> list[tuple[int, ...]]:
    """Rows whose prefix sums stay in {0, 1} and end at 1, in lex order."""
    rows = []
    for size in range(1, n + 1, 2):
        for positions in itertools.combinations(range(n), size):
            row = [0] * n
            sign = 1
            for p in positions:
                row[p] = sign
                sign = -sign
            rows.append(tuple(row))
    return sorted(rows)


def _extend(n: int, prefix: list[tuple[int, ...]], col_sums: list[int],
            rows: list[tuple[int, ...]], out: list[Asm]) -> None:
    depth = len(prefix)
    if depth == n:
        out.append(Asm(tuple(prefix)))
        return
    last = depth == n - 1
    for row in rows:
        new_sums = []
        ok = True
        for c, v in zip(col_sums, row):
            s = c + v
            if s not in (0, 1) or (last and s != 1):
                ok = False
                break
            new_sums.append(s)
        if ok:
            prefix.append(row)
            _extend(n, prefix, new_sums, rows, out)
            prefix.pop()


def _enumerate_from_first_row(args: tuple[int, tuple[int, ...]]) -> list[list[list[int]]]:
    n, first = args
    if any(v < 0 for v in first):
        return []
    rows = _valid_rows(n)
    out: list[Asm] = []
    _extend(n, [first], list(first), rows, out)
    return [a.to_json() for a in out]


def enumerate_asm(n: int, limit: int | None = None, workers: int = 1) -> list[Asm]:
    """All ASMs of size n, in lexicographic order by row vectors.

    With ``workers > 1`` the search is partitioned by first row and run in
    separate processes; partitions share no mutable state.
    """
    cap = DEFAULT_ENUM_LIMIT if limit is None else limit
    if n > cap:
        raise SizeLimitError(f"refusing to enumerate ASM({n}) (limit {cap})")
    if n == 0:
        return []
    rows = _valid_rows(n)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(
                _enumerate_from_first_row, [(n, first) for first in rows]
            )
        return [Asm.of(data) for chunk in chunks for data in chunk]
    out: list[Asm] = []
    _extend(n, [], [0] * n, rows, out)
    return out


# -- diagram, poset, pivots ---------------------------------------------------


def rothe_diagram_asm(a: Asm) -> frozenset[Cell]:
    return a.rothe_diagram()


def negatives(a: Asm) -> frozenset[Cell]:
    return a.negatives()


def asm_leq(a: Asm, b: Asm) -> bool:
    """Partial order: A <= B iff corner sums satisfy r_A >= r_B entrywise.

    Restricted to permutation matrices this is strong Bruhat order.
    """
    if a.n != b.n:
        raise ValueError("cannot compare matrices of different sizes")
    ra, rb = corner_sum(a).values, corner_sum(b).values
    return all(
        ra[i][j] >= rb[i][j]
        for i in range(a.n + 1)
        for j in range(a.n + 1)
    )


def pivots(a: Asm, cell: Cell) -> list[Cell]:
    """Positions (i, j) weakly northwest of the cell holding a 1 whose
    rectangle down to the cell contains no other nonzero entry.

    Sorted by increasing row, hence decreasing column.
    """
    r, c = cell
    found = []
    for i in range(1, r + 1):
        for j in range(1, c + 1):
            if (i, j) == (r, c) or a.rows[i - 1][j - 1] != 1:
                continue
            clean = all(
                a.rows[p - 1][q - 1] == 0
                for p in range(i, r + 1)
                for q in range(j, c + 1)
                if (p, q) != (i, j) and (p, q) != (r, c)
            )
            if clean:
                found.append((i, j))
    found.sort()
    cols = [j for _, j in found]
    assert cols == sorted(cols, reverse=True), "pivot staircase violated"
    return found


def is_removable(a: Asm, cell: Cell) -> bool:
    """A -1 is removable when the union of pivot rectangles holds no other -1."""
    r, c = cell
    if a.entry(r, c) != -1:
        return False
    pv = pivots(a, cell)
    for (i, _), (_, j_next) in zip(pv, pv[1:]):
        for p in range(i, r + 1):
            for q in range(j_next, c + 1):
                if a.rows[p - 1][q - 1] == -1 and (p, q) != (r, c):
                    return False
    return True


def inflate(a: Asm, cell: Cell) -> Asm:
    """Remove a removable -1: zero it and its pivots, then shift each pivot's
    1 to the column of the next pivot."""
    r, c = cell
    if a.entry(r, c) != -1:
        raise MoveError(f"no -1 at {cell}")
    if not is_removable(a, cell):
        raise MoveError(f"-1 at {cell} is not removable")
    pv = pivots(a, cell)
    rows = [list(row) for row in a.rows]
    rows[r - 1][c - 1] = 0
    for i, j in pv:
        rows[i - 1][j - 1] = 0
    for (i, _), (_, j_next) in zip(pv, pv[1:]):
        rows[i - 1][j_next - 1] = 1
    return Asm(tuple(tuple(row) for row in rows))


def deflate(a: Asm, cell: Cell, pivot_rows: Iterable[int]) -> Asm:
    """Create a -1 at a diagram cell by drooping the pivots in the given rows.

    The chosen pivots all sit strictly northwest of the cell; one pivot is a
    droop, more pivots thread the new pipe through each of them in turn.
    """
    r, c = cell
    if cell not in a.rothe_diagram():
        raise MoveError(f"{cell} is not in the diagram")
    chosen_rows = sorted(set(pivot_rows))
    if not chosen_rows:
        raise MoveError("deflation needs at least one pivot row")
    by_row = {i: (i, j) for i, j in pivots(a, cell)}
    if any(i >= r for i in by_row):
        raise MoveError("diagram-cell pivots must sit strictly above")
    try:
        chosen = [by_row[i] for i in chosen_rows]
    except KeyError as exc:
        raise MoveError(f"row {exc.args[0]} has no pivot for {cell}") from exc
    rows = [list(row) for row in a.rows]
    for i, j in chosen:
        rows[i - 1][j - 1] = 0
    cols = [c] + [j for _, j in chosen]
    for (i, _), col in zip(chosen, cols):
        rows[i - 1][col - 1] = 1
    rows[r - 1][cols[-1] - 1] = 1
    rows[r - 1][c - 1] = -1
    return Asm(tuple(tuple(row) for row in rows))


def key(a: Asm) -> Permutation:
    """Inflate away every -1, topmost row first and leftmost within the row,
    and return the resulting permutation.  The removal order does not matter.
    """
    current = a
    while True:
        negs = current.negatives()
        if not negs:
            return current.to_permutation()
        current = inflate(current, min(negs))
