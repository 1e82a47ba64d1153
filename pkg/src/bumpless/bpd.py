"""Bumpless pipe dreams: six-tile grids routing n pipes bottom edge to right
edge, their bijection with alternating sign matrices, reading words and
0-Hecke products, weights, droop moves, and the generation of Pipes(w).

Tile-to-matrix dictionary: a downward (SE) elbow marks a 1, an upward (NW)
elbow marks a -1, and the four remaining tiles are determined by the row and
column partial sums of the matrix.  In particular a grid is reconstructible
from its elbow positions alone, which is how every constructor here works.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Iterable, NamedTuple

from . import asm as asm_mod
from .asm import Asm
from .errors import (
    InvalidEncodingError,
    MoveError,
    SizeLimitError,
)
from .partitions import Partition
from .perm import Permutation, demazure_product
from .poly import Polynomial, beta, divide_beta_power, oplus, x, y

__all__ = [
    "Tile",
    "Bpd",
    "MarkedBpd",
    "DroopMove",
    "KdroopMove",
    "phi",
    "phi_inv",
    "rothe_bpd",
    "reading_word",
    "demazure",
    "weight",
    "marked_weight",
    "droop_moves",
    "kdroop_moves",
    "apply_droop",
    "apply_kdroop",
    "pipes",
    "rpipes",
    "mpipes",
    "grothendieck_bpd",
    "schubert_bpd",
    "mutable_region",
    "lambda_of",
    "ShapedBpd",
    "restrict",
    "complete",
    "enumerate_bpd",
    "enumerate_shaped",
    "DEFAULT_PIPES_LIMIT",
]

DEFAULT_PIPES_LIMIT = 8

Cell = tuple[int, int]


class Tile(Enum):
    """The six tiles; the value is the one-character serialization code."""

    BLANK = "."
    HORIZONTAL = "-"
    VERTICAL = "|"
    CROSS = "+"
    ELBOW_SE = "L"  # pipe enters the south edge, leaves the east edge
    ELBOW_NW = "J"  # pipe enters the west edge, leaves the north edge

    @property
    def edges(self) -> frozenset[str]:
        return _TILE_EDGES[self]

    @property
    def glyph(self) -> str:
        return _TILE_GLYPHS[self]


_TILE_EDGES = {
    Tile.BLANK: frozenset(),
    Tile.HORIZONTAL: frozenset("WE"),
    Tile.VERTICAL: frozenset("NS"),
    Tile.CROSS: frozenset("NSWE"),
    Tile.ELBOW_SE: frozenset("SE"),
    Tile.ELBOW_NW: frozenset("NW"),
}

_TILE_GLYPHS = {
    Tile.BLANK: "·",
    Tile.HORIZONTAL: "─",
    Tile.VERTICAL: "│",
    Tile.CROSS: "┼",
    Tile.ELBOW_SE: "╰",
    Tile.ELBOW_NW: "╮",
}

_TILE_BY_CHAR = {t.value: t for t in Tile}


@dataclass(frozen=True)
class Bpd:
    """An n x n bumpless pipe dream."""

    tiles: tuple[tuple[Tile, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.tiles)
        if any(len(row) != n for row in self.tiles):
            raise InvalidEncodingError("tile grid is not square")
        for i in range(n):
            for j in range(n):
                e = self.tiles[i][j].edges
                if i == 0 and "N" in e:
                    raise InvalidEncodingError("pipe leaves the top edge")
                if j == 0 and "W" in e:
                    raise InvalidEncodingError("pipe leaves the left edge")
                if i == n - 1 and "S" not in e:
                    raise InvalidEncodingError("missing pipe on the bottom edge")
                if j == n - 1 and "E" not in e:
                    raise InvalidEncodingError("missing pipe on the right edge")
                if i + 1 < n and ("S" in e) != ("N" in self.tiles[i + 1][j].edges):
                    raise InvalidEncodingError(
                        f"vertical edge mismatch below {(i + 1, j + 1)}"
                    )
                if j + 1 < n and ("E" in e) != ("W" in self.tiles[i][j + 1].edges):
                    raise InvalidEncodingError(
                        f"horizontal edge mismatch right of {(i + 1, j + 1)}"
                    )

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_elbows(
        cls, n: int, se: Iterable[Cell], nw: Iterable[Cell]
    ) -> "Bpd":
        """Rebuild the full tile grid from elbow positions via partial sums."""
        entry: dict[Cell, int] = {c: 1 for c in se}
        for c in nw:
            if c in entry:
                raise InvalidEncodingError(f"cell {c} is both elbow kinds")
            entry[c] = -1
        col = [0] * (n + 1)
        rows = []
        for i in range(1, n + 1):
            rp = 0
            row = []
            for j in range(1, n + 1):
                v = entry.get((i, j), 0)
                rp += v
                col[j] += v
                if v == 1:
                    row.append(Tile.ELBOW_SE)
                elif v == -1:
                    row.append(Tile.ELBOW_NW)
                else:
                    row.append(
                        {
                            (0, 0): Tile.BLANK,
                            (1, 0): Tile.HORIZONTAL,
                            (0, 1): Tile.VERTICAL,
                            (1, 1): Tile.CROSS,
                        }[(rp, col[j])]
                    )
            rows.append(tuple(row))
        return cls(tuple(rows))

    @classmethod
    def from_json(cls, data: dict) -> "Bpd":
        n = int(data["n"])
        strings = data["tiles"]
        if len(strings) != n or any(len(s) != n for s in strings):
            raise InvalidEncodingError("tile strings do not match n")
        try:
            tiles = tuple(
                tuple(_TILE_BY_CHAR[ch] for ch in s) for s in strings
            )
        except KeyError as exc:
            raise InvalidEncodingError(f"unknown tile code {exc.args[0]!r}")
        return cls(tiles)

    # -- queries ---------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.tiles)

    def tile(self, i: int, j: int) -> Tile:
        return self.tiles[i - 1][j - 1]

    def cells_of(self, kind: Tile) -> frozenset[Cell]:
        return frozenset(
            (i + 1, j + 1)
            for i, row in enumerate(self.tiles)
            for j, t in enumerate(row)
            if t is kind
        )

    def blanks(self) -> frozenset[Cell]:
        return self.cells_of(Tile.BLANK)

    def crossings(self) -> frozenset[Cell]:
        return self.cells_of(Tile.CROSS)

    def elbows_se(self) -> frozenset[Cell]:
        return self.cells_of(Tile.ELBOW_SE)

    def elbows_nw(self) -> frozenset[Cell]:
        """Upward elbows; these are the markable cells of a marked grid."""
        return self.cells_of(Tile.ELBOW_NW)

    def corner_sums(self) -> tuple[tuple[int, ...], ...]:
        """Corner-sum table recovered from tiles alone: along each diagonal
        the value jumps by 0 at a blank, 2 at a crossing, 1 otherwise."""
        n = self.n
        vals = [[0] * (n + 1) for _ in range(n + 1)]
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                t = self.tiles[i - 1][j - 1]
                jump = 0 if t is Tile.BLANK else 2 if t is Tile.CROSS else 1
                vals[i][j] = vals[i - 1][j - 1] + jump
        return tuple(tuple(row) for row in vals)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "tiles": ["".join(t.value for t in row) for row in self.tiles],
        }

    def render(self, ascii_safe: bool = False) -> str:
        if ascii_safe:
            return "\n".join("".join(t.value for t in row) for row in self.tiles)
        return "\n".join(
            " ".join(t.glyph for t in row) for row in self.tiles
        )

    def key_str(self) -> str:
        return "".join(t.value for row in self.tiles for t in row)

    # -- words and products -----------------------------------------------------

    def reading_word(self) -> tuple[int, ...]:
        """Letters of the crossings read column by column, bottom to top,
        working left to right.  A crossing's letter is its corner-sum value
        minus one, which counts the pipes passing strictly northwest of it
        plus one."""
        r = self.corner_sums()
        crossings = sorted(self.crossings(), key=lambda c: (c[1], -c[0]))
        return tuple(r[i][j] - 1 for i, j in crossings)

    def demazure(self) -> Permutation:
        return demazure_product(self.reading_word(), self.n)

    def pipe_routes(self) -> list[list[Cell]]:
        """Trace each pipe from its bottom-edge entry to its right-edge exit.

        Pipes are numbered by entry column; crossings are pass-through for
        both strands.
        """
        routes = []
        for start in range(1, self.n + 1):
            i, j, heading = self.n, start, "N"
            cells = []
            while 1 <= i and j <= self.n:
                cells.append((i, j))
                t = self.tiles[i - 1][j - 1]
                if heading == "N":
                    if t in (Tile.VERTICAL, Tile.CROSS):
                        i -= 1
                    elif t is Tile.ELBOW_SE:
                        heading = "E"
                        j += 1
                    else:
                        raise InvalidEncodingError(f"broken pipe at {(i, j)}")
                else:
                    if t in (Tile.HORIZONTAL, Tile.CROSS):
                        j += 1
                    elif t is Tile.ELBOW_NW:
                        heading = "N"
                        i -= 1
                    else:
                        raise InvalidEncodingError(f"broken pipe at {(i, j)}")
            routes.append(cells)
        return routes

    def crossing_pairs(self) -> dict[tuple[int, int], int]:
        """How many times each pair of pipes crosses, by pipe tracing."""
        vertical: dict[Cell, int] = {}
        horizontal: dict[Cell, int] = {}
        for label, route in enumerate(self.pipe_routes(), start=1):
            for idx, cell in enumerate(route):
                if self.tile(*cell) is not Tile.CROSS:
                    continue
                prev = route[idx - 1] if idx else (cell[0] + 1, cell[1])
                if prev[0] == cell[0] + 1:
                    vertical[cell] = label
                else:
                    horizontal[cell] = label
        counts: dict[tuple[int, int], int] = {}
        for cell in self.crossings():
            a, b = vertical[cell], horizontal[cell]
            pair = (min(a, b), max(a, b))
            counts[pair] = counts.get(pair, 0) + 1
        return counts

    def is_reduced(self) -> bool:
        """No pair of pipes crosses twice; equivalently the number of
        crossings equals the length of the 0-Hecke product."""
        return all(v == 1 for v in self.crossing_pairs().values())

    def mutable_region(self) -> frozenset[Cell]:
        """Union of the upper-left rectangles of all blank cells."""
        out: set[Cell] = set()
        for i, j in self.blanks():
            out.update((p, q) for p in range(1, i + 1) for q in range(1, j + 1))
        return frozenset(out)


def phi(a: Asm) -> Bpd:
    """The tile grid of an ASM: smooth each defining segment into pipes."""
    return Bpd.from_elbows(a.n, a.ones(), a.negatives())


def phi_inv(p: Bpd) -> Asm:
    rows = []
    for row in p.tiles:
        rows.append(
            tuple(
                1 if t is Tile.ELBOW_SE else -1 if t is Tile.ELBOW_NW else 0
                for t in row
            )
        )
    return Asm(tuple(rows))


def rothe_bpd(w: Permutation) -> Bpd:
    """The hook grid with a downward elbow at (i, w(i)) and no upward elbows."""
    return Bpd.from_elbows(w.n, ((i, w(i)) for i in range(1, w.n + 1)), ())


def reading_word(p: Bpd) -> tuple[int, ...]:
    return p.reading_word()


def demazure(p: Bpd) -> Permutation:
    return p.demazure()


# -- weights -----------------------------------------------------------------


def weight(p: Bpd) -> Polynomial:
    """Product of beta * (x_i (+) y_j) over blanks times 1 + beta * (x_i (+) y_j)
    over upward elbows."""
    result = Polynomial.one()
    for i, j in sorted(p.blanks()):
        result = result * (beta() * oplus(i, j))
    for i, j in sorted(p.elbows_nw()):
        result = result * (Polynomial.one() + beta() * oplus(i, j))
    return result


@dataclass(frozen=True)
class MarkedBpd:
    """A grid together with a chosen subset of its upward elbows."""

    bpd: Bpd
    marks: frozenset[Cell]

    def __post_init__(self) -> None:
        if not self.marks <= self.bpd.elbows_nw():
            raise InvalidEncodingError("marks must sit on upward elbows")

    def to_json(self) -> dict:
        data = self.bpd.to_json()
        data["marks"] = [list(c) for c in sorted(self.marks)]
        return data

    @classmethod
    def from_json(cls, data: dict) -> "MarkedBpd":
        base = Bpd.from_json(data)
        marks = frozenset((int(i), int(j)) for i, j in data.get("marks", []))
        return cls(base, marks)


def marked_weight(m: MarkedBpd) -> Polynomial:
    """beta^{|blanks| + |marks| - length} times the product of x_i (+) y_j
    over blanks and marks, the length being that of the grid's 0-Hecke
    product.  Summing over all mark subsets of a fixed grid recovers its
    unmarked weight divided by beta^{length}."""
    cells = sorted(m.bpd.blanks() | m.marks)
    excess = len(cells) - m.bpd.demazure().length()
    if excess < 0:
        raise InvalidEncodingError("fewer blanks than the product's length")
    result = Polynomial.monomial(1, beta_exp=excess)
    for i, j in cells:
        result = result * oplus(i, j)
    return result


# -- droops and K-theoretic droops ---------------------------------------------


class DroopMove(NamedTuple):
    """A droop, recorded by its bounding rectangle corners: the pivot elbow
    at the northwest and the target blank at the southeast."""

    nw: Cell
    se: Cell


class KdroopMove(NamedTuple):
    """A K-theoretic droop: two downward elbows spanning a clean rectangle,
    supported by an upward elbow east of or south of the lower elbow."""

    nw: Cell
    se: Cell
    support: str  # "E" or "S"


def _strict_pivots(se: frozenset[Cell], nw: frozenset[Cell], cell: Cell) -> list[Cell]:
    r, c = cell
    elbows = se | nw
    out = []
    for p, q in se:
        if p < r and q < c and not any(
            p <= i <= r and q <= j <= c and (i, j) != (p, q)
            for i, j in elbows
        ):
            out.append((p, q))
    out.sort()
    return out


def droop_moves(p: Bpd) -> list[tuple[DroopMove, Bpd]]:
    """All single-pivot deflations.  Each preserves the crossing count and
    creates one upward elbow at the drooped blank."""
    se, nw = p.elbows_se(), p.elbows_nw()
    out = []
    for cell in sorted(p.blanks()):
        for piv in _strict_pivots(se, nw, cell):
            move = DroopMove(piv, cell)
            out.append((move, apply_droop(p, move)))
    return out


def apply_droop(p: Bpd, move: DroopMove) -> Bpd:
    (pr, pc), (r, c) = move.nw, move.se
    se, nw = set(p.elbows_se()), set(p.elbows_nw())
    if (pr, pc) not in se or p.tile(r, c) is not Tile.BLANK:
        raise MoveError(f"droop {move} does not apply")
    se.remove((pr, pc))
    se.update([(pr, c), (r, pc)])
    nw.add((r, c))
    return Bpd.from_elbows(p.n, se, nw)


def kdroop_moves(p: Bpd) -> list[tuple[KdroopMove, Bpd]]:
    """All K-theoretic droops.  Each swaps two downward elbows across a clean
    rectangle whose lower elbow is threaded into an adjacent upward elbow,
    increasing the crossing count by one."""
    se, nw = p.elbows_se(), p.elbows_nw()
    elbows = se | nw
    out = []
    for low in sorted(se):
        r2, c2 = low
        support = None
        east = [j for i, j in elbows if i == r2 and j > c2]
        if east and (r2, min(east)) in nw:
            support = "E"
        else:
            south = [i for i, j in elbows if j == c2 and i > r2]
            if south and (min(south), c2) in nw:
                support = "S"
        if support is None:
            continue
        for high in sorted(se):
            r1, c1 = high
            if not (r1 < r2 and c1 < c2):
                continue
            clean = not any(
                r1 <= i <= r2 and c1 <= j <= c2 and (i, j) not in (low, high)
                for i, j in elbows
            )
            if clean:
                move = KdroopMove(high, low, support)
                out.append((move, apply_kdroop(p, move)))
    return out


def apply_kdroop(p: Bpd, move: KdroopMove) -> Bpd:
    (r1, c1), (r2, c2) = move.nw, move.se
    se, nw = set(p.elbows_se()), set(p.elbows_nw())
    if (r1, c1) not in se or (r2, c2) not in se:
        raise MoveError(f"K-droop {move} does not apply")
    se.difference_update([(r1, c1), (r2, c2)])
    se.update([(r1, c2), (r2, c1)])
    return Bpd.from_elbows(p.n, se, nw)


# -- Pipes(w) ------------------------------------------------------------------

_PIPES_CACHE: dict[tuple[int, ...], tuple[Bpd, ...]] = {}
_PIPES_LOCK = threading.Lock()


def pipes(w: Permutation, max_n: int | None = None) -> list[Bpd]:
    """All grids with 0-Hecke product w: the closure of the hook grid of w
    under droops and K-theoretic droops."""
    limit = DEFAULT_PIPES_LIMIT if max_n is None else max_n
    if w.n > limit:
        raise SizeLimitError(f"refusing Pipes in S_{w.n} (limit {limit})")
    cached = _PIPES_CACHE.get(w.oneline)
    if cached is None:
        start = rothe_bpd(w)
        seen: dict[str, Bpd] = {start.key_str(): start}
        frontier = [start]
        while frontier:
            nxt = []
            for q in frontier:
                for _, image in droop_moves(q) + kdroop_moves(q):
                    k = image.key_str()
                    if k not in seen:
                        seen[k] = image
                        nxt.append(image)
            frontier = nxt
        cached = tuple(seen[k] for k in sorted(seen))
        with _PIPES_LOCK:
            _PIPES_CACHE.setdefault(w.oneline, cached)
    return list(cached)


def rpipes(w: Permutation, max_n: int | None = None) -> list[Bpd]:
    return [p for p in pipes(w, max_n) if p.is_reduced()]


def mpipes(w: Permutation, max_n: int | None = None) -> list[MarkedBpd]:
    out = []
    for p in pipes(w, max_n):
        elbows = sorted(p.elbows_nw())
        for mask in range(1 << len(elbows)):
            marks = frozenset(
                elbows[i] for i in range(len(elbows)) if mask >> i & 1
            )
            out.append(MarkedBpd(p, marks))
    return out


def grothendieck_bpd(w: Permutation, max_n: int | None = None) -> Polynomial:
    """Sum of weights over Pipes(w), normalised by beta^{-length}."""
    total = reduce(
        lambda acc, p: acc + weight(p), pipes(w, max_n), Polynomial.zero()
    )
    return divide_beta_power(total, w.length())


def schubert_bpd(w: Permutation, max_n: int | None = None) -> Polynomial:
    """Sum over reduced grids of the product of x_i - y_j over blanks."""
    total = Polynomial.zero()
    for p in rpipes(w, max_n):
        term = Polynomial.one()
        for i, j in sorted(p.blanks()):
            term = term * (x(i) - y(j))
        total = total + term
    return total


# -- mutable region, partition support ----------------------------------------


def mutable_region(p: Bpd) -> frozenset[Cell]:
    return p.mutable_region()


def lambda_of(w: Permutation) -> Partition:
    """Smallest partition whose diagram contains the Rothe diagram of w."""
    diagram = w.rothe_diagram()
    if not diagram:
        return Partition.of(())
    depth = max(i for i, _ in diagram)
    widths = [0] * (depth + 1)
    for i, j in diagram:
        widths[i] = max(widths[i], j)
    parts = []
    running = 0
    for i in range(depth, 0, -1):
        running = max(running, widths[i])
        parts.append(running)
    return Partition.of(reversed(parts))


@dataclass(frozen=True)
class ShapedBpd:
    """A tiling of a Young diagram where pipes enter through the bottom cell
    of a column and leave through the rightmost cell of a row.  The north and
    west boundaries are closed; the staircase boundary is open."""

    shape: Partition
    tiles: tuple[tuple[Tile, ...], ...]

    def __post_init__(self) -> None:
        lam = self.shape
        if len(self.tiles) != lam.rows or any(
            len(row) != lam.part(i + 1) for i, row in enumerate(self.tiles)
        ):
            raise InvalidEncodingError("tile rows do not match the shape")
        for i in range(1, lam.rows + 1):
            for j in range(1, lam.part(i) + 1):
                e = self.tiles[i - 1][j - 1].edges
                if i == 1 and "N" in e:
                    raise InvalidEncodingError("pipe leaves the top edge")
                if j == 1 and "W" in e:
                    raise InvalidEncodingError("pipe leaves the left edge")
                if (i + 1, j) in lam and ("S" in e) != (
                    "N" in self.tiles[i][j - 1].edges
                ):
                    raise InvalidEncodingError(f"vertical mismatch at {(i, j)}")
                if (i, j + 1) in lam and ("E" in e) != (
                    "W" in self.tiles[i - 1][j].edges
                ):
                    raise InvalidEncodingError(f"horizontal mismatch at {(i, j)}")

    @property
    def rows(self) -> int:
        return self.shape.rows

    def tile(self, i: int, j: int) -> Tile:
        return self.tiles[i - 1][j - 1]

    def cells_of(self, kind: Tile) -> frozenset[Cell]:
        return frozenset(
            (i + 1, j + 1)
            for i, row in enumerate(self.tiles)
            for j, t in enumerate(row)
            if t is kind
        )

    def blanks(self) -> frozenset[Cell]:
        return self.cells_of(Tile.BLANK)

    def elbows_nw(self) -> frozenset[Cell]:
        return self.cells_of(Tile.ELBOW_NW)

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "tiles": ["".join(t.value for t in row) for row in self.tiles],
        }


def restrict(p: Bpd, shape: Partition) -> ShapedBpd:
    """Cut out the tiles over the Young diagram of the shape."""
    if shape.rows > p.n or (shape.parts and shape.parts[0] > p.n):
        raise InvalidEncodingError("shape does not fit inside the grid")
    return ShapedBpd(
        shape,
        tuple(
            tuple(p.tile(i, j) for j in range(1, shape.part(i) + 1))
            for i in range(1, shape.rows + 1)
        ),
    )


def complete(q: ShapedBpd) -> Bpd:
    """Smallest square grid restricting to the tiling, with all blanks and
    upward elbows inside the shape.

    Rows lacking an east-bound pipe receive a new hook: scanning top to
    bottom, the hook's elbow lands in the first column not already carrying
    a pipe southward.
    """
    lam = q.shape
    if lam.rows == 0:
        return Bpd.from_elbows(1, [(1, 1)], [])
    size = lam.rows + lam.parts[0]
    vert_from_row = {}
    for j in range(1, lam.parts[0] + 1):
        h = lam.col_height(j)
        if "S" in q.tile(h, j).edges:
            vert_from_row[j] = h + 1
    hooks = []
    for i in range(1, size + 1):
        if i <= lam.rows and "E" in q.tile(i, lam.part(i)).edges:
            continue
        j = lam.part(i) + 1
        while vert_from_row.get(j, size + 1) <= i:
            j += 1
        hooks.append((i, j))
        vert_from_row[j] = i
    se = q.cells_of(Tile.ELBOW_SE) | set(hooks)
    nw = q.elbows_nw()
    grid = Bpd.from_elbows(size, se, nw)
    while grid.n > max(lam.rows, lam.parts[0], 1) and (
        grid.tile(grid.n, grid.n) is Tile.ELBOW_SE
    ):
        m = grid.n
        grid = Bpd.from_elbows(
            m - 1,
            [c for c in grid.elbows_se() if c != (m, m)],
            grid.elbows_nw(),
        )
    return grid


def enumerate_bpd(n: int, limit: int | None = None) -> list[Bpd]:
    """All grids of size n, via the matrix bijection (not by tiling search)."""
    return [phi(a) for a in asm_mod.enumerate_asm(n, limit)]


def enumerate_shaped(shape: Partition) -> list[ShapedBpd]:
    """All tilings of a Young diagram, by cell-by-cell backtracking."""
    lam = shape
    cells = list(lam.cells())
    out: list[ShapedBpd] = []
    grid: dict[Cell, Tile] = {}

    def fill(idx: int) -> None:
        if idx == len(cells):
            out.append(
                ShapedBpd(
                    lam,
                    tuple(
                        tuple(grid[(i, j)] for j in range(1, lam.part(i) + 1))
                        for i in range(1, lam.rows + 1)
                    ),
                )
            )
            return
        i, j = cells[idx]
        west = "E" in grid[(i, j - 1)].edges if j > 1 else False
        north = "S" in grid[(i - 1, j)].edges if i > 1 else False
        options = {
            (False, False): (Tile.BLANK, Tile.ELBOW_SE),
            (True, False): (Tile.HORIZONTAL,),
            (False, True): (Tile.VERTICAL,),
            (True, True): (Tile.CROSS, Tile.ELBOW_NW),
        }[(west, north)]
        for t in options:
            grid[(i, j)] = t
            fill(idx + 1)
        del grid[(i, j)]

    fill(0)
    return out
