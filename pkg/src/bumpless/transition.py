"""Transition machinery for Grothendieck polynomials.

For a non-identity permutation w, the maximal corner is the rightmost cell
(a, b) in the last row of its Rothe diagram, where a is the last descent.
Writing b' = w^{-1}(b) and phi(w) for the rows of the strict pivots of the
maximal corner, each subset I of phi(w) yields

    w_I = w * t_{a,b'} * (a i_k ... i_1),    I = {i_1 < ... < i_k},

with length(w_I) = length(w) + |I| - 1.  The expansion

    G_w = (x_a (+) y_b) G_{w_empty}
        + (1 + beta (x_a (+) y_b)) * sum_{I nonempty} beta^{|I|-1} G_{w_I}

drives a recursion whose maximal corners strictly decrease in lexicographic
order, giving a second independent construction of the polynomials.  The
same data acts on pipe-dream grids through the corner map ``t_map``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .bpd import Bpd, Tile
from .errors import InternalError, MoveError, SizeLimitError
from .perm import Permutation, cycle_on_rows, transposition
from .poly import DEFAULT_MAX_N, Polynomial, beta, oplus

__all__ = [
    "TransitionData",
    "max_corner",
    "transition_data",
    "w_I",
    "transition_expand",
    "grothendieck_transition",
    "t_map",
]


class IdentityHasNoCorner(MoveError):
    """The identity permutation has an empty diagram and no maximal corner."""


def max_corner(w: Permutation) -> tuple[int, int]:
    """Rightmost diagram cell in the last diagram row."""
    a = w.max_descent()
    if a == 0:
        raise IdentityHasNoCorner("the identity has no maximal corner")
    b = max(j for i, j in w.rothe_diagram() if i == a)
    return (a, b)


@dataclass(frozen=True)
class TransitionData:
    w: Permutation
    a: int
    b: int
    b_prime: int
    pivot_rows: tuple[int, ...]


def transition_data(w: Permutation) -> TransitionData:
    a, b = max_corner(w)
    inv = w.inverse()
    rows = []
    for i in range(1, a):
        j = w(i)
        if j >= b:
            continue
        clean = all(
            not (i < p < a and j < w(p) < b) for p in range(i + 1, a)
        )
        if clean:
            rows.append(i)
    return TransitionData(w, a, b, inv(b), tuple(rows))


def w_I(data: TransitionData, rows) -> Permutation:
    """The permutation w * t_{a,b'} * c for the chosen pivot rows."""
    chosen = tuple(sorted(set(rows)))
    if not set(chosen) <= set(data.pivot_rows):
        raise MoveError(f"rows {chosen} are not pivot rows of {data.w}")
    n = data.w.n
    out = data.w * transposition(n, data.a, data.b_prime)
    return out * cycle_on_rows(n, data.a, chosen)


def _subsets(rows: tuple[int, ...]):
    for mask in range(1 << len(rows)):
        yield tuple(rows[i] for i in range(len(rows)) if mask >> i & 1)


def transition_expand(
    w: Permutation,
) -> list[tuple[Polynomial, Permutation]]:
    """All 2^{|phi(w)|} summands of the corner expansion, the empty subset
    first, the rest ordered by (size, rows)."""
    data = transition_data(w)
    corner = oplus(data.a, data.b)
    out = [(corner, w_I(data, ()))]
    marked = Polynomial.one() + beta() * corner
    for rows in sorted(_subsets(data.pivot_rows), key=lambda s: (len(s), s)):
        if not rows:
            continue
        coeff = marked * Polynomial.monomial(1, beta_exp=len(rows) - 1)
        out.append((coeff, w_I(data, rows)))
    return out


_TR_CACHE: dict[tuple[int, ...], Polynomial] = {}
_TR_LOCK = threading.Lock()


def grothendieck_transition(
    w: Permutation, max_n: int | None = None
) -> Polynomial:
    """Evaluate the corner recursion down to the identity."""
    limit = DEFAULT_MAX_N if max_n is None else max_n
    if w.n > limit:
        raise SizeLimitError(
            f"refusing transition recursion in S_{w.n} (limit {limit})"
        )
    return _transition(w, None)


def _transition(
    w: Permutation, parent_corner: tuple[int, int] | None
) -> Polynomial:
    if w.is_identity():
        return Polynomial.one()
    cached = _TR_CACHE.get(w.oneline)
    if cached is not None:
        return cached
    corner = max_corner(w)
    if parent_corner is not None and corner >= parent_corner:
        raise InternalError(
            f"maximal corner failed to decrease: {corner} after {parent_corner}"
        )
    total = Polynomial.zero()
    for coeff, v in transition_expand(w):
        total = total + coeff * _transition(v, corner)
    with _TR_LOCK:
        _TR_CACHE.setdefault(w.oneline, total)
    return total


def t_map(p: Bpd) -> Bpd:
    """The corner map on grids with non-identity 0-Hecke product.

    Inside the rectangle from the maximal corner (a, b) to (w^{-1}(b), w(a)),
    the two hook elbows trade places with the corner: a blank corner absorbs
    one hook (dropping the length by one), an upward-elbow corner turns into
    a crossing.  Everything outside the rectangle corners is untouched.
    """
    w = p.demazure()
    if w.is_identity():
        raise MoveError("the identity grid has no corner to act on")
    a, b = max_corner(w)
    r2, c2 = w.inverse()(b), w(a)
    corner = p.tile(a, b)
    if corner not in (Tile.BLANK, Tile.ELBOW_NW):
        raise MoveError(
            f"corner {(a, b)} holds {corner.name}; grid disagrees with its product"
        )
    se = set(p.elbows_se())
    nw = set(p.elbows_nw())
    if (r2, b) not in se or (a, c2) not in se:
        raise InternalError("hook elbows missing outside the mutable region")
    se.difference_update([(r2, b), (a, c2)])
    se.add((r2, c2))
    if corner is Tile.BLANK:
        se.add((a, b))
    else:
        nw.remove((a, b))
    return Bpd.from_elbows(p.n, se, nw)
