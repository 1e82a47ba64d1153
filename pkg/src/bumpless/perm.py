"""Permutations of {1..n} in one-line notation, plus word algebra.

Conventions used throughout the package:

- Permutations are 1-indexed: ``w(i)`` is the entry in position ``i``.
- Grid cells are ``(row, col)`` with ``(1, 1)`` in the northwest corner.
- Composition is ``(u * v)(k) = u(v(k))``, so ``w * simple(n, i)`` swaps the
  entries of ``w`` in positions ``i`` and ``i + 1``.
- Ambient sizes never change silently; use :meth:`Permutation.embed`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Permutation",
    "identity",
    "longest",
    "simple",
    "transposition",
    "cycle_on_rows",
    "from_code",
    "all_permutations",
    "demazure_product",
    "permutation_product",
    "is_reduced_word",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} stored in one-line notation.

    >>> w = Permutation((2, 1, 4, 3))
    >>> w(1), w(3)
    (2, 4)
    >>> w.length()
    2
    >>> sorted(w.rothe_diagram())
    [(1, 1), (3, 3)]
    """

    oneline: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.oneline)
        if sorted(self.oneline) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.oneline}")

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.oneline)
        return ",".join(str(v) for v in self.oneline)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.oneline):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.oneline[v - 1] for v in other.oneline))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.oneline))

    def length(self) -> int:
        """Coxeter length, i.e. the number of inversions."""
        w = self.oneline
        return sum(
            1
            for i in range(len(w))
            for j in range(i + 1, len(w))
            if w[i] > w[j]
        )

    def descents(self) -> set[int]:
        w = self.oneline
        return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}

    def max_descent(self) -> int:
        """Largest descent position; 0 exactly for the identity."""
        w = self.oneline
        for i in range(len(w) - 1, 0, -1):
            if w[i - 1] > w[i]:
                return i
        return 0

    def rothe_diagram(self) -> frozenset[tuple[int, int]]:
        """Cells (i, j) with w(i) > j and w^{-1}(j) > i."""
        w = self.oneline
        inv = self.inverse().oneline
        return frozenset(
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if w[i - 1] > j and inv[j - 1] > i
        )

    def lehmer_code(self) -> tuple[int, ...]:
        """code(i) = number of j > i with w(j) < w(i).

        >>> Permutation((2, 1, 4, 3)).lehmer_code()
        (1, 0, 1, 0)
        """
        w = self.oneline
        return tuple(
            sum(1 for j in range(i + 1, len(w)) if w[j] < w[i])
            for i in range(len(w))
        )

    def embed(self, n: int) -> "Permutation":
        """Append fixed points to live in S_n (explicit, never implicit)."""
        if n < self.n:
            raise ValueError(f"cannot embed S_{self.n} into S_{n}")
        return Permutation(self.oneline + tuple(range(self.n + 1, n + 1)))

    def times_simple(self, i: int) -> "Permutation":
        """w * s_i: swap the entries in positions i and i+1."""
        if not 1 <= i < self.n:
            raise ValueError(f"simple reflection index {i} out of range")
        w = list(self.oneline)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def contains_pattern(self, pattern: Iterable[int]) -> bool:
        """Exhaustive scan for a subsequence in the same relative order."""
        pat = tuple(pattern)
        k = len(pat)
        if sorted(pat) != list(range(1, k + 1)):
            raise ValueError(f"not a pattern: {pat}")
        for sub in itertools.combinations(self.oneline, k):
            ranks = tuple(sorted(sub).index(v) for v in sub)
            if ranks == tuple(pat[i] - 1 for i in range(k)):
                return True
        return False

    def avoids_pattern(self, pattern: Iterable[int]) -> bool:
        return not self.contains_pattern(pattern)

    def is_vexillary(self) -> bool:
        """True iff the permutation avoids 2143."""
        return self.avoids_pattern((2, 1, 4, 3))

    def is_dominant(self) -> bool:
        """True iff the permutation avoids 132."""
        return self.avoids_pattern((1, 3, 2))

    def to_json(self) -> list[int]:
        return list(self.oneline)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def simple(n: int, i: int) -> Permutation:
    """The adjacent transposition s_i in S_n."""
    return transposition(n, i, i + 1)


def transposition(n: int, i: int, j: int) -> Permutation:
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise ValueError(f"bad transposition ({i} {j}) in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return Permutation(tuple(w))


def cycle_on_rows(n: int, a: int, rows: Iterable[int]) -> Permutation:
    """The cycle (a i_k ... i_1) for rows = {i_1 < ... < i_k}, all < a.

    Maps a -> i_k, i_l -> i_{l-1}, and i_1 -> a; empty rows give the identity.
    """
    rs = sorted(set(rows))
    if not rs:
        return identity(n)
    if rs[-1] >= a or rs[0] < 1 or a > n:
        raise ValueError(f"rows {rs} not contained in [1, {a - 1}]")
    w = list(range(1, n + 1))
    cyc = [a] + rs[::-1]
    for src, dst in zip(cyc, cyc[1:] + cyc[:1]):
        w[src - 1] = dst
    return Permutation(tuple(w))


def from_code(code: Iterable[int]) -> Permutation:
    """Inverse of :meth:`Permutation.lehmer_code`.

    >>> from_code((1, 0, 1, 0)).oneline
    (2, 1, 4, 3)
    """
    c = tuple(code)
    n = len(c)
    available = list(range(1, n + 1))
    out = []
    for i, ci in enumerate(c):
        if not 0 <= ci <= n - i - 1:
            raise ValueError(f"code entry {ci} out of range at position {i + 1}")
        out.append(available.pop(ci))
    return Permutation(tuple(out))


def all_permutations(n: int) -> Iterator[Permutation]:
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def permutation_product(word: Iterable[int], n: int) -> Permutation:
    """Plain product s_{a_1} ... s_{a_k}."""
    w = identity(n)
    for a in word:
        w = w.times_simple(a)
    return w


def demazure_product(word: Iterable[int], n: int) -> Permutation:
    """Product of a word in the 0-Hecke monoid, where a letter that would
    shorten the permutation is absorbed instead.

    >>> demazure_product((1, 1), 2).oneline
    (2, 1)
    >>> str(demazure_product((1, 3, 4, 6, 2, 3, 5, 1, 2, 4, 2, 1), 7))
    '5427136'
    """
    w = list(range(1, n + 1))
    for a in word:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter {a} out of range for S_{n}")
        if w[a - 1] < w[a]:
            w[a - 1], w[a] = w[a], w[a - 1]
    return Permutation(tuple(w))


def is_reduced_word(word: Iterable[int], n: int) -> bool:
    letters = tuple(word)
    return permutation_product(letters, n).length() == len(letters)
