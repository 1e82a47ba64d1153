"""Exact sparse polynomials over Z in beta, x_1, x_2, ..., y_1, y_2, ...

A term is keyed by ``(beta_exp, x_exps, y_exps)`` where the exponent tuples
are trimmed of trailing zeros, so every polynomial has one canonical form.
Coefficients are Python ints, hence exact at any size.  There is no floating
point anywhere in this package.

This module also provides the deformed sum ``x (+) y = x + y + beta*x*y``,
the isobaric divided-difference operators ``pi_i``, and the resulting
divided-difference construction of beta-double Grothendieck and double
Schubert polynomials, which serves as the reference oracle for every other
formula in the package.
"""

from __future__ import annotations

import threading
from typing import Iterable, Mapping, Union

from .errors import InternalError, SizeLimitError
from .perm import Permutation, longest

__all__ = [
    "Polynomial",
    "beta",
    "x",
    "y",
    "oplus",
    "pi",
    "specialize",
    "divide_beta_power",
    "grothendieck_dd",
    "schubert_dd",
    "DEFAULT_MAX_N",
]

# Largest symmetric group for which divided-difference chains are attempted
# by default; |S_8| polynomials are the practical desk limit.
DEFAULT_MAX_N = 8

TermKey = tuple[int, tuple[int, ...], tuple[int, ...]]
Scalar = Union[int, "Polynomial"]


def _trim(exps: tuple[int, ...]) -> tuple[int, ...]:
    k = len(exps)
    while k and exps[k - 1] == 0:
        k -= 1
    return exps[:k]


class Polynomial:
    """Immutable sparse polynomial in Z[beta][x; y]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[TermKey, int] | None = None):
        canon: dict[TermKey, int] = {}
        if terms:
            for (b, xs, ys), c in terms.items():
                if c == 0:
                    continue
                key = (b, _trim(tuple(xs)), _trim(tuple(ys)))
                c0 = canon.get(key, 0) + c
                if c0:
                    canon[key] = c0
                else:
                    canon.pop(key, None)
        self._terms = canon
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({(0, (), ()): 1})

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls({(0, (), ()): c})

    @classmethod
    def monomial(
        cls,
        coeff: int,
        beta_exp: int = 0,
        x_exps: Iterable[int] = (),
        y_exps: Iterable[int] = (),
    ) -> "Polynomial":
        return cls({(beta_exp, tuple(x_exps), tuple(y_exps)): coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def nvars_x(self) -> int:
        return max((len(xs) for (_, xs, _) in self._terms), default=0)

    @property
    def nvars_y(self) -> int:
        return max((len(ys) for (_, _, ys) in self._terms), default=0)

    def constant_term(self) -> int:
        return self._terms.get((0, (), ()), 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = dict(self._terms)
        for key, c in other._terms.items():
            c0 = acc.get(key, 0) + c
            if c0:
                acc[key] = c0
            else:
                acc.pop(key, None)
        out = Polynomial.__new__(Polynomial)
        out._terms = acc
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out._terms = {k: -c for k, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.const(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero()
            out = Polynomial.__new__(Polynomial)
            out._terms = {k: c * other for k, c in self._terms.items()}
            out._hash = None
            return out
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc: dict[TermKey, int] = {}
        for (b1, xs1, ys1), c1 in self._terms.items():
            for (b2, xs2, ys2), c2 in other._terms.items():
                key = (b1 + b2, _add_exps(xs1, xs2), _add_exps(ys1, ys2))
                c0 = acc.get(key, 0) + c1 * c2
                if c0:
                    acc[key] = c0
                else:
                    acc.pop(key, None)
        out = Polynomial.__new__(Polynomial)
        out._terms = acc
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        result = Polynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- symmetric group action and substitution ----------------------------

    def swap_x(self, i: int) -> "Polynomial":
        """Exchange x_i and x_{i+1} (the action of s_i on coefficients)."""
        acc: dict[TermKey, int] = {}
        for (b, xs, ys), c in self._terms.items():
            lst = list(xs) + [0] * max(0, i + 1 - len(xs))
            lst[i - 1], lst[i] = lst[i], lst[i - 1]
            key = (b, _trim(tuple(lst)), ys)
            acc[key] = acc.get(key, 0) + c
        return Polynomial(acc)

    def substitute(
        self,
        beta_value: Scalar | None = None,
        x_values: Mapping[int, Scalar] | None = None,
        y_values: Mapping[int, Scalar] | None = None,
    ) -> "Polynomial":
        """Exact substitution followed by renormalisation.

        Unassigned variables survive; assigned ones may map to ints or
        polynomials.
        """
        x_values = x_values or {}
        y_values = y_values or {}
        total = Polynomial.zero()
        for (b, xs, ys), c in self._terms.items():
            kept_x = tuple(
                e if (idx + 1) not in x_values else 0
                for idx, e in enumerate(xs)
            )
            kept_y = tuple(
                e if (idx + 1) not in y_values else 0
                for idx, e in enumerate(ys)
            )
            kept_b = 0 if beta_value is not None else b
            part = Polynomial.monomial(c, kept_b, kept_x, kept_y)
            if beta_value is not None and b:
                part = part * _as_poly(beta_value) ** b
            for idx, e in enumerate(xs):
                if e and (idx + 1) in x_values:
                    part = part * _as_poly(x_values[idx + 1]) ** e
            for idx, e in enumerate(ys):
                if e and (idx + 1) in y_values:
                    part = part * _as_poly(y_values[idx + 1]) ** e
            total = total + part
        return total

    # -- canonical form, printing, serialization ----------------------------

    def sorted_terms(self) -> list[tuple[TermKey, int]]:
        """Terms in graded-lexicographic order on (beta, x, y), largest first."""

        def grade(item: tuple[TermKey, int]):
            (b, xs, ys), _ = item
            return (b + sum(xs) + sum(ys), b, xs, ys)

        return sorted(self._terms.items(), key=grade, reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for (b, xs, ys), c in self.sorted_terms():
            factors = []
            for idx, e in enumerate(xs):
                if e:
                    factors.append(f"x{idx + 1}" + (f"^{e}" if e > 1 else ""))
            for idx, e in enumerate(ys):
                if e:
                    factors.append(f"y{idx + 1}" + (f"^{e}" if e > 1 else ""))
            if b:
                factors.append("β" + (f"^{b}" if b > 1 else ""))
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not chunks:
                chunks.append(text if c > 0 else f"-{text}")
            else:
                chunks.append(f"+ {text}" if c > 0 else f"- {text}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": c, "beta": b, "x": list(xs), "y": list(ys)}
            for (b, xs, ys), c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "Polynomial":
        acc: dict[TermKey, int] = {}
        for item in data:
            key = (
                int(item.get("beta", 0)),
                tuple(int(e) for e in item.get("x", ())),
                tuple(int(e) for e in item.get("y", ())),
            )
            acc[key] = acc.get(key, 0) + int(item["coeff"])
        return cls(acc)


def _add_exps(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    return tuple(ai + bi for ai, bi in zip(a, b)) + a[len(b):]


def _as_poly(v: Scalar) -> Polynomial:
    return Polynomial.const(v) if isinstance(v, int) else v


def beta() -> Polynomial:
    return Polynomial.monomial(1, beta_exp=1)


def x(i: int) -> Polynomial:
    if i < 1:
        raise ValueError("variable indices start at 1")
    return Polynomial.monomial(1, x_exps=(0,) * (i - 1) + (1,))


def y(j: int) -> Polynomial:
    if j < 1:
        raise ValueError("variable indices start at 1")
    return Polynomial.monomial(1, y_exps=(0,) * (j - 1) + (1,))


def oplus(i: int, j: int) -> Polynomial:
    """The deformed sum x_i + y_j + beta * x_i * y_j."""
    return x(i) + y(j) + beta() * x(i) * y(j)


def pi(i: int, f: Polynomial) -> Polynomial:
    """The isobaric operator ((1 + beta*x_{i+1})f - (1 + beta*x_i) s_i.f)
    divided exactly by (x_i - x_{i+1}).

    The numerator always vanishes under x_i -> x_{i+1}; a nonzero remainder
    indicates a bug and raises :class:`InternalError`.
    """
    if i < 1:
        raise ValueError("operator index must be at least 1")
    sf = f.swap_x(i)
    num = (Polynomial.one() + beta() * x(i + 1)) * f
    num = num - (Polynomial.one() + beta() * x(i)) * sf
    return _divide_by_x_difference(num, i)


def _divide_by_x_difference(num: Polynomial, i: int) -> Polynomial:
    """Exact division by (x_i - x_{i+1}) via synthetic division in x_i."""
    # Remainder is the substitution x_i -> x_{i+1}; it must cancel to zero.
    rem: dict[TermKey, int] = {}
    for (b, xs, ys), c in num._terms.items():
        lst = list(xs) + [0] * max(0, i + 1 - len(xs))
        k = lst[i - 1]
        lst[i] += k
        lst[i - 1] = 0
        key = (b, _trim(tuple(lst)), ys)
        c0 = rem.get(key, 0) + c
        if c0:
            rem[key] = c0
        else:
            rem.pop(key, None)
    if rem:
        raise InternalError(
            f"division by x{i} - x{i + 1} left a nonzero remainder"
        )
    quot: dict[TermKey, int] = {}
    for (b, xs, ys), c in num._terms.items():
        lst = list(xs) + [0] * max(0, i + 1 - len(xs))
        k = lst[i - 1]
        if k == 0:
            continue
        # x_i^k = (x_i - x_{i+1}) * sum_t x_i^{k-1-t} x_{i+1}^t  + x_{i+1}^k
        for t in range(k):
            lst2 = list(lst)
            lst2[i - 1] = k - 1 - t
            lst2[i] += t
            key = (b, _trim(tuple(lst2)), ys)
            c0 = quot.get(key, 0) + c
            if c0:
                quot[key] = c0
            else:
                quot.pop(key, None)
    out = Polynomial.__new__(Polynomial)
    out._terms = quot
    out._hash = None
    return out


def specialize(
    f: Polynomial,
    beta_value: Scalar | None = None,
    x_values: Mapping[int, Scalar] | None = None,
    y_values: Mapping[int, Scalar] | None = None,
) -> Polynomial:
    return f.substitute(beta_value, x_values, y_values)


def divide_beta_power(f: Polynomial, k: int) -> Polynomial:
    """Divide by beta^k, requiring exact divisibility term by term."""
    acc: dict[TermKey, int] = {}
    for (b, xs, ys), c in f._terms.items():
        if b < k:
            raise InternalError(f"term not divisible by beta^{k}")
        acc[(b - k, xs, ys)] = c
    return Polynomial(acc)


# The divided-difference lattice is memoised per ambient size, keyed by
# one-line notation.  Concurrent readers are safe; writers are serialized.
_DD_CACHE: dict[tuple[int, ...], Polynomial] = {}
_DD_LOCK = threading.Lock()


def grothendieck_dd(w: Permutation, max_n: int | None = None) -> Polynomial:
    """Beta-double Grothendieck polynomial via divided differences.

    Seeded at the longest permutation by the product of x_i (+) y_j over
    cells with i + j <= n, then pushed down one ascent at a time; the result
    is independent of the chosen path.
    """
    limit = DEFAULT_MAX_N if max_n is None else max_n
    if w.n > limit:
        raise SizeLimitError(
            f"refusing divided differences in S_{w.n} (limit {limit})"
        )
    return _dd(w)


def _dd(w: Permutation) -> Polynomial:
    cached = _DD_CACHE.get(w.oneline)
    if cached is not None:
        return cached
    n = w.n
    if w == longest(n):
        result = Polynomial.one()
        for i in range(1, n):
            for j in range(1, n - i + 1):
                result = result * oplus(i, j)
    else:
        i = next(
            k for k in range(1, n) if w.oneline[k - 1] < w.oneline[k]
        )
        result = pi(i, _dd(w.times_simple(i)))
    with _DD_LOCK:
        _DD_CACHE.setdefault(w.oneline, result)
    return result


def schubert_dd(w: Permutation, max_n: int | None = None) -> Polynomial:
    """Double Schubert polynomial: beta -> 0 and y_j -> -y_j."""
    g = grothendieck_dd(w, max_n)
    subs = {j: -y(j) for j in range(1, g.nvars_y + 1)}
    return g.substitute(beta_value=0, y_values=subs)
