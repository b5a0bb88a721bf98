"""
The affine symmetric group in window notation.

An element of the affine symmetric group on rank `n` is a bijection `w` of the
integers with `w(i + n) == w(i) + n` whose window `(w(1), ..., w(n))` sums to
`n(n+1)/2`.  Values are immutable and hashable, so they can be used as set
members and dictionary keys.

>>> w = from_window(4, [8, 7, -2, -3])
>>> w(1), w(5), length(w)
(8, 12, 14)
>>> sorted(right_descents(w))
[1, 2, 3]
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "AffinePermutation", "InvalidWindowError", "RankMismatchError", "ResourceBoundError",
    "from_window", "identity", "simple", "reflection", "apply", "compose",
    "inverse", "length", "right_descents", "left_descents", "times_simple",
    "simple_times", "bruhat_leq", "bruhat_covers_up", "demazure",
    "reduced_word", "from_word", "star", "max_displacement",
    "elements_by_length", "to_record", "from_record", "dumps", "loads",
]


class InvalidWindowError(ValueError):
    """Raised when a sequence of integers is not a valid window."""


class RankMismatchError(ValueError):
    """Raised when an operation mixes permutations of different rank."""


class ResourceBoundError(RuntimeError):
    """Raised when a search would exceed an explicit size bound."""


@dataclass(frozen=True)
class AffinePermutation:
    """An element of the affine symmetric group, stored by its window."""
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        n, win = self.n, self.window
        if n < 1 or len(win) != n:
            raise InvalidWindowError(f"window {win} does not have length n={n}")
        if len({a % n for a in win}) != n:
            raise InvalidWindowError(f"window {win} repeats a residue mod {n}")
        if sum(win) != n * (n + 1) // 2:
            raise InvalidWindowError(f"window {win} does not sum to {n * (n + 1) // 2}")

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        return compose(self, other)

    def __repr__(self) -> str:
        return f"[{', '.join(map(str, self.window))}]"

    @cached_property
    def length(self) -> int:
        return _length(self.n, self.window)

    @cached_property
    def inverse(self) -> AffinePermutation:
        n = self.n
        out = [0] * n
        for i, v in enumerate(self.window, start=1):
            q, r = divmod(v - 1, n)
            out[r] = i - q * n
        return AffinePermutation(n, tuple(out))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.window, start=1))


def _check_rank(u: AffinePermutation, v: AffinePermutation) -> None:
    if u.n != v.n:
        raise RankMismatchError(f"rank {u.n} does not match rank {v.n}")


def _from_values(n: int, values: dict[int, int]) -> AffinePermutation:
    """Build a permutation from images at one position per residue class."""
    out = [0] * n
    for p, v in values.items():
        q, r = divmod(p - 1, n)
        out[r] = v - q * n
    return AffinePermutation(n, tuple(out))


def from_window(n: int, values: Sequence[int]) -> AffinePermutation:
    """
    Read a (possibly extended) window `[a_1, ..., a_N]`.

    Only the first representative of each residue class is kept, which gives
    `n` values `a_1, ..., a_n`; the result is the unique `w` with
    `w(m + i) == a_i` where `m = sum(a_i - i) / n`.

    >>> from_window(3, [1, 0, 1, 3, 8, 4, 2])
    [5, 1, 0]
    """
    if n < 1:
        raise InvalidWindowError("rank must be positive")
    seen: set[int] = set()
    firsts: list[int] = []
    for a in values:
        if a % n not in seen:
            seen.add(a % n)
            firsts.append(a)
    if len(firsts) != n:
        raise InvalidWindowError(f"{list(values)} misses a residue class mod {n}")
    shift = sum(a - i for i, a in enumerate(firsts, start=1))
    m, rem = divmod(shift, n)
    assert rem == 0
    return _from_values(n, {m + i: a for i, a in enumerate(firsts, start=1)})


@lru_cache(maxsize=None)
def identity(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(1, n + 1)))


def simple(n: int, i: int) -> AffinePermutation:
    """The simple generator s_i, with indices read mod n."""
    if n < 2:
        raise ValueError("S~_1 has no simple generators")
    return reflection(n, i, i + 1)


def reflection(n: int, i: int, j: int) -> AffinePermutation:
    """The reflection t_ij exchanging i + mn and j + mn; t_ii is the identity."""
    if i == j:
        return identity(n)
    if (i - j) % n == 0:
        raise ValueError(f"t_({i},{j}) is not defined for n={n}")
    if i > j:
        i, j = j, i
    return _from_values(n, {i: j, j: i} | {
        p: p for p in range(1, n + 1) if (p - i) % n and (p - j) % n})


def apply(w: AffinePermutation, i: int) -> int:
    return w(i)


def compose(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    """The product u v, acting as i -> u(v(i))."""
    _check_rank(u, v)
    return AffinePermutation(u.n, tuple(u(a) for a in v.window))


def inverse(w: AffinePermutation) -> AffinePermutation:
    return w.inverse


def _length(n: int, win: tuple[int, ...]) -> int:
    # For i in [n] and residue r, count k with r + kn > i and win[r] + kn < win[i].
    total = 0
    for i, wi in enumerate(win, start=1):
        for r, wr in enumerate(win, start=1):
            kmin = (i - r) // n + 1
            kmax = -((wr - wi) // n) - 1  # ceil((wi - wr) / n) - 1
            if kmax >= kmin:
                total += kmax - kmin + 1
    return total


def length(w: AffinePermutation) -> int:
    """Number of inversion classes: pairs i in [n], j > i with w(i) > w(j)."""
    return w.length


def right_descents(w: AffinePermutation) -> set[int]:
    return {i for i in range(1, w.n + 1) if w(i) > w(i + 1)}


def left_descents(w: AffinePermutation) -> set[int]:
    return right_descents(w.inverse)


def times_simple(w: AffinePermutation, i: int) -> AffinePermutation:
    """The product w s_i (swap the images of i and i+1)."""
    n = w.n
    i = (i - 1) % n + 1
    return _from_values(n, {p: w(p) for p in range(1, n + 1)} | {i: w(i + 1), i + 1: w(i)})


def simple_times(i: int, w: AffinePermutation) -> AffinePermutation:
    """The product s_i w (swap the values i and i+1)."""
    n = w.n

    def s(v: int) -> int:
        r = (v - i) % n
        return v + 1 if r == 0 else v - 1 if r == 1 else v
    return AffinePermutation(n, tuple(s(v) for v in w.window))


def bruhat_leq(u: AffinePermutation, v: AffinePermutation) -> bool:
    """Bruhat order by the descent recursion (lifting property)."""
    _check_rank(u, v)
    while True:
        if u.length > v.length:
            return False
        if u == v:
            return True
        if v.length == 0:
            return False
        s = min(right_descents(v))
        us = times_simple(u, s)
        if us.length < u.length:
            u = us
        v = times_simple(v, s)


def max_displacement(w: AffinePermutation) -> int:
    return max(abs(v - i) for i, v in enumerate(w.window, start=1))


def bruhat_covers_up(u: AffinePermutation) -> set[AffinePermutation]:
    """All u t_ij with length one more than u."""
    n = u.n
    if n == 1:
        return set()
    # a cover needs u(i) < u(j) < u(i) + n, so j - i < n + 2 * displacement
    reach = max(n * (u.length + 2), n + 2 * max_displacement(u))
    out = set()
    for i in range(1, n + 1):
        for j in range(i + 1, i + reach + 1):
            if (j - i) % n == 0 or u(j) < u(i):
                continue
            if all(not u(i) < u(e) < u(j) for e in range(i + 1, j)):
                out.add(compose(u, reflection(n, i, j)))
    return out


def reduced_word(w: AffinePermutation) -> tuple[int, ...]:
    """A reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}."""
    word: list[int] = []
    while w.length:
        i = min(right_descents(w))
        word.append(i)
        w = times_simple(w, i)
    return tuple(reversed(word))


def from_word(n: int, word: Iterable[int]) -> AffinePermutation:
    w = identity(n)
    for i in word:
        w = times_simple(w, i)
    return w


def demazure(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    """The 0-Hecke product: absorb each generator of v that would shorten u."""
    _check_rank(u, v)
    for i in reduced_word(v):
        us = times_simple(u, i)
        if us.length > u.length:
            u = us
    return u


def star(w: AffinePermutation) -> AffinePermutation:
    """Conjugation by i -> n + 1 - i; sends s_i to s_{n-i}."""
    n = w.n
    return AffinePermutation(n, tuple(n + 1 - w(n + 1 - i) for i in range(1, n + 1)))


@lru_cache(maxsize=None)
def _layers(n: int, max_length: int) -> tuple[frozenset[AffinePermutation], ...]:
    if max_length == 0:
        return (frozenset([identity(n)]),)
    prev = _layers(n, max_length - 1)
    nxt = {times_simple(w, i) for w in prev[-1] for i in range(1, n + 1)}
    return prev + (frozenset(x for x in nxt if x.length == max_length),)


def elements_by_length(n: int, max_length: int) -> Iterator[tuple[int, frozenset[AffinePermutation]]]:
    """Yield (L, all elements of length L) for L = 0..max_length, by BFS."""
    if n == 1:
        yield 0, frozenset([identity(1)])
        return
    for L in range(max_length + 1):
        yield L, _layers(n, L)[-1]


def to_record(w: AffinePermutation) -> dict:
    return {"n": w.n, "window": list(w.window)}


def from_record(rec: dict) -> AffinePermutation:
    if "t" in rec:
        return reflection(rec["n"], *rec["t"])
    return AffinePermutation(rec["n"], tuple(rec["window"]))


def dumps(perms: Iterable[AffinePermutation]) -> str:
    return "".join(json.dumps(to_record(w)) + "\n" for w in perms)


def loads(text: str) -> list[AffinePermutation]:
    return [from_record(json.loads(line)) for line in text.splitlines() if line.strip()]
