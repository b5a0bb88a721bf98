"""
Affine involutions: cycles, absolute length, Demazure conjugation,
enumeration, winding data and affine standardisation.

Involutions are plain `AffinePermutation` values that square to the
identity; `involution_from_cycles` and `check_involution` validate that.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from functools import lru_cache
from typing import Iterable, Iterator, Literal, NamedTuple

from .affine_core import (
    AffinePermutation, identity, right_descents, simple_times,
    times_simple, _from_values,
)

__all__ = [
    "NotAnInvolutionError", "check_involution", "is_involution",
    "involution_from_cycles", "canonical_cycles", "canonical_pair",
    "absolute_length", "hat_length", "endpoint_kind", "demazure_conjugate",
    "enumerate_involutions", "involutions_by_hat", "standardize",
    "is_321_avoiding", "is_fully_commutative", "WindingEdge",
    "winding_edges", "to_cycle_record", "from_cycle_record",
]


class NotAnInvolutionError(ValueError):
    """Raised when a permutation expected to be an involution is not one."""


def is_involution(w: AffinePermutation) -> bool:
    return all(w(v) == i for i, v in enumerate(w.window, start=1))


def check_involution(w: AffinePermutation) -> AffinePermutation:
    if not is_involution(w):
        raise NotAnInvolutionError(f"{w} is not an involution")
    return w


def canonical_pair(n: int, a: int, b: int) -> tuple[int, int]:
    """Translate the pair (a, b) by a multiple of n so that a lies in [n]."""
    k = (a - 1) // n
    return a - k * n, b - k * n


def involution_from_cycles(n: int, cycles: Iterable[tuple[int, int]]) -> AffinePermutation:
    """The involution with the given 2-cycles (and their translates)."""
    images: dict[int, int] = {}
    for a, b in cycles:
        a, b = canonical_pair(n, min(a, b), max(a, b))
        if (b - a) % n == 0:
            raise NotAnInvolutionError(f"cycle ({a},{b}) joins a residue class to itself")
        for p, v in ((a, b), canonical_pair(n, b, a)):
            r = (p - 1) % n + 1
            if r in images:
                raise NotAnInvolutionError(f"cycles overlap at residue {r}")
            images[r] = v - (p - r)
    for r in range(1, n + 1):
        images.setdefault(r, r)
    return check_involution(_from_values(n, images))


def canonical_cycles(z: AffinePermutation) -> tuple[tuple[int, int], ...]:
    """The pairs (a, z(a)) with a in [n] and a < z(a), sorted."""
    return tuple((a, b) for a, b in enumerate(z.window, start=1) if a < b)


def absolute_length(z: AffinePermutation) -> int:
    return len(canonical_cycles(z))


def hat_length(z: AffinePermutation) -> int:
    total = z.length + absolute_length(z)
    assert total % 2 == 0
    return total // 2


def endpoint_kind(z: AffinePermutation, i: int) -> Literal["left", "right", "fixed"]:
    v = z(i)
    return "left" if i < v else "right" if v < i else "fixed"


def demazure_conjugate(z: AffinePermutation, i: int) -> AffinePermutation:
    """The Demazure conjugate s_i o z o s_i of an involution."""
    if z(i) > z(i + 1):
        return z
    if z(i) == i and z(i + 1) == i + 1:
        return times_simple(z, i)
    return simple_times(i, times_simple(z, i))


@lru_cache(maxsize=None)
def _hat_layers(n: int, max_hat: int) -> tuple[tuple[AffinePermutation, ...], ...]:
    if max_hat == 0:
        return ((identity(n),),)
    prev = _hat_layers(n, max_hat - 1)
    seen = set(prev[-1])
    nxt = {demazure_conjugate(z, i) for z in prev[-1] for i in range(1, n + 1)} - seen
    return prev + (tuple(sorted(nxt, key=lambda z: z.window)),)


def involutions_by_hat(n: int, max_hat: int) -> tuple[tuple[AffinePermutation, ...], ...]:
    """Layers of involutions with hat length 0, 1, ..., max_hat."""
    if n == 1:
        return ((identity(1),),) + ((),) * max_hat
    return _hat_layers(n, max_hat)


def enumerate_involutions(n: int, max_hat_length: int) -> Iterator[AffinePermutation]:
    """Every involution with hat length at most the bound, exactly once."""
    for layer in involutions_by_hat(n, max_hat_length):
        yield from layer


def standardize(w: AffinePermutation, E: Iterable[int], n: int | None = None) -> AffinePermutation:
    """
    Compress w to the residue classes of E, keeping relative order.

    The result is psi o w o phi, where phi is the order-preserving map from
    the integers onto E + nZ with phi([m]) in [n], and psi is the
    order-preserving map from w(E) + nZ onto the integers chosen so that the
    composite is an affine permutation of rank m.
    """
    n = w.n if n is None else n
    if n != w.n:
        raise ValueError(f"rank {n} does not match permutation rank {w.n}")
    src = sorted({(e - 1) % n + 1 for e in E})
    m = len(src)
    if m == 0:
        raise ValueError("E must meet at least one residue class")
    values = [w(p) for p in src]
    dst = sorted((v - 1) % n + 1 for v in values)
    if len(set(dst)) != m:
        raise ValueError("w(E) + nZ has the wrong number of classes")

    def psi(v: int) -> int:
        q, r = divmod(v - 1, n)
        return bisect_left(dst, r + 1) + 1 + q * m

    out = [psi(v) for v in values]
    shift, rem = divmod(sum(out) - m * (m + 1) // 2, m)
    assert rem == 0
    return AffinePermutation(m, tuple(v - shift for v in out))


def _has_321(w: AffinePermutation) -> bool:
    # For each middle position b in [n], take the largest value to its left
    # and the smallest value to its right within each residue class.
    n = w.n
    for b in range(1, n + 1):
        wb = w(b)
        left = right = False
        for r in range(1, n + 1):
            k_left = (b - 1 - r) // n
            k_right = (b - r) // n + 1
            left = left or w(r + k_left * n) > wb
            right = right or w(r + k_right * n) < wb
        if left and right:
            return True
    return False


def is_321_avoiding(z: AffinePermutation) -> bool:
    return not _has_321(z)


def is_fully_commutative(w: AffinePermutation) -> bool:
    """
    No reduced word contains s_i s_{i+1} s_i.

    Equivalently, no prefix of w in right weak order has two adjacent right
    descents.  For n <= 2 there are no braid relations, so every element is
    fully commutative.
    """
    n = w.n
    if n <= 2:
        return True
    seen = {w}
    stack = [w]
    while stack:
        x = stack.pop()
        des = right_descents(x)
        if any(i % n + 1 in des for i in des):
            return False
        for i in des:
            y = times_simple(x, i)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


class WindingEdge(NamedTuple):
    """One arc of the winding diagram."""
    start: int       # left endpoint a in [n]
    target: int      # residue of z(a) in [n]
    winding: int     # full turns: (z(a) - a) // n
    label: int       # m with z(i) = j + mn for the residues i < j of the arc


def winding_edges(z: AffinePermutation) -> list[WindingEdge]:
    n = z.n
    out = []
    for a, b in canonical_cycles(z):
        r = (b - 1) % n + 1
        lo, hi = min(a, r), max(a, r)
        out.append(WindingEdge(a, r, (b - a) // n, (z(lo) - hi) // n))
    return out


def to_cycle_record(z: AffinePermutation) -> dict:
    return {"n": z.n, "cycles": [list(c) for c in canonical_cycles(z)]}


def from_cycle_record(rec: dict) -> AffinePermutation:
    if "window" in rec:
        return check_involution(AffinePermutation(rec["n"], tuple(rec["window"])))
    return involution_from_cycles(rec["n"], [tuple(c[:2]) for c in rec["cycles"]])


def dumps(zs: Iterable[AffinePermutation]) -> str:
    return "".join(json.dumps(to_cycle_record(z)) + "\n" for z in zs)
