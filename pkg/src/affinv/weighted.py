"""
Weighted involutions and the 0-Hecke operators acting on them.

A weighted involution is an affine involution together with a nonnegative
weight on each translation class of its 2-cycles.  The operators `pi_right`
and `pi_left` move weight across descents; running them until no weight is
left defines the maps `omega_right` and `omega_left`, whose inverses
`lambda_right` and `lambda_left` land in the weighted matchings of the cycle
graph (weighted involutions whose base is a product of commuting simple
generators).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .affine_core import (
    AffinePermutation, compose, from_window, identity, inverse, reflection,
    simple, simple_times, star, times_simple,
)
from .involutions import (
    canonical_cycles, canonical_pair, check_involution, involution_from_cycles,
)

__all__ = [
    "WeightedInvolution", "weighted", "weight", "w_length", "w_abs_length",
    "phi_right", "phi_left", "pi_right", "pi_left", "pi_word_right",
    "pi_word_left", "star_weighted", "descents_right", "descents_left",
    "is_right_admissible", "is_left_admissible", "omega_right", "omega_left",
    "lambda_right", "lambda_left", "alpha_R", "alpha_L", "zeta_R", "zeta_L",
    "is_matching", "matching_edges", "matching_from_edges",
    "enumerate_matchings", "count_matchings", "prec_compare",
    "precR_covers", "precL_covers",
]

Cycle = tuple[int, int]


@dataclass(frozen=True)
class WeightedInvolution:
    """An involution with weights on its canonical cycles; zero weights are dropped."""
    base: AffinePermutation
    weights: tuple[tuple[Cycle, int], ...] = field(default=())

    def __post_init__(self):
        n = self.base.n
        clean: dict[Cycle, int] = {}
        for (a, b), v in self.weights:
            key = canonical_pair(n, a, b)
            if v < 0:
                raise ValueError(f"negative weight {v} on {key}")
            if self.base(key[0]) != key[1] or key[0] >= key[1]:
                raise ValueError(f"{key} is not a cycle of {self.base}")
            if v:
                clean[key] = clean.get(key, 0) + v
        object.__setattr__(self, "weights", tuple(sorted(clean.items())))

    @property
    def n(self) -> int:
        return self.base.n

    def phi(self, a: int, b: int) -> int:
        """Weight of the cycle (a, b), read up to translation."""
        return dict(self.weights).get(canonical_pair(self.n, a, b), 0)

    def __repr__(self) -> str:
        ws = dict(self.weights)
        cyc = "".join(f"({a},{b}:{ws.get((a, b), 0)})" for a, b in canonical_cycles(self.base))
        return f"W{self.n}{cyc or '()'}"


def weighted(base: AffinePermutation, weights: dict[Cycle, int] | None = None) -> WeightedInvolution:
    check_involution(base)
    return WeightedInvolution(base, tuple((weights or {}).items()))


def weight(theta: WeightedInvolution) -> int:
    return sum(v for _, v in theta.weights)


def w_length(theta: WeightedInvolution) -> int:
    return theta.base.length + 2 * weight(theta)


def w_abs_length(theta: WeightedInvolution) -> int:
    return len(canonical_cycles(theta.base))


def phi_right(theta: WeightedInvolution, i: int) -> int:
    v = theta.base(i)
    return theta.phi(v, i) if v < i else 0


def phi_left(theta: WeightedInvolution, i: int) -> int:
    v = theta.base(i)
    return theta.phi(i, v) if i < v else 0


def _from_right_form(w: AffinePermutation, form: dict[int, int]) -> WeightedInvolution:
    ws = {}
    for j, v in form.items():
        if v:
            assert w(j) < j, "right form must live on right endpoints"
            ws[(w(j), j)] = v
    return WeightedInvolution(w, tuple(ws.items()))


def _from_left_form(w: AffinePermutation, form: dict[int, int]) -> WeightedInvolution:
    ws = {}
    for j, v in form.items():
        if v:
            assert j < w(j), "left form must live on left endpoints"
            ws[(j, w(j))] = v
    return WeightedInvolution(w, tuple(ws.items()))


def _conj(w: AffinePermutation, i: int) -> AffinePermutation:
    return simple_times(i, times_simple(w, i))


def pi_right(theta: WeightedInvolution, i: int) -> WeightedInvolution:
    """The right action theta pi_i."""
    n = theta.n
    a, b = phi_right(theta, i), phi_right(theta, i + 1)
    if a <= b:
        return theta
    i = (i - 1) % n + 1
    form = {j: phi_right(theta, j) for j in range(1, n + 1)}
    form[i % n + 1] = a - 1
    form[i] = b
    return _from_right_form(_conj(theta.base, i), form)


def pi_left(i: int, theta: WeightedInvolution) -> WeightedInvolution:
    """The left action pi_i theta."""
    n = theta.n
    a, b = phi_left(theta, i + 1), phi_left(theta, i)
    if a <= b:
        return theta
    i = (i - 1) % n + 1
    form = {j: phi_left(theta, j) for j in range(1, n + 1)}
    form[i] = a - 1
    form[i % n + 1] = b
    return _from_left_form(_conj(theta.base, i), form)


def pi_word_right(theta: WeightedInvolution, word: Iterable[int]) -> WeightedInvolution:
    """theta pi_{i_1} pi_{i_2} ..., applied left to right."""
    for i in word:
        theta = pi_right(theta, i)
    return theta


def pi_word_left(word: Sequence[int], theta: WeightedInvolution) -> WeightedInvolution:
    """pi_{i_1} pi_{i_2} ... theta, so the last letter acts first."""
    for i in reversed(word):
        theta = pi_left(i, theta)
    return theta


def star_weighted(theta: WeightedInvolution) -> WeightedInvolution:
    n = theta.n
    ws = {(n + 1 - b, n + 1 - a): v for (a, b), v in theta.weights}
    return WeightedInvolution(star(theta.base), tuple(ws.items()))


def descents_right(theta: WeightedInvolution) -> set[int]:
    return {i for i in range(1, theta.n + 1) if phi_right(theta, i) > phi_right(theta, i + 1)}


def descents_left(theta: WeightedInvolution) -> set[int]:
    return {i for i in range(1, theta.n + 1) if phi_left(theta, i + 1) > phi_left(theta, i)}


def is_right_admissible(theta: WeightedInvolution) -> bool:
    """
    True when no outer cycle (x, y) has a chain of cycles (a_i, b_i) with
    x < a_k < b_k < ... < b_0 < y and phi(a_i, b_i) + b_i + i >= phi(x, y) + y.
    """
    w = theta.base
    for x, y in canonical_cycles(w):
        target = theta.phi(x, y) + y
        best: dict[int, int] = {}   # right endpoint b -> largest chain index ending at b
        for b in range(y - 1, x, -1):
            a = w(b)
            if a >= b:
                continue
            gain = theta.phi(a, b) + b
            idx = 0 if gain >= target else None
            for k in best.values():
                if gain + k + 1 >= target and (idx is None or k + 1 > idx):
                    idx = k + 1
            if idx is None:
                continue
            best[b] = idx
            if a > x:
                return False
    return True


def is_left_admissible(theta: WeightedInvolution) -> bool:
    """
    True when no outer cycle (x, y) has a chain of cycles (a_i, b_i) with
    x < a_0 < ... < a_k < b_k < y and phi(a_i, b_i) - a_i + i >= phi(x, y) - x.
    """
    w = theta.base
    for x, y in canonical_cycles(w):
        target = theta.phi(x, y) - x
        best: dict[int, int] = {}
        for a in range(x + 1, y):
            b = w(a)
            if b <= a:
                continue
            gain = theta.phi(a, b) - a
            idx = 0 if gain >= target else None
            for k in best.values():
                if gain + k + 1 >= target and (idx is None or k + 1 > idx):
                    idx = k + 1
            if idx is None:
                continue
            best[a] = idx
            if b < y:
                return False
    return True


def omega_right(theta: WeightedInvolution) -> tuple[AffinePermutation, AffinePermutation]:
    """
    Apply pi_i at the smallest right descent until no weight is left.

    Returns (h^-1 w h, h) where h is the product of the generators applied.
    """
    h = identity(theta.n)
    while theta.weights:
        i = min(descents_right(theta))
        theta = pi_right(theta, i)
        h = times_simple(h, i)
    return theta.base, h


def omega_left(theta: WeightedInvolution) -> tuple[AffinePermutation, AffinePermutation]:
    """
    Apply pi_i at the smallest left descent until no weight is left.

    Returns (g w g^-1, g^-1) where pi_g theta has weight zero.
    """
    g = identity(theta.n)
    while theta.weights:
        i = min(descents_left(theta))
        theta = pi_left(i, theta)
        g = simple_times(i, g)
    return theta.base, inverse(g)


def _translates_straddling(n: int, c: int, d: int, lo: int, hi: int) -> Iterator[tuple[int, int]]:
    """Translates (c + kn, d + kn) with c + kn < hi and d + kn > lo."""
    kmin = (lo - d) // n + 1
    kmax = -((c - hi) // n) - 1
    for k in range(kmin, kmax + 1):
        yield c + k * n, d + k * n


def _straddlers(w: AffinePermutation, p: int) -> list[tuple[int, int]]:
    """All cycles (x, y) of w with x < p < y."""
    n = w.n
    out = []
    for c, d in canonical_cycles(w):
        out.extend((x, y) for x, y in _translates_straddling(n, c, d, p, p) if x < p < y)
    return out


def _endpoints(w: AffinePermutation, base: int, left: bool) -> list[int]:
    pts = range(base + 1, base + w.n + 1)
    return [a for a in pts if (a < w(a) if left else w(a) < a)]


def lambda_right(theta: WeightedInvolution | AffinePermutation, base: int = 0) -> WeightedInvolution:
    """The inverse of omega_right, landing in the weighted matchings."""
    theta = _as_weighted(theta)
    w, n = theta.base, theta.n
    gens, ws = [], {}
    for a in _endpoints(w, base, left=True):
        b = w(a)
        around = _straddlers(w, a)
        p = len(around)
        q = sum(1 for x, y in around if y < b)
        i = a + p
        gens.append(i)
        ws[(i, i + 1)] = theta.phi(a, b) + b - a - q - 1
    return _matching(n, gens, ws)


def lambda_left(theta: WeightedInvolution | AffinePermutation, base: int = 0) -> WeightedInvolution:
    """The inverse of omega_left, landing in the weighted matchings."""
    theta = _as_weighted(theta)
    w, n = theta.base, theta.n
    gens, ws = [], {}
    for a in _endpoints(w, base, left=False):
        c = w(a)
        around = _straddlers(w, a)
        p = len(around)
        q = sum(1 for x, y in around if c < x)
        i = a - p - 1
        gens.append(i)
        ws[(i, i + 1)] = theta.phi(c, a) + a - c - q - 1
    return _matching(n, gens, ws)


def _as_weighted(theta: WeightedInvolution | AffinePermutation) -> WeightedInvolution:
    if isinstance(theta, AffinePermutation):
        return weighted(theta)
    return theta


def _matching(n: int, gens: list[int], ws: dict[Cycle, int]) -> WeightedInvolution:
    w = identity(n)
    for i in gens:
        w = compose(w, simple(n, i))
    return WeightedInvolution(check_involution(w), tuple(ws.items()))


def _alpha_window(z: AffinePermutation, base: int, left: bool, swap: bool) -> AffinePermutation:
    pts = range(base + 1, base + z.n + 1)
    if left:
        pairs = [(a, z(a)) for a in pts if a <= z(a)]
    else:
        pairs = [(z(d), d) for d in pts if z(d) <= d]
    seq = [v for a, b in pairs for v in ((b, a) if swap else (a, b))]
    return inverse(from_window(z.n, seq))


def alpha_R(z: AffinePermutation, base: int = 0) -> AffinePermutation:
    """[a_1, b_1, ..., a_l, b_l]^-1 over a in base + [n] with a <= z(a)."""
    return _alpha_window(check_involution(z), base, left=True, swap=False)


def alpha_L(z: AffinePermutation, base: int = 0) -> AffinePermutation:
    """[c_1, d_1, ..., c_l, d_l]^-1 over d in base + [n] with z(d) <= d."""
    return _alpha_window(check_involution(z), base, left=False, swap=False)


def zeta_R(z: AffinePermutation) -> AffinePermutation:
    return omega_right(star_weighted(lambda_right(z)))[0]


def zeta_L(z: AffinePermutation) -> AffinePermutation:
    return omega_left(star_weighted(lambda_left(z)))[0]


def is_matching(theta: WeightedInvolution) -> bool:
    """Base is a product of commuting simple generators (length equals number of cycles)."""
    return theta.base.length == len(canonical_cycles(theta.base))


def matching_edges(theta: WeightedInvolution) -> list[tuple[int, int]]:
    """Edges [i, weight]; edge i joins i and i+1 mod n, so edge n is the cycle (n, n+1)."""
    if not is_matching(theta):
        raise ValueError(f"{theta} is not a weighted matching")
    return [(a, theta.phi(a, b)) for a, b in canonical_cycles(theta.base)]


def matching_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> WeightedInvolution:
    edges = list(edges)
    base = involution_from_cycles(n, [(i, i + 1) for i, _ in edges])
    return WeightedInvolution(base, tuple(((i, i + 1), v) for i, v in edges))


def _edge_sets(n: int) -> Iterator[tuple[int, ...]]:
    if n < 2:
        yield ()
        return
    for k in range(n // 2 + 1):
        for es in combinations(range(1, n + 1), k):
            if all((b - a) % n not in (1, n - 1) for a, b in combinations(es, 2)):
                yield es


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_matchings(n: int, max_weight: int) -> Iterator[WeightedInvolution]:
    """Every weighted matching of the n-cycle with total weight <= max_weight."""
    for es in _edge_sets(n):
        for total in range(max_weight + 1):
            for ws in _compositions(total, len(es)):
                yield matching_from_edges(n, zip(es, ws))


def count_matchings(n: int, k: int) -> int:
    """Number of k-edge matchings of the n-cycle: n/(n-k) * C(n-k, k)."""
    if k < 0 or n < 2 or 2 * k > n:
        return 1 if k == 0 else 0
    if k == 0:
        return 1
    return comb(n - k, k) + comb(n - k - 1, k - 1)


def prec_compare(theta: WeightedInvolution, other: WeightedInvolution) -> bool:
    """theta precedes-or-equals other: same base and pointwise smaller weights."""
    if theta.base != other.base:
        return False
    mine = dict(theta.weights)
    theirs = dict(other.weights)
    return all(v <= theirs.get(c, 0) for c, v in mine.items())


def precR_covers(z: AffinePermutation) -> set[AffinePermutation]:
    """All t_ij z t_ij with i in [n], z(i) < i and j the first e > i with z(i) < z(e)."""
    n = z.n
    out = set()
    for i in range(1, n + 1):
        if z(i) >= i:
            continue
        j = next(e for e in range(i + 1, i + n + 1) if z(e) > z(i))
        assert j < i + n
        t = reflection(n, i, j)
        out.add(compose(compose(t, z), t))
    return out


def precL_covers(z: AffinePermutation) -> set[AffinePermutation]:
    """All t_ij z t_ij with j in [n], j < z(j) and i the last e < j with z(e) < z(j)."""
    n = z.n
    out = set()
    for j in range(1, n + 1):
        if z(j) <= j:
            continue
        i = next(e for e in range(j - 1, j - n - 1, -1) if z(e) < z(j))
        assert i > j - n
        t = reflection(n, i, j)
        out.add(compose(compose(t, z), t))
    return out


def to_record(theta: WeightedInvolution) -> dict:
    ws = dict(theta.weights)
    return {"n": theta.n, "cycles": [[a, b, ws.get((a, b), 0)] for a, b in canonical_cycles(theta.base)]}


def from_record(rec: dict) -> WeightedInvolution:
    n = rec["n"]
    if "edges" in rec:
        return matching_from_edges(n, [tuple(e) for e in rec["edges"]])
    cycles = [tuple(c) for c in rec["cycles"]]
    base = involution_from_cycles(n, [c[:2] for c in cycles])
    return WeightedInvolution(base, tuple(((c[0], c[1]), c[2] if len(c) > 2 else 0) for c in cycles))


def dumps(thetas: Iterable[WeightedInvolution]) -> str:
    return "".join(json.dumps(to_record(t)) + "\n" for t in thetas)
