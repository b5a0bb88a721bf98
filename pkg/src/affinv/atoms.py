"""
Atoms of affine involutions.

An atom of an involution z is a shortest w with w^-1 o w == z (Demazure
product).  The atoms form a bounded graded poset under the local move
`cab -> bca` on inverse windows, running from `alpha_min(z)` to
`alpha_max(z)`.

Two membership tests are provided.  `is_atom_of(w, y)` reads the *string* of
w, so it answers whether the inverse of w is an atom of y; `is_atom(v, y)`
answers the question for v itself.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .affine_core import (
    AffinePermutation, ResourceBoundError, compose, demazure,
    elements_by_length, from_window, inverse, max_displacement,
    _from_values,
)
from .involutions import (
    canonical_cycles, check_involution, hat_length, standardize,
)
from .weighted import alpha_R, lambda_right

__all__ = [
    "AtomPoset", "NotAnAtomError", "atoms_bruteforce", "is_atom", "alpha_min",
    "alpha_max", "cover_lessA", "covers_up_A", "atom_poset", "inv_A",
    "rank_A", "is_lattice", "mobius_values", "atom_string_violation",
    "is_atom_of", "is_atom_local", "cycle_removal", "poset_to_dot",
    "poset_to_json", "BRUTEFORCE_MAX_ELEMENTS",
]

# largest number of group elements the brute-force search may visit
BRUTEFORCE_MAX_ELEMENTS = 200_000


class NotAnAtomError(ValueError):
    """Raised when an operation needs an atom and receives something else."""


def is_atom(v: AffinePermutation, z: AffinePermutation) -> bool:
    """Definition check: len(v) == hat_length(z) and v^-1 o v == z."""
    return v.length == hat_length(z) and demazure(inverse(v), v) == z


def atoms_bruteforce(z: AffinePermutation, max_elements: int = BRUTEFORCE_MAX_ELEMENTS) -> set[AffinePermutation]:
    """Every w of length hat_length(z) with w^-1 o w == z, by BFS over the group."""
    check_involution(z)
    target = hat_length(z)
    visited = 0
    for L, layer in elements_by_length(z.n, target):
        visited += len(layer)
        if visited > max_elements:
            raise ResourceBoundError(
                f"brute-force atom search passed {max_elements} elements (max_elements)")
        if L == target:
            return {w for w in layer if demazure(inverse(w), w) == z}
    return set()


def _alpha_ends(z: AffinePermutation, left: bool) -> AffinePermutation:
    n = z.n
    if left:
        pairs = [(z(a), a) for a in range(1, n + 1) if a <= z(a)]
    else:
        pairs = [(d, z(d)) for d in range(1, n + 1) if z(d) <= d]
    return inverse(from_window(n, [v for p in pairs for v in p]))


def alpha_min(z: AffinePermutation) -> AffinePermutation:
    """[b_1, a_1, ..., b_l, a_l]^-1, cross-checked against alpha_R(z) z and w_R alpha_R(z)."""
    check_involution(z)
    out = _alpha_ends(z, left=True)
    ar = alpha_R(z)
    assert out == compose(ar, z) == compose(lambda_right(z).base, ar)
    return out


def alpha_max(z: AffinePermutation) -> AffinePermutation:
    """[d_1, c_1, ..., d_l, c_l]^-1, cross-checked against alpha_L(z) z."""
    from .weighted import alpha_L
    check_involution(z)
    out = _alpha_ends(z, left=False)
    assert out == compose(alpha_L(z), z)
    return out


def _inv_triple(u: AffinePermutation, i: int) -> tuple[int, int, int]:
    ui = u.inverse
    return ui(i), ui(i + 1), ui(i + 2)


def covers_up_A(u: AffinePermutation) -> list[AffinePermutation]:
    """All v with u covered by v: a window cab of u^-1 at i..i+2 becomes bca."""
    n = u.n
    if n < 3:
        return []
    ui = u.inverse
    out = []
    for i in range(1, n + 1):
        c, a, b = _inv_triple(u, i)
        if a < b < c:
            vals = {p: ui(p) for p in range(1, n + 1)} | {i: b, i + 1: c, i + 2: a}
            out.append(inverse(_from_values(n, vals)))
    return out


def cover_lessA(u: AffinePermutation, v: AffinePermutation) -> bool:
    """u is covered by v in the atom order (local cab -> bca move on inverses)."""
    if u.n != v.n:
        raise ValueError("rank mismatch")
    return v in covers_up_A(u)


@dataclass(frozen=True)
class AtomPoset:
    """The atoms of `owner`, sorted by rank then window; covers index into `nodes`."""
    owner: AffinePermutation
    nodes: tuple[AffinePermutation, ...]
    covers: tuple[tuple[int, int], ...]
    ranks: tuple[int, ...]
    bottom: int
    top: int

    def rank_sizes(self) -> list[int]:
        sizes = [0] * (max(self.ranks) + 1)
        for r in self.ranks:
            sizes[r] += 1
        return sizes

    def index(self, w: AffinePermutation) -> int:
        return self.nodes.index(w)


def atom_poset(z: AffinePermutation) -> AtomPoset:
    """Close alpha_min(z) under covers; ranks come from rank_A and match BFS depth."""
    bottom = alpha_min(z)
    depth = {bottom: 0}
    frontier = [bottom]
    edges = []
    while frontier:
        nxt = []
        for u in frontier:
            for v in covers_up_A(u):
                edges.append((u, v))
                if v not in depth:
                    depth[v] = depth[u] + 1
                    nxt.append(v)
        frontier = nxt
    nodes = sorted(depth, key=lambda w: (depth[w], w.window))
    index = {w: k for k, w in enumerate(nodes)}
    ranks = tuple(rank_A(w, z) for w in nodes)
    assert ranks == tuple(depth[w] for w in nodes)
    assert all(ranks[index[v]] == ranks[index[u]] + 1 for u, v in edges)
    maximal = [w for w in nodes if not covers_up_A(w)]
    top = alpha_max(z)
    assert maximal == [top]
    covers = tuple(sorted({(index[u], index[v]) for u, v in edges}))
    return AtomPoset(z, tuple(nodes), covers, ranks, 0, index[top])


def _cross_pairs(w: AffinePermutation, z: AffinePermutation, bound: int) -> set[tuple[int, int]]:
    """Representatives (p in [n], q) of Inv_A(w; z) with |p - q| <= bound."""
    n = w.n
    out = set()
    for p in range(1, n + 1):
        p_left = p <= z(p)
        for q in range(p - bound, p + bound + 1):
            if q == p or w(p) <= w(q) or (q <= z(q)) != p_left:
                continue
            if (p < q) == p_left:
                out.add((p, q))
    return out


def inv_A(w: AffinePermutation, z: AffinePermutation, bound: int | None = None) -> set[tuple[int, int]]:
    """
    Pairs (p, q) with p in [n], w(p) > w(q), and either p < q with both in
    {a <= z(a)} or p > q with both in {z(b) < b}.  The full set is infinite;
    only pairs with |p - q| <= bound are returned.
    """
    if bound is None:
        bound = 2 * max_displacement(w) + 2 * w.n
    return _cross_pairs(w, z, bound)


def rank_A(w: AffinePermutation, z: AffinePermutation) -> int:
    """Number of classes in Inv_A(w; z) minus Inv_A(alpha_min(z); z)."""
    if not is_atom(w, z):
        raise NotAnAtomError(f"{w} is not an atom of {z}")
    bottom = _alpha_ends(z, left=True)
    # outside this distance both sets agree: p > q pairs are always inversions,
    # p < q pairs never are
    bound = 2 * max(max_displacement(w), max_displacement(bottom)) + 2 * w.n
    mine, base = _cross_pairs(w, z, bound), _cross_pairs(bottom, z, bound)
    assert base <= mine
    return len(mine - base)


def _order_masks(poset: AtomPoset) -> tuple[list[int], list[int]]:
    """Bitmasks of the up-set and down-set of each node (nodes are rank-sorted)."""
    k = len(poset.nodes)
    succ = [[] for _ in range(k)]
    pred = [[] for _ in range(k)]
    for u, v in poset.covers:
        succ[u].append(v)
        pred[v].append(u)
    order = sorted(range(k), key=lambda x: poset.ranks[x])
    up = [1 << x for x in range(k)]
    down = [1 << x for x in range(k)]
    for x in reversed(order):
        for v in succ[x]:
            up[x] |= up[v]
    for x in order:
        for u in pred[x]:
            down[x] |= down[u]
    return up, down


def is_lattice(poset: AtomPoset) -> bool:
    """Every pair has a least upper bound and a greatest lower bound."""
    up, down = _order_masks(poset)
    k = len(poset.nodes)
    for x, y in combinations(range(k), 2):
        ub = up[x] & up[y]
        if not any(ub >> z & 1 and up[z] & ub == ub for z in range(k)):
            return False
        lb = down[x] & down[y]
        if not any(lb >> z & 1 and down[z] & lb == lb for z in range(k)):
            return False
    return True


def mobius_values(poset: AtomPoset, max_nodes: int = 200) -> set[int]:
    """All values mu(x, y) over comparable pairs x <= y."""
    k = len(poset.nodes)
    if k > max_nodes:
        raise ResourceBoundError(f"Mobius computation limited to {max_nodes} nodes (max_nodes)")
    up, _ = _order_masks(poset)
    order = sorted(range(k), key=lambda x: poset.ranks[x])
    values = set()
    for x in order:
        mu = {x: 1}
        for y in order:
            if y == x or not up[x] >> y & 1:
                continue
            mu[y] = -sum(m for z, m in mu.items() if up[z] >> y & 1)
        values.update(mu.values())
    return values


def atom_string_violation(w: AffinePermutation, y: AffinePermutation) -> str | None:
    """
    Check the string of w against the pattern conditions for w^-1 to be an
    atom of y; return the first violated condition, or None.

    "x before y" means x occurs before y in the string (w(i))_i, that is,
    w^-1(x) < w^-1(y).
    """
    if w.n != y.n:
        raise ValueError("rank mismatch")
    check_involution(y)
    n = w.n
    pos = w.inverse
    B = 2 * max_displacement(pos) + 2 * n
    fixed = [r for r in range(1, n + 1) if y(r) == r]
    cycles = canonical_cycles(y)

    def before(*xs: int) -> bool:
        return all(pos(s) < pos(t) for s, t in zip(xs, xs[1:]))

    def translates(r: int, lo: int, hi: int) -> Iterable[int]:
        first = lo + (r - lo) % n
        return range(first, hi + 1, n)

    for X in fixed:
        for r in fixed:
            for Y in translates(r, X + 1, X + B):
                if not before(X, Y):
                    return f"1: fixed points {X} < {Y} out of order"
    for a, b in cycles:
        if not before(b, a):
            return f"2: cycle ({a},{b}) not read as b before a"
    for a, b in cycles:
        for r in fixed:
            for X in translates(r, a - B, b + B):
                if before(b, X, a):
                    return f"3a: fixed point {X} between {b} and {a}"
                if X < a and not before(X, b, a):
                    return f"3b: fixed point {X} < {a} not read before {b}"
                if b < X and not before(b, a, X):
                    return f"3c: fixed point {X} > {b} not read after {a}"
    for a, b in cycles:
        for c, d in cycles:
            for a2 in translates(c, a + 1, b + B):
                b2 = a2 + (d - c)
                if b2 < b:
                    if not (before(b, a, b2, a2) or before(b2, b, a, a2) or before(b2, a2, b, a)):
                        return f"4: nested cycles ({a},{b}) and ({a2},{b2}) in a forbidden order"
                elif not before(b, a, b2, a2):
                    return f"4: cycles ({a},{b}) and ({a2},{b2}) not read as b a b' a'"
    return None


def is_atom_of(w: AffinePermutation, y: AffinePermutation) -> bool:
    """True when w^-1 is an atom of y (pattern conditions on the string of w)."""
    return atom_string_violation(w, y) is None


def is_atom_local(w: AffinePermutation, y: AffinePermutation) -> bool:
    """
    True when w^-1 is an atom of y, decided on standardisations: for every
    y-invariant E inside {1, y(1), ..., n, y(n)} with at most two y-orbits,
    the standardisation of w^-1 to E must be an atom of that of y.
    """
    if w.n != y.n:
        raise ValueError("rank mismatch")
    check_involution(y)
    v = w.inverse
    n = y.n
    orbits = sorted({tuple(sorted({a, y(a)})) for a in range(1, n + 1)})
    choices = [(o,) for o in orbits] + list(combinations(orbits, 2))
    for choice in choices:
        E = {e for o in choice for e in o}
        if not is_atom(standardize(v, E, n), standardize(y, E, n)):
            return False
    return True


def cycle_removal(w: AffinePermutation, rng: random.Random | None = None) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    """
    Remove descent pairs from the string of w until it increases.

    w^-1 must be an atom of some involution y.  Each step picks a consecutive
    pair "b a" with a < b (the leftmost one, or a random one when `rng` is
    given) and deletes every value congruent to a or b.  Returns the pairs
    found, as canonical cycles, and one period of the remaining string.
    """
    n = w.n
    y = demazure(w, inverse(w))
    if w.length != hat_length(y):
        raise NotAnAtomError(f"the inverse of {w} is not an atom")
    period = list(w.window)
    pairs = []
    while True:
        m = len(period)
        descents = [k for k in range(m)
                    if period[k] > (period[k + 1] if k + 1 < m else period[0] + n)]
        if not descents:
            break
        k = rng.choice(descents) if rng else descents[0]
        b = period[k]
        a = period[k + 1] if k + 1 < m else period[0] + n
        shift = (a - 1) // n * n
        pairs.append((a - shift, b - shift))
        gone = {a % n, b % n}
        period = [v for v in period if v % n not in gone]
    return tuple(pairs), tuple(period)


def poset_to_dot(poset: AtomPoset) -> str:
    lines = ["digraph atoms {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for k, w in enumerate(poset.nodes):
        lines.append(f'  n{k} [label="{w!r}"];')
    for r in range(max(poset.ranks) + 1):
        members = " ".join(f"n{k};" for k, rk in enumerate(poset.ranks) if rk == r)
        lines.append(f"  {{ rank=same; {members} }}")
    for u, v in poset.covers:
        lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_json(poset: AtomPoset) -> str:
    return json.dumps({
        "z": list(poset.owner.window),
        "atoms": [list(w.window) for w in poset.nodes],
        "covers": [list(c) for c in poset.covers],
        "ranks": list(poset.ranks),
    }) + "\n"
