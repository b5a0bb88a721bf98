"""
Bruhat order restricted to affine involutions.

Covers in this order come from the covering transformations `tau(n, i, j, y)`.
For a pair of positions i < j, the vertices {i, j, y(i), y(j)} with the
edges of y among them form a small coloured graph.  After order-preserving
relabelling it is one of 20 patterns, and the pattern selects how y is
modified.

Patterns are written as words: the letter at place p names the partner of
vertex p (A = 1, B = 2, ...), upper case for the white vertices i and j and
lower case for the black ones.  So "BA" is a single white edge, and "cBA" has
a black vertex joined to the white vertex on its far right with a white fixed
point between them.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .affine_core import (
    AffinePermutation, bruhat_leq, compose, demazure, max_displacement, reflection,
)
from .atoms import alpha_min, atom_poset, is_atom_of
from .involutions import check_involution, enumerate_involutions, hat_length, is_involution

__all__ = [
    "ColoredGraphPattern", "InvolutionCover", "pattern_D", "all_patterns",
    "TAU_RULES", "TAU_RULES_CONGRUENT", "IMAGE_TABLE", "image_pattern", "pattern_on_vertices", "tau", "hat_increment_ok",
    "hat_increment_case", "covers_up_I", "bruhat_covers_I_bruteforce",
    "CoveringReport", "covering_property_check", "bruhat_leq_inv",
    "worker_count",
]


@dataclass(frozen=True)
class ColoredGraphPattern:
    """A matching on [k] with white/black vertices, written as a word."""
    word: str

    @property
    def k(self) -> int:
        return len(self.word)

    @property
    def white(self) -> tuple[int, ...]:
        return tuple(p for p, ch in enumerate(self.word, start=1) if ch.isupper())

    @property
    def partner(self) -> tuple[int, ...]:
        return tuple(ord(ch.upper()) - 64 for ch in self.word)

    def __str__(self) -> str:
        return self.word


def _pattern(vertices: dict[int, int], white: set[int]) -> ColoredGraphPattern:
    order = sorted(vertices)
    index = {v: p for p, v in enumerate(order)}
    word = ""
    for v in order:
        ch = chr(65 + index[vertices[v]])
        word += ch if v in white else ch.lower()
    return ColoredGraphPattern(word)


def pattern_D(y: AffinePermutation, i: int, j: int) -> ColoredGraphPattern:
    """The relabelled coloured graph on {i, j, y(i), y(j)}."""
    n = y.n
    if not i < j or (j - i) % n == 0:
        raise ValueError(f"positions ({i},{j}) need i < j and j - i not divisible by {n}")
    verts = {i: y(i), j: y(j), y(i): i, y(j): j}
    return _pattern(verts, {i, j})


def all_patterns() -> set[str]:
    """
    The 20 possible patterns: two white vertices, each fixed, joined to the
    other, or joined to its own black vertex.
    """
    out = set()
    for k in (2, 3, 4):
        for white in combinations(range(k), 2):
            black = [p for p in range(k) if p not in white]
            for partners in permutations(white, len(black)):
                verts = {p: p for p in range(k)}
                for b, w in zip(black, partners):
                    verts[b], verts[w] = w, b
                out.add(_pattern(verts, set(white)).word)
                if not black:
                    out.add(_pattern({white[0]: white[1], white[1]: white[0]}, set(white)).word)
    return out


# How tau modifies y, by pattern: ("conj", c) conjugates y by the reflection
# named by c, ("bar", c) multiplies y_bar on the left by it and ("left", c)
# multiplies y on the left.  c names the two ends: "w" is the white vertex
# itself, "b" its black partner.  CdaB depends on whether i = y(j) mod n.
TAU_RULES: dict[str, tuple[str, str]] = {
    "ACb": ("conj", "ww"), "bAC": ("conj", "ww"), "bADc": ("conj", "ww"),
    "CDab": ("conj", "ww"), "cdAB": ("conj", "ww"),
    "AcB": ("conj", "wb"), "BaC": ("conj", "bw"),
    "CdaB": ("conj", "wb"),
    "BadC": ("bar", "ww"), "BaDc": ("bar", "wb"), "bAdC": ("bar", "bw"),
    "AB": ("left", "ww"),
}
TAU_RULES_CONGRUENT: dict[str, tuple[str, str]] = {"CdaB": ("bar", "ww")}

# Pattern of tau(y) drawn on the vertex set of the pattern of y (see
# pattern_on_vertices), keyed by (pattern, i = y(j) mod n); None in the key
# means the flag does not matter.
IMAGE_TABLE: dict[tuple[str, bool | None], str] = {
    ("AB", None): "BA", ("BadC", True): "BA", ("CdaB", True): "BA",
    ("BaC", None): "CbA", ("bAC", None): "cBA", ("AcB", None): "CbA",
    ("ACb", None): "CBa", ("bADc", None): "cDAb",
    ("BadC", False): "DbcA", ("BaDc", None): "DbCa", ("bAdC", None): "dBcA",
    ("CdaB", False): "DcbA", ("CDab", None): "DCba", ("cdAB", None): "dcBA",
}


def image_pattern(word: str, congruent: bool) -> str | None:
    return IMAGE_TABLE.get((word, congruent), IMAGE_TABLE.get((word, None)))


def pattern_on_vertices(y: AffinePermutation, z: AffinePermutation, i: int, j: int) -> ColoredGraphPattern:
    """
    The edges of z drawn on the vertex set of pattern_D(y, i, j).

    This is how the image column of the tau table is read: black vertices of
    y stay in the picture even when z fixes them.  When i = y(j) mod n the
    vertex set changes and the plain pattern_D(z, i, j) is returned.
    """
    if (i - y(j)) % y.n == 0:
        return pattern_D(z, i, j)
    verts = {v: z(v) for v in {i, j, y(i), y(j)}}
    assert set(verts.values()) == set(verts), "tau left the vertex set"
    return _pattern(verts, {i, j})


def _reflection_between(n: int, a: int, b: int) -> AffinePermutation:
    return reflection(n, min(a, b), max(a, b))


def tau(n: int, i: int, j: int, y: AffinePermutation) -> AffinePermutation:
    """The covering transformation at positions i < j."""
    if y.n != n:
        raise ValueError("rank mismatch")
    D = pattern_D(y, i, j).word
    cong = (i - y(j)) % n == 0
    rule = (TAU_RULES_CONGRUENT if cong else {}).get(D, TAU_RULES.get(D))
    if rule is None:
        return y
    kind, colours = rule
    a = i if colours[0] == "w" else y(i)
    b = j if colours[1] == "w" else y(j)
    t = _reflection_between(n, a, b)
    if kind == "conj":
        return compose(compose(t, y), t)
    if kind == "left":
        return compose(t, y)
    ybar = compose(y, _reflection_between(n, i, y(i)))
    if not cong:
        ybar = compose(ybar, _reflection_between(n, j, y(j)))
    out = compose(t, ybar)
    assert is_involution(out)
    return out


def _no_between(y: AffinePermutation, lo: int, hi: int, vlo: int, vhi: int) -> bool:
    """No e with lo < e < hi has vlo < y(e) < vhi."""
    return all(not vlo < y(e) < vhi for e in range(lo + 1, hi))


def hat_increment_case(y: AffinePermutation, i: int, j: int) -> tuple[str, bool] | None:
    """
    Evaluate the case-split criterion for hat_length(tau(y)) == hat_length(y) + 1.

    Returns (case, verdict) when (i, j) satisfies one of the hypotheses
    (a)i, (a)ii, (b), (c), and None otherwise.
    """
    n = y.n
    yi, yj = y(i), y(j)
    cong = (i - yj) % n == 0
    if yi <= i or j <= yj:
        if not cong:
            return "a.i", yi < yj and _no_between(y, i, j, yi, yj)
        delta = j - i
        return "a.ii", _no_between(y, i, j, yi - delta, yj + delta)
    if (j - yi) % n == 0 and i < yi < yj < j:
        ok = (yj == i + n and _no_between(y, j - n, i + n, i, j)
              and _no_between(y, i, j - n, i - n, j))
        return "b", ok
    if (j - yi) % n == 0 and i < yj < yi < j:
        ok = (yj == i + n and _no_between(y, j - 2 * n, i + n, i - n, j)
              and _no_between(y, i, j - 2 * n, i - 2 * n, j))
        return "c", ok
    return None


def _window_reach(y: AffinePermutation) -> int:
    return max(y.n * (hat_length(y) + 3), 2 * max_displacement(y) + 2 * y.n)


def hat_increment_ok(y: AffinePermutation, i: int, j: int) -> bool:
    """
    Decide hat_length(tau(y)) == hat_length(y) + 1 without computing lengths.

    When (i, j) falls outside the hypotheses of the criterion, another pair
    (k, l) with the same image under tau that does satisfy them is used.
    """
    n = y.n
    z = tau(n, i, j, y)
    if z == y:
        raise ValueError(f"tau_({i},{j}) fixes {y}")
    found = hat_increment_case(y, i, j)
    if found is not None:
        return found[1]
    reach = _window_reach(y)
    for k in range(1, n + 1):
        for l in range(k + 1, k + reach + 1):
            if (l - k) % n == 0 or tau(n, k, l, y) != z:
                continue
            found = hat_increment_case(y, k, l)
            if found is not None:
                return found[1]
    raise RuntimeError(f"no pair satisfying the criterion hypotheses reaches {z} from {y}")


@dataclass(frozen=True)
class InvolutionCover:
    """lower is covered by upper == tau(*witness, lower); case names the criterion branch."""
    lower: AffinePermutation
    upper: AffinePermutation
    witness: tuple[int, int]
    case: str


def covers_up_I(y: AffinePermutation, reach: int | None = None) -> list[InvolutionCover]:
    """
    All involutions covering y, one record per cover with the first witness
    (in lexicographic order of positions) whose criterion says yes.
    """
    check_involution(y)
    n = y.n
    if n == 1:
        return []
    reach = _window_reach(y) if reach is None else reach
    found: dict[AffinePermutation, InvolutionCover] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, i + reach + 1):
            if (j - i) % n == 0:
                continue
            z = tau(n, i, j, y)
            if z == y or z in found:
                continue
            case = hat_increment_case(y, i, j)
            if case is None or not case[1]:
                continue
            found[z] = InvolutionCover(y, z, (i, j), case[0])
    return sorted(found.values(), key=lambda c: c.upper.window)


def bruhat_covers_I_bruteforce(y: AffinePermutation) -> set[AffinePermutation]:
    """Involutions z with hat_length(z) == hat_length(y) + 1 and y <= z."""
    h = hat_length(y)
    return {z for z in enumerate_involutions(y.n, h + 1) if hat_length(z) == h + 1 and bruhat_leq(y, z)}


def bruhat_leq_inv(y: AffinePermutation, z: AffinePermutation, via_atoms: bool = False) -> bool:
    """Bruhat order on involutions, directly or via some atom of y below alpha_min(z)."""
    if not via_atoms:
        return bruhat_leq(y, z)
    w = alpha_min(z)
    return any(bruhat_leq(v, w) for v in atom_poset(y).nodes)


@dataclass
class CoveringReport:
    """Outcome of a sweep over (y, t) pairs."""
    n: int
    max_hat: int
    pairs_checked: int = 0
    products_checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: CoveringReport) -> None:
        self.pairs_checked += other.pairs_checked
        self.products_checked += other.products_checked
        self.violations.extend(other.violations)

    def summary(self) -> str:
        head = (f"covering property n={self.n} max_hat={self.max_hat}: "
                f"{self.pairs_checked} (y, t) pairs, {self.products_checked} products, "
                f"{len(self.violations)} violations")
        return "\n".join([head] + self.violations)


def _check_one(y: AffinePermutation) -> CoveringReport:
    n = y.n
    report = CoveringReport(n, hat_length(y))
    atoms = atom_poset(y).nodes
    reach = max(n * (hat_length(y) + 3), max(2 * max_displacement(w) for w in atoms) + 2 * n)
    for i in range(1, n + 1):
        for j in range(i + 1, i + reach + 1):
            if (j - i) % n == 0:
                continue
            t = reflection(n, i, j)
            buckets: dict[AffinePermutation, list[AffinePermutation]] = {}
            for w in atoms:
                v = compose(w, t)
                if v.length != w.length + 1:
                    continue
                report.products_checked += 1
                z = demazure(v.inverse, v)
                if not is_atom_of(v.inverse, z):
                    continue
                buckets.setdefault(z, []).append(v)
            report.pairs_checked += 1
            if len(buckets) > 1:
                report.violations.append(
                    f"y={y!r} t=({i},{j}) buckets={sorted(repr(z) for z in buckets)}")
            for z in buckets:
                expected = tau(n, i, j, y)
                if z != expected:
                    report.violations.append(
                        f"y={y!r} t=({i},{j}) z={z!r} but tau gives {expected!r}")
    return report


def worker_count() -> int:
    """Worker processes for sweeps, capped by the AFFINV_THREADS variable."""
    try:
        return max(1, int(os.environ.get("AFFINV_THREADS", "1")))
    except ValueError:
        return 1


def covering_property_check(n: int, max_hat: int, workers: int | None = None) -> CoveringReport:
    """
    For every y with hat length <= max_hat and every reflection t in the
    search window, the products w t (w an atom of y, length going up) are
    atoms of at most one involution z, and that z is tau(y).
    """
    ys = list(enumerate_involutions(n, max_hat))
    workers = worker_count() if workers is None else workers
    report = CoveringReport(n, max_hat)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_check_one, ys))
    else:
        parts = [_check_one(y) for y in ys]
    for part in parts:
        report.merge(part)
    return report
