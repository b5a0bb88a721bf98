"""
Exact generating functions for involutions by length and number of cycles.

Series are power series in q with polynomial coefficients in x, truncated at a
q-degree cap.  Coefficients are Python integers, so nothing ever rounds.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from math import comb

from .involutions import absolute_length, enumerate_involutions
from .weighted import count_matchings

__all__ = [
    "TruncatedBivariateSeries", "series_closed_form", "series_bruteforce",
    "recurrence_check", "lucas_polynomial", "lucas", "lucas_identity_check",
    "count_N", "count_Nhat", "coefficient_table", "coefficient_csv",
    "NHAT_DIAGONAL", "NHAT_DOUBLE_DIAGONAL",
]

# N^_n(n) for n = 1..9 and N^_n(2n) for n = 1..8
NHAT_DIAGONAL = (0, 2, 3, 10, 25, 71, 196, 554, 1569)
NHAT_DOUBLE_DIAGONAL = (0, 2, 3, 18, 50, 215, 735, 2898)


@dataclass(frozen=True)
class TruncatedBivariateSeries:
    """sum of c[a, b] q^a x^b over a <= cap."""
    cap: int
    coeffs: tuple[tuple[tuple[int, int], int], ...] = field(default=())

    def __post_init__(self):
        clean = Counter()
        for (a, b), c in self.coeffs:
            if a <= self.cap:
                clean[a, b] += c
        object.__setattr__(self, "coeffs", tuple(sorted((k, c) for k, c in clean.items() if c)))

    @classmethod
    def of(cls, cap: int, terms: dict[tuple[int, int], int]) -> TruncatedBivariateSeries:
        return cls(cap, tuple(terms.items()))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return dict(self.coeffs).get(key, 0)

    def _check(self, other: TruncatedBivariateSeries) -> int:
        return min(self.cap, other.cap)

    def __add__(self, other: TruncatedBivariateSeries) -> TruncatedBivariateSeries:
        return TruncatedBivariateSeries(self._check(other), self.coeffs + other.coeffs)

    def __neg__(self) -> TruncatedBivariateSeries:
        return TruncatedBivariateSeries(self.cap, tuple((k, -c) for k, c in self.coeffs))

    def __sub__(self, other: TruncatedBivariateSeries) -> TruncatedBivariateSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedBivariateSeries | int) -> TruncatedBivariateSeries:
        if isinstance(other, int):
            return TruncatedBivariateSeries(self.cap, tuple((k, c * other) for k, c in self.coeffs))
        cap = self._check(other)
        out = Counter()
        for (a1, b1), c1 in self.coeffs:
            for (a2, b2), c2 in other.coeffs:
                if a1 + a2 <= cap:
                    out[a1 + a2, b1 + b2] += c1 * c2
        return TruncatedBivariateSeries(cap, tuple(out.items()))

    __rmul__ = __mul__

    def truncate(self, cap: int) -> TruncatedBivariateSeries:
        return TruncatedBivariateSeries(min(cap, self.cap), self.coeffs)

    def at_x_equals_one(self) -> list[int]:
        out = [0] * (self.cap + 1)
        for (a, _), c in self.coeffs:
            out[a] += c
        return out

    def diagonal(self) -> list[int]:
        """Substitute x = q; entry d is the coefficient of q^d (valid for d <= cap)."""
        out = [0] * (self.cap + 1)
        for (a, b), c in self.coeffs:
            if a + b <= self.cap:
                out[a + b] += c
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b), c in self.coeffs:
            mono = "".join(s for s in (f"q^{a}" if a > 1 else "q" if a else "",
                                        f"x^{b}" if b > 1 else "x" if b else "") if s)
            parts.append(f"{c}{mono}" if mono else str(c))
        return " + ".join(parts) + f" + O(q^{self.cap + 1})"


def _one(cap: int) -> TruncatedBivariateSeries:
    return TruncatedBivariateSeries.of(cap, {(0, 0): 1})


def _geometric(cap: int, step: int, sign: int = 1) -> TruncatedBivariateSeries:
    """1 / (1 - sign * q^step)."""
    return TruncatedBivariateSeries.of(cap, {(step * j, 0): sign ** j for j in range(cap // step + 1)})


def series_closed_form(n: int, D: int) -> TruncatedBivariateSeries:
    """sum_k n/(n-k) C(n-k, k) (qx / (1 - q^2))^k, truncated at q^D."""
    terms: Counter = Counter()
    for k in range(n // 2 + 1):
        c = count_matchings(n, k)
        if k == 0:
            terms[0, 0] += c
            continue
        for j in range((D - k) // 2 + 1):
            terms[k + 2 * j, k] += c * comb(j + k - 1, k - 1)
    return TruncatedBivariateSeries(D, tuple(terms.items()))


def series_bruteforce(n: int, D: int) -> TruncatedBivariateSeries:
    """sum of q^len(z) x^cycles(z) over enumerated involutions with len(z) <= D."""
    terms: Counter = Counter()
    for z in enumerate_involutions(n, D):
        if z.length <= D:
            terms[z.length, absolute_length(z)] += 1
    return TruncatedBivariateSeries(D, tuple(terms.items()))


def _step(D: int) -> TruncatedBivariateSeries:
    """qx / (1 - q^2)."""
    return TruncatedBivariateSeries.of(D, {(1, 1): 1}) * _geometric(D, 2)


def recurrence_check(n: int, D: int, series=series_closed_form) -> bool:
    """I_n == I_{n-1} + qx/(1-q^2) I_{n-2} as truncated series."""
    if n < 3:
        raise ValueError("the recurrence starts at n = 3")
    return series(n, D) == series(n - 1, D) + _step(D) * series(n - 2, D)


def lucas_polynomial(n: int) -> dict[tuple[int, int], int]:
    """Coefficients {(i, j): c} of x^i s^j in Luc_n(x, s)."""
    prev, cur = {(0, 0): 2}, {(1, 0): 1}
    if n == 0:
        return prev
    for _ in range(n - 1):
        nxt: Counter = Counter()
        for (i, j), c in cur.items():
            nxt[i + 1, j] += c
        for (i, j), c in prev.items():
            nxt[i, j + 1] += c
        prev, cur = cur, dict(nxt)
    return cur


def lucas(n: int, D: int) -> TruncatedBivariateSeries:
    """Luc_n(1 + q, qx(1 + q)/(1 - q)), truncated at q^D."""
    X = TruncatedBivariateSeries.of(D, {(0, 0): 1, (1, 0): 1})
    S = TruncatedBivariateSeries.of(D, {(1, 1): 1, (2, 1): 1}) * _geometric(D, 1)
    prev, cur = _one(D) * 2, X
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, X * cur + S * prev
    return cur


def lucas_identity_check(n: int, D: int) -> bool:
    """I_n(q, x) == (1 + q)^-n Luc_n(1 + q, qx(1 + q)/(1 - q)) to order D, for n >= 1."""
    if n < 1:
        raise ValueError("the identity is stated for n >= 1")
    inv = _geometric(D, 1, sign=-1)          # 1 / (1 + q)
    factor = _one(D)
    for _ in range(n):
        factor = factor * inv
    return factor * lucas(n, D) == series_closed_form(n, D)


def count_N(n: int, m: int) -> int:
    """Number of involutions in rank n with length m."""
    total = 0
    for j in range(1, n // 2 + 1):
        if (j - m) % 2 == 0:
            total += count_matchings(n, j) * comb((j + m) // 2 - 1, j - 1)
    return total


def count_Nhat(n: int, m: int) -> int:
    """Number of involutions in rank n with hat length m."""
    return sum(count_matchings(n, j) * comb(m - 1, j - 1) for j in range(1, n // 2 + 1))


def coefficient_table(n: int, max_m: int) -> list[dict]:
    """
    Rows (n, m, k, N, Nhat): N counts involutions with length m and k cycles,
    Nhat those with hat length m and k cycles; k = "total" sums over k.
    """
    series = series_closed_form(n, 2 * max_m)
    rows = []
    for m in range(1, max_m + 1):
        for k in range(n // 2 + 1):
            rows.append({"n": n, "m": m, "k": k, "N": series[m, k], "Nhat": series[2 * m - k, k]})
        rows.append({"n": n, "m": m, "k": "total", "N": count_N(n, m), "Nhat": count_Nhat(n, m)})
    return rows


def coefficient_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["n", "m", "k", "N", "Nhat"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
