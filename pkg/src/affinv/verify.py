"""
Exhaustive checks shared by the command line and the experiment scripts.

Each suite compares a fast construction with an independent slow one over a
bounded range and returns a `SuiteResult`.  Failures are collected as strings
in a deterministic order, never raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .affine_core import elements_by_length, length
from .atoms import (
    atom_poset, atoms_bruteforce, is_atom, is_atom_local, is_atom_of,
    is_lattice, mobius_values,
)
from .bruhat_inv import (
    bruhat_covers_I_bruteforce, covering_property_check, covers_up_I,
    hat_increment_ok, tau,
)
from .genfunc import (
    count_N, lucas_identity_check, recurrence_check, series_bruteforce,
    series_closed_form,
)
from .involutions import absolute_length, enumerate_involutions, hat_length
from .weighted import (
    enumerate_matchings, lambda_left, lambda_right, omega_left, omega_right,
    w_abs_length, w_length,
)

__all__ = [
    "SuiteConfig", "SuiteResult", "SUITES", "run_suite",
    "verify_bijection", "verify_atoms", "verify_covers",
    "verify_covering_property", "verify_lattice", "verify_series",
]


@dataclass(frozen=True)
class SuiteConfig:
    """Bounds for the suites; every search is finite."""
    n: int = 4
    max_hat: int = 4
    max_weight: int = 4
    cap: int = 12
    lattice_budget: int = 30     # hat_length(z) * n bound for the lattice sweep
    workers: int | None = None


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failures"


def _ranks(cfg: SuiteConfig, lo: int = 2) -> range:
    return range(lo, cfg.n + 1)


def verify_bijection(cfg: SuiteConfig) -> SuiteResult:
    """omega o lambda is the identity on involutions and lambda o omega on matchings."""
    res = SuiteResult("bijection")
    for n in _ranks(cfg):
        for z in enumerate_involutions(n, cfg.max_hat):
            for lam, om, side in ((lambda_right, omega_right, "R"), (lambda_left, omega_left, "L")):
                res.checked += 1
                theta = lam(z)
                if om(theta)[0] != z:
                    res.failures.append(f"omega_{side}(lambda_{side}({z!r})) != z")
                if w_length(theta) != length(z) or w_abs_length(theta) != absolute_length(z):
                    res.failures.append(f"lambda_{side}({z!r}) changes a length")
        for theta in enumerate_matchings(n, cfg.max_weight):
            res.checked += 1
            if lambda_right(omega_right(theta)[0]) != theta:
                res.failures.append(f"lambda_R(omega_R({theta!r})) != theta")
            if lambda_left(omega_left(theta)[0]) != theta:
                res.failures.append(f"lambda_L(omega_L({theta!r})) != theta")
    return res


def verify_atoms(cfg: SuiteConfig) -> SuiteResult:
    """Poset atoms match brute force; both membership tests match the definition."""
    res = SuiteResult("atoms")
    for n in _ranks(cfg):
        for z in enumerate_involutions(n, cfg.max_hat):
            res.checked += 1
            if set(atom_poset(z).nodes) != atoms_bruteforce(z):
                res.failures.append(f"atom poset of {z!r} differs from brute force")
        layers = dict(elements_by_length(n, cfg.max_hat))
        for y in enumerate_involutions(n, cfg.max_hat):
            for w in layers[hat_length(y)]:
                res.checked += 1
                truth = is_atom(w.inverse, y)
                if is_atom_of(w, y) != truth:
                    res.failures.append(f"is_atom_of({w!r}, {y!r}) != {truth}")
                if is_atom_local(w, y) != truth:
                    res.failures.append(f"is_atom_local({w!r}, {y!r}) != {truth}")
    return res


def verify_covers(cfg: SuiteConfig) -> SuiteResult:
    """Covers from tau match brute force; the increment criterion matches hat lengths."""
    res = SuiteResult("covers")
    for n in _ranks(cfg):
        for y in enumerate_involutions(n, cfg.max_hat):
            res.checked += 1
            fast = {c.upper for c in covers_up_I(y)}
            if fast != bruhat_covers_I_bruteforce(y):
                res.failures.append(f"covers of {y!r} differ from brute force")
            h = hat_length(y)
            for i in range(1, n + 1):
                for j in range(i + 1, i + n * (h + 3)):
                    if (j - i) % n == 0:
                        continue
                    z = tau(n, i, j, y)
                    if z == y:
                        continue
                    res.checked += 1
                    if hat_increment_ok(y, i, j) != (hat_length(z) == h + 1):
                        res.failures.append(f"hat_increment_ok({y!r}, {i}, {j}) is wrong")
    return res


def verify_covering_property(cfg: SuiteConfig) -> SuiteResult:
    res = SuiteResult("covering-property")
    for n in _ranks(cfg):
        report = covering_property_check(n, cfg.max_hat, cfg.workers)
        res.checked += report.pairs_checked
        res.failures.extend(report.violations)
    return res


def verify_lattice(cfg: SuiteConfig) -> SuiteResult:
    """Atom posets with hat_length(z) * n <= budget are lattices with Mobius values in {-1, 0, 1}."""
    res = SuiteResult("lattice")
    for n in range(2, cfg.lattice_budget + 1):
        for z in enumerate_involutions(n, cfg.lattice_budget // n):
            if hat_length(z) == 0:
                continue
            res.checked += 1
            poset = atom_poset(z)
            if not is_lattice(poset):
                res.failures.append(f"atoms of {z!r} do not form a lattice")
            elif not mobius_values(poset, max_nodes=10_000) <= {-1, 0, 1}:
                res.failures.append(f"atoms of {z!r} have a Mobius value outside {{-1, 0, 1}}")
    return res


def verify_series(cfg: SuiteConfig) -> SuiteResult:
    """Closed form against enumeration, the recurrence, the Lucas identity and N_n(m)."""
    res = SuiteResult("series")
    D = cfg.cap
    for n in range(1, cfg.n + 1):
        res.checked += 1
        if series_closed_form(n, D) != series_bruteforce(n, D):
            res.failures.append(f"closed form != enumeration for n={n}, D={D}")
        if n >= 3:
            res.checked += 1
            if not recurrence_check(n, D):
                res.failures.append(f"recurrence fails for n={n}, D={D}")
        res.checked += 1
        if not lucas_identity_check(n, D):
            res.failures.append(f"Lucas identity fails for n={n}, D={D}")
        if n >= 2:
            at_one = series_closed_form(n, D).at_x_equals_one()
            for m in range(1, D + 1):
                res.checked += 1
                if count_N(n, m) != at_one[m]:
                    res.failures.append(f"N_{n}({m}) != series coefficient")
    return res


SUITES = {
    "bijection": verify_bijection,
    "atoms": verify_atoms,
    "covers": verify_covers,
    "covering-property": verify_covering_property,
    "lattice": verify_lattice,
    "series": verify_series,
}


def run_suite(name: str, cfg: SuiteConfig) -> list[SuiteResult]:
    if name == "all":
        return [fn(cfg) for fn in SUITES.values()]
    return [SUITES[name](cfg)]
