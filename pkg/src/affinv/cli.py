"""
Command line driver.

Involutions are given with --z in one of three forms:

  "[a1,...,an]"                 a window (an extended window also works)
  "(a,b)(c,d)..."               2-cycles; "(a,b:w)" attaches a weight w
  "[cycles (a,b),(c,d),...]"    the same cycle list in bracket form

Exit status is 0 on success, 1 when a verification fails, 2 on bad usage and
3 when a search bound is exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import re
import sys
import time
from pathlib import Path

from .affine_core import AffinePermutation, ResourceBoundError, from_window
from .atoms import atom_poset, atoms_bruteforce, poset_to_dot, poset_to_json
from .bruhat_inv import covers_up_I, tau
from .genfunc import coefficient_csv, coefficient_table
from .involutions import (
    absolute_length, canonical_cycles, canonical_pair, check_involution, dumps,
    enumerate_involutions, hat_length, involution_from_cycles, standardize,
    winding_edges,
)
from .verify import SUITES, SuiteConfig, run_suite
from .weighted import WeightedInvolution, weighted

__all__ = ["main", "run", "parse_involution", "parse_weighted", "emit_winding_svg", "winding_svg"]

_CYCLE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*(?::\s*(\d+)\s*)?\)")


class UsageError(ValueError):
    """Bad flags or unparsable input."""


def _parse_cycles(text: str) -> list[tuple[int, int, int]]:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1].strip()
        if body.startswith("cycles"):
            body = body[len("cycles"):]
    found = [(int(a), int(b), int(w or 0)) for a, b, w in _CYCLE.findall(body)]
    leftover = _CYCLE.sub("", body).replace(",", "").strip()
    if leftover:
        raise UsageError(f"cannot parse {text!r}")
    return found


def parse_weighted(text: str, n: int) -> WeightedInvolution:
    """Parse --z input into a weighted involution (weights default to 0)."""
    text = text.strip()
    try:
        if text.startswith("[") and "(" not in text:
            values = [int(v) for v in text.strip("[]").split(",") if v.strip()]
            return weighted(check_involution(from_window(n, values)))
        cycles = _parse_cycles(text)
        base = involution_from_cycles(n, [(a, b) for a, b, _ in cycles])
    except UsageError:
        raise
    except ValueError as err:
        raise UsageError(f"{text!r} is not an involution of rank {n}: {err}") from err
    ws: dict[tuple[int, int], int] = {}
    for a, b, w in cycles:
        if w:
            ws[canonical_pair(n, a, b)] = w
    return weighted(base, ws)


def parse_involution(text: str, n: int) -> AffinePermutation:
    theta = parse_weighted(text, n)
    if theta.weights:
        raise UsageError("weights are not allowed here")
    return theta.base


def winding_svg(z) -> str:
    """The winding diagram of z as a standalone SVG document."""
    n = z.n
    size, cx, cy, R = 320, 160.0, 160.0, 100.0

    def point(k: int, r: float = R) -> tuple[float, float]:
        ang = math.pi / 2 - 2 * math.pi * (k - 1) / n
        return cx + r * math.cos(ang), cy - r * math.sin(ang)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{R:.2f}" fill="lightgray"/>']
    for edge in winding_edges(z):
        a, b = sorted((edge.start, edge.target))
        # clockwise arc outside the disc, pushed further out for larger labels
        height = 30 + 12 * min(abs(edge.label), 4)
        steps = 48
        pts = [point(a + (b - a) * s / steps, R + height * math.sin(math.pi * s / steps))
               for s in range(steps + 1)]
        path = " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)
        out.append(f'<polyline points="{path}" fill="none" stroke="blue" stroke-width="1.5"/>')
        lx, ly = point(a + (b - a) / 2, R + height + 10)
        out.append(f'<text x="{lx:.2f}" y="{ly + 4:.2f}" font-size="12" '
                   f'text-anchor="middle">{edge.label}</text>')
    for k in range(1, n + 1):
        x, y = point(k)
        lx, ly = point(k, R - 14)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
        out.append(f'<text x="{lx:.2f}" y="{ly + 4:.2f}" font-size="11" text-anchor="middle">{k}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_winding_svg(z, path: str | Path) -> None:
    Path(path).write_text(winding_svg(z))


def _write(text: str, dest: str | None) -> None:
    if dest in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def _need_z(args) -> str:
    if args.z is None:
        raise UsageError("--z is required")
    return args.z


def cmd_enumerate(args) -> int:
    zs = list(enumerate_involutions(args.n, args.max_hat))
    if args.json is not None:
        _write(dumps(zs), args.json)
        return 0
    for z in zs:
        cycles = "".join(f"({a},{b})" for a, b in canonical_cycles(z))
        print(f"{z!r}\t{cycles or '()'}\tlen={z.length}\tcycles={absolute_length(z)}\that={hat_length(z)}")
    return 0


def cmd_atoms(args) -> int:
    z = parse_involution(_need_z(args), args.n)
    nodes = atom_poset(z).nodes
    if args.check and set(nodes) != atoms_bruteforce(z):
        print("atom poset differs from brute force", file=sys.stderr)
        return 1
    if args.json is not None:
        _write("".join(json.dumps(list(w.window)) + "\n" for w in nodes), args.json)
    else:
        for w in sorted(nodes, key=lambda w: w.window):
            print(repr(w))
    return 0


def cmd_poset(args) -> int:
    poset = atom_poset(parse_involution(_need_z(args), args.n))
    if args.dot is not None:
        _write(poset_to_dot(poset), args.dot)
    if args.json is not None:
        _write(poset_to_json(poset), args.json)
    if args.dot is None and args.json is None:
        print(f"{len(poset.nodes)} atoms, rank sizes {poset.rank_sizes()}")
        print(f"bottom {poset.nodes[poset.bottom]!r}, top {poset.nodes[poset.top]!r}")
    return 0


def cmd_covers(args) -> int:
    y = parse_involution(_need_z(args), args.n)
    for c in covers_up_I(y):
        print(f"{c.upper!r}\twitness={c.witness}\tcase={c.case}")
    return 0


def cmd_counts(args) -> int:
    rows = coefficient_table(args.n, args.max_m)
    if args.check:
        hats = args.max_m
        seen: dict[int, int] = {}
        for z in enumerate_involutions(args.n, hats):
            if 1 <= z.length <= args.max_m:
                seen[z.length] = seen.get(z.length, 0) + 1
        for row in rows:
            if row["k"] == "total" and row["N"] != seen.get(row["m"], 0):
                print(f"N_{args.n}({row['m']}) = {row['N']} but enumeration finds "
                      f"{seen.get(row['m'], 0)}", file=sys.stderr)
                return 1
    _write(coefficient_csv(rows), args.csv)
    return 0


def cmd_verify(args) -> int:
    cfg = SuiteConfig(n=args.n, max_hat=args.max_hat, max_weight=args.max_weight, cap=args.cap,
                      lattice_budget=args.lattice_budget)
    ok = True
    for name in (list(SUITES) if args.suite == "all" else [args.suite]):
        start = time.perf_counter()
        (res,) = run_suite(name, cfg)
        print(f"{res.line()} ({time.perf_counter() - start:.1f}s)", flush=True)
        for failure in res.failures[:20]:
            print(f"  {failure}")
        ok &= res.ok
    return 0 if ok else 1


def cmd_standardize(args) -> int:
    w = parse_involution(_need_z(args), args.n)
    if not args.E:
        raise UsageError("--E is required")
    E = [int(v) for v in args.E.split(",")]
    print(repr(standardize(w, E)))
    return 0


def cmd_tau(args) -> int:
    y = parse_involution(_need_z(args), args.n)
    if args.i is None or args.j is None or args.i >= args.j:
        raise UsageError("--i and --j with i < j are required")
    z = tau(args.n, args.i, args.j, y)
    print(f"{z!r}\t{''.join(f'({a},{b})' for a, b in canonical_cycles(z))}")
    return 0


def cmd_winding(args) -> int:
    z = parse_involution(_need_z(args), args.n)
    if args.svg is not None:
        _write(winding_svg(z), args.svg)
    else:
        for e in winding_edges(z):
            print(f"{e.start} -> {e.target}\tlabel={e.label}")
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate, "atoms": cmd_atoms, "poset": cmd_poset,
    "covers": cmd_covers, "counts": cmd_counts, "verify": cmd_verify,
    "standardize": cmd_standardize, "tau": cmd_tau, "winding": cmd_winding,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affinv", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("suite", nargs="?", default="all", choices=[*SUITES, "all"],
                        help="suite for the verify command")
    parser.add_argument("--n", type=int, default=4, help="rank (default 4)")
    parser.add_argument("--z", help="involution, see the input forms above")
    parser.add_argument("--max-hat", type=int, default=4, help="hat length bound (default 4)")
    parser.add_argument("--max-weight", type=int, default=4, help="matching weight bound (default 4)")
    parser.add_argument("--cap", type=int, default=12, help="series truncation degree (default 12)")
    parser.add_argument("--max-m", type=int, default=10, help="largest length in counts (default 10)")
    parser.add_argument("--lattice-budget", type=int, default=30,
                        help="bound on hat length times n for verify lattice (default 30)")
    parser.add_argument("--E", help="comma separated set for standardize")
    parser.add_argument("--i", type=int, help="first position for tau")
    parser.add_argument("--j", type=int, help="second position for tau")
    parser.add_argument("--dot", nargs="?", const="-", help="write DOT (to a path or stdout)")
    parser.add_argument("--svg", nargs="?", const="-", help="write SVG (to a path or stdout)")
    parser.add_argument("--json", nargs="?", const="-", help="write JSON (to a path or stdout)")
    parser.add_argument("--csv", nargs="?", const="-", help="write CSV (to a path or stdout)")
    parser.add_argument("--check", action="store_true", help="cross-check against enumeration")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized choices")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.n < 1:
        parser.print_usage(sys.stderr)
        print("affinv: error: --n must be positive", file=sys.stderr)
        return 2
    random.seed(args.seed)
    try:
        return COMMANDS[args.command](args)
    except UsageError as err:
        parser.print_usage(sys.stderr)
        print(f"affinv: error: {err}", file=sys.stderr)
        return 2
    except ResourceBoundError as err:
        print(f"affinv: resource bound exceeded: {err}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())
