"""Command-line front end.

    uudd pnk     --n 4 --format csv|json|bfile
    uudd series  --name uudd|diag|P|entringer --order 9 --format csv|json|bfile
    uudd brute   --kind pnk|uudd|whirlpool|alternating|descents ...
    uudd verify  --suite lemmas|theorem|seidel|section3|all

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 an
enumeration exceeded its feasibility bound.  Setting ``UUDD_CORRUPT`` makes
``verify`` check a deliberately damaged table (used to test the failure path).
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from . import extras, genfun, kernels, permlab, pnk
from .fps import Series2

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3
DEFAULT_MAX_ORDER = 120


def max_order() -> int:
    return max(DEFAULT_MAX_ORDER, int(os.environ.get("UUDD_MAX_ORDER", "0") or 0))


class UsageError(Exception):
    pass


def _num(v) -> int | str:
    """Integers stay integers; other rationals become "p/q" strings."""
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _dump_json(command: str, params: dict, payload, status: str = "ok") -> str:
    record = {"meta": {"command": command, "params": params, "status": status},
              "payload": payload}
    return json.dumps(record) + "\n"


def _csv(header: str, rows) -> str:
    lines = [header] + [",".join(str(v) for v in r) for r in rows]
    return "\n".join(lines) + "\n"


def _bfile(values, start: int = 1) -> str:
    return "".join(f"{i} {v}\n" for i, v in enumerate(values, start))


# -- pnk ---------------------------------------------------------------------

def cmd_pnk(args) -> tuple[str, int]:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    table = pnk.build_table(args.n)
    if args.format == "json":
        return _dump_json("pnk", {"n": args.n}, {"rows": [list(r) for r in table.rows]}), EXIT_OK
    if args.format == "bfile":
        return _bfile(v for r in table.rows for v in r), EXIT_OK
    rows = ((n, k, table[n, k]) for n in range(args.n + 1) for k in range(-n, n + 1))
    return _csv("n,k,p", rows), EXIT_OK


# -- series ------------------------------------------------------------------

def _series_entries(name: str, order: int) -> list[tuple]:
    """Descaled coefficients as ``(index..., value)`` tuples."""
    if name == "uudd":
        s = genfun.uudd_series(order)
        return [(2 * n + 1, genfun.extract_V(s, n)) for n in range((order - 1) // 2 + 1)]
    if name == "diag":
        s = genfun.diag_series(order)
        out = []
        for n in range(order // 2 + 1):
            v = s[2 * n] / 2 ** n
            out.append((2 * n, _num(v)))
        return out
    if name == "P":
        P = genfun.build_P(order)
        out = []
        for n in range(order // 2 + 1):
            for k in range(-n, n + 1):
                out.append((n + k, n - k, genfun.extract_pnk(P, n, k)))
        return out
    if name == "entringer":
        E = extras.entringer_series(order)
        return [(m, d - m, _num(E[(m, d - m)])) for d in range(order + 1) for m in range(d + 1)]
    raise UsageError(f"unknown series {name!r}")


def cmd_series(args) -> tuple[str, int]:
    if not 0 <= args.order <= max_order():
        raise UsageError(f"--order must be in 0..{max_order()}")
    entries = _series_entries(args.name, args.order)
    bivariate = args.name in ("P", "entringer")
    if args.format == "json":
        keys = ("i", "j", "value") if bivariate else ("i", "value")
        payload = {"coefficients": [dict(zip(keys, e)) for e in entries]}
        return _dump_json("series", {"name": args.name, "order": args.order}, payload), EXIT_OK
    if args.format == "bfile":
        if bivariate:
            return _bfile(e[-1] for e in entries), EXIT_OK
        # univariate sequences use the sequence index n, starting at 0
        return _bfile((e[-1] for e in entries), start=0), EXIT_OK
    return _csv("i,j,value" if bivariate else "i,value", entries), EXIT_OK


# -- brute -------------------------------------------------------------------

def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--kind {args.kind} requires {', '.join(missing)}")


def cmd_brute(args) -> tuple[str, int]:
    kind = args.kind
    if kind == "pnk":
        _need(args, "n")
        row = permlab.brute_pnk_row(args.n)
        params = {"n": args.n}
        values = list(row)
        csv_rows = [(args.n, k - args.n, v) for k, v in enumerate(row)]
        header = "n,k,p"
    elif kind == "uudd":
        _need(args, "length")
        c = permlab.brute_uudd_count(args.length)
        params, values = {"length": args.length}, [c]
        header, csv_rows = "length,count", [(args.length, c)]
    elif kind == "whirlpool":
        _need(args, "rows", "cols")
        c = permlab.count_whirlpool(args.rows, args.cols)
        params, values = {"rows": args.rows, "cols": args.cols}, [c]
        header, csv_rows = "rows,cols,count", [(args.rows, args.cols, c)]
    elif kind == "alternating":
        _need(args, "m", "n")
        c = permlab.brute_alternating_ending_zero(args.m, args.n)
        params, values = {"m": args.m, "n": args.n}, [c]
        header, csv_rows = "m,n,count", [(args.m, args.n, c)]
    else:
        _need(args, "m", "n")
        poly = permlab.brute_descent_poly_ending_zero(args.m, args.n)
        params, values = {"m": args.m, "n": args.n}, list(poly.coeffs)
        header = "m,n,descents,count"
        csv_rows = [(args.m, args.n, d, c) for d, c in enumerate(poly.coeffs)]

    if args.format == "json":
        return _dump_json("brute", {"kind": kind, **params},
                          {"values": values, "backend": kernels.BACKEND}), EXIT_OK
    if args.format == "csv":
        return _csv(header, csv_rows), EXIT_OK
    if args.format == "bfile":
        return _bfile(values), EXIT_OK
    return ",".join(str(v) for v in values) + "\n", EXIT_OK


# -- verify ------------------------------------------------------------------

Check = tuple[str, Callable[[], bool]]


def _table(n: int) -> pnk.PnkTable:
    t = pnk.build_table(n)
    if os.environ.get("UUDD_CORRUPT"):
        t = t.replace(t.N, 0, t[t.N, 0] + 1)
    return t


def _recurrence_checks(args) -> list[Check]:
    N = args.n
    t = _table(N)
    return [
        ("row 0 is p_0(0) = 1", lambda: t.row(0) == (1,)),
        ("prefix-sum recurrence equals the direct |j-k| sum",
         lambda: t == pnk.build_table(N, method="direct")),
        (f"symmetry: p_n(-k) = p_n(k), n <= {N}", lambda: pnk.verify_symmetry(t)),
        (f"second difference: p_(n+1)(k+1) - 2p_(n+1)(k) + p_(n+1)(k-1) = 2p_n(k), n < {N}",
         lambda: pnk.verify_second_difference(t)),
        (f"edge relation: (n-1)p_n(n) = n p_n(n-1), 1 <= n <= {N}",
         lambda: pnk.verify_edge_relation(t)),
        ("recurrence rows equal brute-force enumeration, n <= 4",
         lambda: all(t.row(n) == permlab.brute_pnk_row(n) for n in range(min(N, 4) + 1))),
    ]


def _theorem_checks(args) -> list[Check]:
    order = args.order
    state: dict = {}

    def P():
        if "P" not in state:
            state["P"] = genfun.build_P(order)
        return state["P"]

    def QR():
        if "QR" not in state:
            state["QR"] = genfun.build_Q_R(P())
        return state["QR"]

    def three_way():
        nmax = order // 2
        t = _table(nmax)
        closed = all(genfun.extract_pnk(P(), n, k) == t[n, k]
                     for n in range(nmax + 1) for k in range(-n, n + 1))
        brute = all(permlab.brute_pnk_row(n) == t.row(n) for n in range(min(nmax, 4) + 1))
        return closed and brute

    def parity_and_swap():
        s = P().series
        return s.odd_part() == Series2.zero(s.order) and s.swap() == s

    def B_matches():
        _, R = QR()
        _, _, B = genfun.seidel_even_odd_split(R.restrict_x().coeffs)
        return B == genfun.B_closed_form(B.order)

    return [
        (f"three-way p_n(k) agreement: enumeration (n <= 4), recurrence, closed form (n <= {order // 2})",
         three_way),
        ("P has no odd-degree terms and P(x,y) = P(y,x)", parity_and_swap),
        ("L^2(P) = 4P with L = d/dx - d/dy", lambda: genfun.verify_L_squared(P())),
        ("R = P + L(P)/2 satisfies a_(i+1,j) - a_(i,j+1) = 2a_(i,j)",
         lambda: genfun.seidel_relation_holds(QR()[1])),
        ("R satisfies a_(j,i) = (-1)^(i+j) a_(i,j)", lambda: genfun.sign_symmetry_holds(QR()[1])),
        ("P(x,0) = 1 + x Q(x,0)", lambda: genfun.verify_diag_from_Q(P())),
        ("R = e^(x-y) B(x+y) with B = 1/(cosh x - x sinh x)", B_matches),
    ]


def _even_seed(rng: random.Random, length: int) -> list[int]:
    """First row ``A = e^x B`` for a random even ``B``: satisfies the sign condition."""
    B = [rng.randint(-9, 9) if i % 2 == 0 else 0 for i in range(length)]
    return [sum(comb(i, l) * B[l] for l in range(i + 1)) for i in range(length)]


def _seidel_checks(args) -> list[Check]:
    rng = random.Random(args.rng_seed)
    seeds = [[rng.randint(-9, 9) for _ in range(10)] for _ in range(args.seeds)]
    even_seeds = [_even_seed(rng, 10) for _ in range(args.seeds)]

    def closed():
        for s in seeds + even_seeds:
            try:
                genfun.seidel_closed_form(s)
            except genfun.IdentityViolation:
                return False
        return True

    def split():
        for s in even_seeds:
            try:
                genfun.seidel_even_odd_split(s)
            except (genfun.IdentityViolation, genfun.SymmetryViolation):
                return False
        return True

    def rejects():
        try:
            genfun.seidel_even_odd_split([1, 0, 1, 0, 1, 0])  # A = cosh x
        except genfun.SymmetryViolation:
            return True
        return False

    return [
        (f"array filled by a_(i,j+1) = a_(i+1,j) - 2a_(i,j) equals e^(-2y)A(x+y), {2 * args.seeds} seeds",
         closed),
        (f"sign-symmetric seeds split into cosh(x-y)B(x+y) + sinh(x-y)B(x+y), B even, {args.seeds} seeds",
         split),
        ("seed A = cosh x is rejected by the sign condition", rejects),
    ]


def _corollary_checks(args) -> list[Check]:
    N = args.n
    t = _table(N)
    s = genfun.uudd_series(max(2 * N + 1, 13))
    V = [genfun.extract_V(s, n) for n in range(max(N, 6) + 1)]

    def whirl():
        return all(permlab.count_whirlpool(2, c) == 2 * c * V[c - 1] for c in range(1, 5))

    def entringer():
        E = extras.entringer_series(7)
        return all(E[(m, d - m)] == permlab.brute_alternating_ending_zero(m, d - m)
                   for d in range(8) for m in range(d + 1))

    def eulerian_at_one():
        return all(extras.eulerian_poly(m, d - m)(1) == factorial(d)
                   for d in range(9) for m in range(d + 1))

    return [
        ("uudd series gives V = 1, 2, 14, 204, 5104 and V_6 = 10570416",
         lambda: V[:5] == [1, 2, 14, 204, 5104] and V[6] == 10570416),
        (f"2 p_n(n) = 2n V_(n-1), 1 <= n <= {N}", lambda: genfun.verify_w_relation(t, N, s)),
        (f"beta-integral collapse: sum_k p_n(k) = V_n, n <= {N}",
         lambda: genfun.verify_beta_row_sum(t, N, s)),
        ("2 x c whirlpool count = 2c V_(c-1), c <= 4", whirl),
        ("(cos y + sin y)/cos(x+y) counts alternating permutations ending in 0, m+n <= 7", entringer),
        ("e^x/(1 - t e^(x+y)) descent polynomials match enumeration, m+n <= 5",
         lambda: extras.verify_eulerian_identity(5)),
        ("A_(m,n)(1) = (m+n)!, m+n <= 8", eulerian_at_one),
    ]


SUITES = {
    "lemmas": _recurrence_checks,
    "theorem": _theorem_checks,
    "seidel": _seidel_checks,
    "section3": _corollary_checks,
}


def cmd_verify(args) -> tuple[str, int]:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if not 2 <= args.order <= max_order():
        raise UsageError(f"--order must be in 2..{max_order()}")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        for label, fn in SUITES[name](args):
            start = time.perf_counter()
            try:
                ok = bool(fn())
            except (ArithmeticError, AssertionError, ValueError) as exc:
                print(f"{label}: {exc}", file=sys.stderr)
                ok = False
            results.append((name, label, ok, time.perf_counter() - start))
    failed = sum(not ok for *_, ok, _ in results)
    code = EXIT_FAIL if failed else EXIT_OK
    if args.format == "json":
        payload = {"checks": [{"suite": s, "check": l, "pass": ok} for s, l, ok, _ in results]}
        params = {"suite": args.suite, "n": args.n, "order": args.order}
        return _dump_json("verify", params, payload, "fail" if failed else "ok"), code
    lines = [f"{'PASS' if ok else 'FAIL'}  [{s}] {l}" for s, l, ok, _ in results]
    if args.verbose:
        for s, l, ok, dt in results:
            print(f"{dt:8.3f}s  {l}", file=sys.stderr)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", code


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uudd", description="Up-up-or-down-down permutation counts and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pnk", help="table of p_n(k) from the recurrence")
    p.add_argument("--n", type=int, default=4, help="last row (default 4)")
    p.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")
    p.set_defaults(func=cmd_pnk)

    p = sub.add_parser("series", help="descaled generating-function coefficients")
    p.add_argument("--name", choices=("uudd", "diag", "P", "entringer"), required=True)
    p.add_argument("--order", type=int, default=12, help="truncation order (default 12)")
    p.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("brute", help="brute-force enumeration counts")
    p.add_argument("--kind", choices=("pnk", "uudd", "whirlpool", "alternating", "descents"),
                   required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--format", choices=("plain", "csv", "json", "bfile"), default="plain")
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--n", type=int, default=30, help="last table row checked (default 30)")
    p.add_argument("--order", type=int, default=60, help="series total degree (default 60)")
    p.add_argument("--seeds", type=int, default=100, help="random seed rows per Seidel check")
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-v", "--verbose", action="store_true", help="per-check timings on stderr")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"uudd: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except permlab.FeasibilityError as exc:
        print(f"uudd: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:
        print(f"uudd: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
