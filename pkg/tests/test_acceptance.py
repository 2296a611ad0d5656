"""Exit criteria.  Every check is exact; runtime bounds are asserted as stated.

Run ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion in the terminal summary.
"""
import json
import random
import time
from math import comb, factorial

import pytest

from uudd import extras, genfun, permlab, pnk
from uudd.cli import main

SMALL_TABLE = [
    (1,),
    (1, 0, 1),
    (4, 2, 2, 2, 4),
    (42, 28, 22, 20, 22, 28, 42),
    (816, 612, 492, 428, 408, 428, 492, 612, 816),
]


@pytest.fixture(scope="module")
def P60():
    start = time.perf_counter()
    P = genfun.build_P(60)
    return P, time.perf_counter() - start


@pytest.fixture(scope="module")
def table30():
    return pnk.build_table(30)


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_01_table_reproduction(acceptance):
    best = min(timed(lambda: pnk.build_table(4))[1] for _ in range(20))
    t = pnk.build_table(4)
    ok = t.rows == tuple(SMALL_TABLE)
    distinct = {v for row in t.rows for v in row}
    ok = ok and len(distinct) == 13 and t[4, 0] == 408 and t[3, 3] == t[3, -3] == 42
    acceptance(1, "build_table(4) equals the known small table, < 1 ms", ok and best < 1e-3, best)


def test_02_oracle_equivalence(acceptance):
    t = pnk.build_table(4)
    rows, dt = timed(lambda: [permlab.brute_pnk_row(n) for n in range(5)])
    ok = all(rows[n] == t.row(n) for n in range(5))
    acceptance(2, "brute-force rows equal recurrence rows for n <= 4, < 10 s", ok and dt < 10, dt)


def test_03_closed_form_equivalence(acceptance, P60, table30):
    P, build_time = P60
    ok, dt = timed(lambda: all(genfun.extract_pnk(P, n, k) == table30[n, k]
                               for n in range(31) for k in range(-n, n + 1)))
    total = build_time + dt
    acceptance(3, "closed-form coefficients equal the table for n <= 30, < 60 s",
               ok and total < 60, total)


def test_04_recurrence_identities(acceptance, table30):
    ok = (pnk.verify_symmetry(table30) and pnk.verify_second_difference(table30)
          and pnk.verify_edge_relation(table30))
    acceptance(4, "symmetry, second difference and edge relation through n = 30", ok)


def test_05_univariate_coefficients(acceptance, table30):
    s = genfun.uudd_series(13)
    V = [genfun.extract_V(s, n) for n in range(5)]
    ok = V == [1, 2, 14, 204, 5104] and pnk.row_sum(table30, 6) == 10570416
    ok = ok and genfun.extract_V(s, 6) == 10570416
    acceptance(5, "V = 1, 2, 14, 204, 5104 and row_sum(6) = 10570416", ok)


def test_06_theorem_pipeline(acceptance, P60):
    P, _ = P60
    start = time.perf_counter()
    ok_l2 = genfun.verify_L_squared(P)
    Q, R = genfun.build_Q_R(P)
    ok_seidel = R.order >= 59 and genfun.seidel_relation_holds(R)
    ok_sign = genfun.sign_symmetry_holds(R)
    _, _, B = genfun.seidel_even_odd_split(R.restrict_x().coeffs)
    ok_B = B.order >= 40 and B.truncate(40) == genfun.B_closed_form(40)
    dt = time.perf_counter() - start
    acceptance(6, "L^2 P = 4P; R has Seidel relation and sign symmetry to order 58; "
                  "B = 1/(cosh x - x sinh x) to order 40",
               ok_l2 and ok_seidel and ok_sign and ok_B, dt)


def test_07_seidel_property(acceptance):
    rng = random.Random(20261018)
    start = time.perf_counter()
    seeds = [[rng.randint(-9, 9) for _ in range(10)] for _ in range(100)]
    ok = True
    for s in seeds:
        arr, closed = genfun.seidel_closed_form(s)
        ok = ok and arr.values == closed
    # sign-condition seeds: first row e^x B(x) with B even, entries of B in [-9, 9]
    signed = []
    for _ in range(100):
        B = [rng.randint(-9, 9) if i % 2 == 0 else 0 for i in range(10)]
        signed.append([sum(comb(i, l) * B[l] for l in range(i + 1)) for i in range(10)])
    signed += [s for s in seeds
               if all(genfun.SeidelArray.from_seed(s)[(0, i)] == (-1) ** i * s[i] for i in range(10))]
    for s in signed:
        even, odd, Bs = genfun.seidel_even_odd_split(s)
        ok = ok and all(Bs.coeffs[i] == 0 for i in range(1, 10, 2))
    dt = time.perf_counter() - start
    acceptance(7, "100 random seeds: recurrence fill = e^(-2y)A(x+y); sign-symmetric seeds split, < 5 s",
               ok and dt < 5, dt)


def test_08_diagonal_and_row_sum_identities(acceptance, table30):
    s = genfun.uudd_series(61)
    ok = genfun.verify_w_relation(table30, 30, s) and genfun.verify_beta_row_sum(table30, 30, s)
    acceptance(8, "2 p_n(n) = 2n V_(n-1) and row sums = V_n through n = 30", ok)


def test_09_whirlpool(acceptance):
    s = genfun.uudd_series(7)
    counts, dt = timed(lambda: {c: permlab.count_whirlpool(2, c) for c in (2, 3, 4)})
    ok = all(counts[c] == 2 * c * genfun.extract_V(s, c - 1) for c in (2, 3, 4))
    # 2 * 4 * 204 = 1632
    ok = ok and (counts[2], counts[3], counts[4]) == (8, 84, 1632)
    acceptance(9, "2 x c whirlpool counts 8, 84, 1632 equal 2c V_(c-1), < 30 s",
               ok and dt < 30, dt)


def test_10_entringer(acceptance):
    start = time.perf_counter()
    E = extras.entringer_series(7)
    ok = all(E[(m, d - m)] == permlab.brute_alternating_ending_zero(m, d - m)
             for d in range(8) for m in range(d + 1))
    dt = time.perf_counter() - start
    acceptance(10, "Entringer coefficients equal alternating counts for m+n <= 7, < 60 s",
               ok and dt < 60, dt)


def test_11_eulerian(acceptance):
    ok = all(extras.eulerian_poly(m, d - m) == permlab.brute_descent_poly_ending_zero(m, d - m)
             for d in range(6) for m in range(d + 1))
    ok = ok and all(extras.eulerian_poly(m, d - m)(1) == factorial(d)
                    for d in range(9) for m in range(d + 1))
    acceptance(11, "descent polynomials match enumeration (m+n <= 5); A(1) = (m+n)! (m+n <= 8)", ok)


def test_12_cli_contract(acceptance, capsys, monkeypatch):
    def run(*argv):
        code = main(list(argv))
        return code, capsys.readouterr().out

    checks = []
    code, out = run("pnk", "--n", "2", "--format", "csv")
    checks.append(code == 0 and "2,-2,4" in out.splitlines())
    code, out = run("pnk", "--n", "4", "--format", "json")
    checks.append(code == 0 and json.loads(out)["payload"]["rows"][4][-1] == 816)
    code, out = run("pnk", "--n", "1", "--format", "bfile")
    checks.append(out == "1 1\n2 1\n3 0\n4 1\n")
    code, out = run("series", "--name", "uudd", "--order", "9")
    checks.append([l.split(",")[1] for l in out.splitlines()[1:]] == ["1", "2", "14", "204", "5104"])
    code, out = run("series", "--name", "P", "--order", "4")
    checks.append([l.split(",")[2] for l in out.splitlines()[1:] if sum(map(int, l.split(",")[:2])) == 4]
                  == ["4", "2", "2", "2", "4"])
    code, out = run("series", "--name", "entringer", "--order", "0", "--format", "bfile")
    checks.append(out == "1 1\n")
    checks.append(run("brute", "--kind", "whirlpool", "--rows", "2", "--cols", "2")[1] == "8\n")
    checks.append(run("brute", "--kind", "pnk", "--n", "1")[1] == "1,0,1\n")
    checks.append(run("brute", "--kind", "uudd", "--length", "1")[1] == "1\n")
    checks.append(run("brute", "--kind", "uudd", "--length", "15")[0] == 3)
    checks.append(run("verify", "--suite", "all")[0] == 0)
    monkeypatch.setenv("UUDD_CORRUPT", "1")
    checks.append(run("verify", "--suite", "all")[0] == 1)
    acceptance(12, f"CLI formats and exit codes ({sum(checks)}/{len(checks)} checks)", all(checks))
