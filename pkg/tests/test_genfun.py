from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from uudd import genfun
from uudd.fps import Series1, Series2, compose_linear, elementary
from uudd.genfun import (B_closed_form, IdentityViolation, NonIntegralError,
                         SeidelArray, SymmetryViolation, apply_L, beta_integral,
                         build_P, build_Q_R, diag_series, extract_pnk, extract_V,
                         seidel_closed_form, seidel_even_odd_split,
                         seidel_relation_holds, sign_symmetry_holds, uudd_series,
                         verify_beta_row_sum, verify_diag_from_Q,
                         verify_L_squared, verify_w_relation)
from uudd.permlab import brute_pnk_row
from uudd.pnk import build_table

from conftest import linear_subst, poly_mul2, to_egf2


@pytest.fixture(scope="module")
def P20():
    return build_P(20)


def test_P_coefficients(P20):
    assert P20[(0, 0)] == 1
    assert P20[(4, 0)] == 4 * 4
    assert P20[(4, 4)] == 16 * 408


def test_extract_pnk(P20):
    assert extract_pnk(P20, 0, 0) == 1
    assert extract_pnk(P20, 3, 1) == extract_pnk(P20, 3, -1) == 22
    assert extract_pnk(P20, 4, 2) == 492


def test_extract_rejects_bad_coefficient():
    fake = Series2([[1, 0, 3], [0, 0], [0]])  # 3 at n=1 is not 2 * integer
    with pytest.raises(NonIntegralError):
        extract_pnk(fake, 1, -1)


def test_three_way_agreement(P20):
    t = build_table(10)
    for n in range(11):
        closed = tuple(extract_pnk(P20, n, k) for k in range(-n, n + 1))
        assert closed == t.row(n)
        if n <= 4:
            assert closed == brute_pnk_row(n)


def test_P_parity_and_symmetry(P20):
    s = P20.series
    assert s.odd_part() == Series2.zero(20)
    assert s.swap() == s


def test_apply_L_examples():
    f = Series1([1, 2, 3, 4, 5, 6])
    assert apply_L(compose_linear(f, 1, 1)) == Series2.zero(4)
    e = compose_linear(elementary("exp", 6), 1, -1)
    assert apply_L(e) == (e * 2).truncate(5)


def test_L_squared(P20):
    assert verify_L_squared(P20)
    assert not verify_L_squared(P20.series + Series2.linear(1, 0, 20) * Series2.linear(1, 0, 20))


def test_Q_and_R(P20):
    Q, R = build_Q_R(P20)
    assert Q[(0, 0)] == 0
    assert seidel_relation_holds(R)
    assert sign_symmetry_holds(R)
    assert apply_L(R) == (R * 2).truncate(R.order - 1)
    assert not seidel_relation_holds(P20.series)


def test_P_diagonal_from_Q(P20):
    assert verify_diag_from_Q(P20)
    Q, _ = build_Q_R(P20)
    for n in range(1, 10):
        assert P20[(2 * n, 0)] == 2 * n * Q[(2 * n - 1, 0)]


def test_B_from_R(P20):
    _, R = build_Q_R(P20)
    _, _, B = seidel_even_odd_split(R.restrict_x().coeffs)
    assert B == B_closed_form(R.order)


# -- Seidel arrays ------------------------------------------------------------

def test_seidel_zero_and_exp():
    arr, _ = seidel_closed_form([0] * 6)
    assert arr.values == Series2.zero(5)
    arr, _ = seidel_closed_form([1] * 8)
    assert all(v == (-1) ** j for (i, j), v in arr.values.items())
    assert arr.relation_holds()


def oracle_closed_form(seed):
    """exp(-2y) A(x+y) via ordinary polynomials."""
    n = len(seed) - 1
    A = [Fraction(a, factorial(i)) for i, a in enumerate(seed)]
    exp_m2y = {(0, j): Fraction((-2) ** j, factorial(j)) for j in range(n + 1)}
    return Series2(to_egf2(poly_mul2(exp_m2y, linear_subst(A, 1, 1, n), n), n))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=10, max_size=10))
def test_seidel_fill_matches_closed_form(seed):
    arr, closed = seidel_closed_form(seed)
    assert arr.values == closed == oracle_closed_form(seed)
    assert arr.relation_holds()


def even_seed(B):
    return [sum(comb(i, l) * B[l] for l in range(i + 1)) for i in range(len(B))]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=10, max_size=10))
def test_even_odd_split(raw):
    B = [v if i % 2 == 0 else 0 for i, v in enumerate(raw)]
    even, odd, got = seidel_even_odd_split(even_seed(B))
    assert got == Series1(B)
    assert even + odd == SeidelArray.from_seed(even_seed(B)).values


def test_split_rejects_cosh_seed():
    # A = cosh: first column of exp(-2y) cosh(x+y) is (-1)^i (1 + 3^i)/2
    with pytest.raises(SymmetryViolation):
        seidel_even_odd_split([1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1])


def test_split_zero_seed():
    even, odd, B = seidel_even_odd_split([0] * 7)
    assert B == Series1.zero(6)
    assert even == odd == Series2.zero(6)


def test_closed_form_violation_detected(monkeypatch):
    bad = SeidelArray(Series2([[1, 0], [0]]))
    monkeypatch.setattr(SeidelArray, "from_seed", classmethod(lambda cls, s: bad))
    with pytest.raises(IdentityViolation):
        seidel_closed_form([1, 1])


# -- univariate series ---------------------------------------------------------

def test_diag_series():
    d = diag_series(8)
    assert d[0] == 1
    assert d[4] == 4 * 4
    assert d[8] == 16 * 816


def test_uudd_values():
    s = uudd_series(13)
    assert [extract_V(s, n) for n in (0, 1, 2, 3, 4)] == [1, 2, 14, 204, 5104]
    assert extract_V(s, 6) == 10570416
    assert all(s[2 * n] == 0 for n in range(7))


def test_uudd_series_is_relabelled_diag():
    # 2 (P(x,0) - 1) / x, read in scaled variables
    d, u = diag_series(21), uudd_series(20)
    for n in range(1, 11):
        assert d[2 * n] / 2 ** n * 2 == 2 * n * u[2 * n - 1] / 2 ** (n - 1)


def test_w_relation():
    t = build_table(30)
    assert verify_w_relation(t, 30)
    assert 2 * t[3, 3] == 6 * 14
    assert 2 * t[4, 4] == 8 * 204
    assert not verify_w_relation(t.replace(5, 5, t[5, 5] + 1), 30)


def test_beta_integral_by_quadrature():
    assert beta_integral(0, 0) == 1
    assert beta_integral(2, 3) == Fraction(factorial(2) * factorial(3), factorial(6))
    # midpoint rule on a fine grid
    a, b, m = 3, 2, 20000
    approx = sum(((i + 0.5) / m) ** a * (1 - (i + 0.5) / m) ** b for i in range(m)) / m
    assert abs(approx - float(beta_integral(a, b))) < 1e-8


def test_beta_row_sum():
    t = build_table(30)
    assert verify_beta_row_sum(t, 30)
    assert sum(t.row(6)) == 10570416
    assert not verify_beta_row_sum(t.replace(2, 0, 3), 30)
