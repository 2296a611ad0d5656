"""Closed-form generating functions for p_n(k), and checks on how they are derived.

Everything is computed in scaled variables so that only rationals appear.
The scaled bivariate series

    P(x, y) = cosh(x - y) / (cosh(x + y) - (x + y) sinh(x + y))

has coefficient ``2**n * p_n(k)`` at ``x^(n+k)/(n+k)! y^(n-k)/(n-k)!``.
Substituting ``x -> x/sqrt(2)``, ``y -> y/sqrt(2)`` removes the ``2**n`` and
gives the published form.  Likewise ``tanh(u) / (1 - u tanh(u))`` has
coefficient ``2**n * V_n`` at ``u^(2n+1)/(2n+1)!``, where ``V_n`` is the number
of up-up-or-down-down permutations of length ``2n + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .fps import (Series1, Series2, compose_linear, elementary, partial_x,
                  partial_y)
from .pnk import PnkTable

__all__ = [
    "NonIntegralError", "SymmetryViolation", "IdentityViolation",
    "ScaledPSeries", "SeidelArray",
    "build_P", "extract_pnk", "apply_L", "build_Q_R",
    "seidel_relation_holds", "sign_symmetry_holds", "verify_L_squared",
    "verify_diag_from_Q", "seidel_closed_form", "seidel_even_odd_split",
    "B_closed_form", "diag_series", "uudd_series", "extract_V",
    "verify_w_relation", "beta_integral", "verify_beta_row_sum",
]


class NonIntegralError(ArithmeticError):
    """A descaled coefficient was not a nonnegative integer."""


class SymmetryViolation(ValueError):
    """Seed row fails ``a_{0,i} == (-1)**i a_{i,0}``."""


class IdentityViolation(AssertionError):
    """A closed form disagreed with the array it should reproduce."""


def _denominator(order: int) -> Series2:
    s = compose_linear(elementary("sinh", order), 1, 1)
    c = compose_linear(elementary("cosh", order), 1, 1)
    return c - Series2.linear(1, 1, order) * s


@dataclass(frozen=True)
class ScaledPSeries:
    """``P(x, y)`` truncated at total degree ``order``."""
    series: Series2

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def max_n(self) -> int:
        return self.order // 2

    def __getitem__(self, ij):
        return self.series[ij]


def build_P(order: int) -> ScaledPSeries:
    """``cosh(x-y) / (cosh(x+y) - (x+y) sinh(x+y))`` through total degree ``order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    num = compose_linear(elementary("cosh", order), 1, -1)
    return ScaledPSeries(num / _denominator(order))


def extract_pnk(P: ScaledPSeries | Series2, n: int, k: int) -> int:
    """p_n(k) read off the scaled series."""
    if abs(k) > n:
        raise ValueError(f"k={k} outside -{n}..{n}")
    c = P[(n + k, n - k)]
    v = c / 2 ** n
    if v.denominator != 1 or v < 0:
        raise NonIntegralError(f"coefficient {c} at n={n}, k={k} is not 2^n times a count")
    return int(v)


def apply_L(s: Series2) -> Series2:
    """``dS/dx - dS/dy``."""
    return partial_x(s) - partial_y(s)


def build_Q_R(P: ScaledPSeries | Series2) -> tuple[Series2, Series2]:
    """``Q = L(P)/2`` and ``R = P + Q`` (order drops by one)."""
    p = P.series if isinstance(P, ScaledPSeries) else P
    q = apply_L(p) * Fraction(1, 2)
    return q, p + q


def seidel_relation_holds(a: Series2) -> bool:
    """``a_{i+1,j} - a_{i,j+1} == 2 a_{i,j}`` wherever all three exist."""
    rows = a.rows
    n = a.order
    for i in range(n):
        for j in range(n - i):
            if rows[i + 1][j] - rows[i][j + 1] != 2 * rows[i][j]:
                return False
    return True


def sign_symmetry_holds(a: Series2) -> bool:
    """``a_{j,i} == (-1)**(i+j) a_{i,j}``."""
    rows = a.rows
    for i in range(a.order + 1):
        for j in range(i, a.order - i + 1):
            sign = -1 if (i + j) % 2 else 1
            if rows[j][i] != sign * rows[i][j]:
                return False
    return True


def verify_L_squared(P: ScaledPSeries | Series2) -> bool:
    """``L(L(P)) == 4 P`` through the order left after two derivatives."""
    p = P.series if isinstance(P, ScaledPSeries) else P
    l2 = apply_L(apply_L(p))
    return l2 == (p * 4).truncate(l2.order)


def verify_diag_from_Q(P: ScaledPSeries | Series2) -> bool:
    """``P(x, 0) == 1 + x Q(x, 0)`` coefficientwise.

    In the EGF convention that is ``P_{2n,0} == 2n Q_{2n-1,0}`` for ``n >= 1``,
    ``P_{0,0} == 1``, and ``P_{m,0} == m Q_{m-1,0}`` (zero) for odd ``m``.
    """
    p = P.series if isinstance(P, ScaledPSeries) else P
    q, _ = build_Q_R(p)
    if p[(0, 0)] != 1:
        return False
    return all(p[(m, 0)] == m * q[(m - 1, 0)] for m in range(1, q.order + 2))


@dataclass(frozen=True)
class SeidelArray:
    """Array ``a_{i,j}`` (``i + j <= order``) filled from its first row by
    ``a_{i,j+1} = a_{i+1,j} - 2 a_{i,j}``; stored as EGF coefficients."""
    values: Series2

    @classmethod
    def from_seed(cls, seed: Sequence) -> SeidelArray:
        n = len(seed) - 1
        if n < 0:
            raise ValueError("empty seed")
        cols = [[Fraction(v) for v in seed]]  # cols[j][i] = a_{i,j}
        for j in range(n):
            prev = cols[-1]
            cols.append([prev[i + 1] - 2 * prev[i] for i in range(n - j)])
        return cls(Series2([[cols[j][i] for j in range(n - i + 1)] for i in range(n + 1)]))

    @property
    def order(self) -> int:
        return self.values.order

    def __getitem__(self, ij) -> Fraction:
        return self.values[ij]

    def relation_holds(self) -> bool:
        return seidel_relation_holds(self.values)


def seidel_closed_form(seed: Sequence) -> tuple[SeidelArray, Series2]:
    """Fill the array from ``seed`` and check it against ``exp(-2y) A(x+y)``.

    Returns the array and the closed-form series; raises
    :class:`IdentityViolation` if they differ anywhere.
    """
    arr = SeidelArray.from_seed(seed)
    n = arr.order
    A = Series1(seed)
    closed = compose_linear(elementary("exp", n), 0, -2) * compose_linear(A, 1, 1)
    if closed != arr.values:
        raise IdentityViolation("recurrence-filled array differs from exp(-2y) A(x+y)")
    return arr, closed


def seidel_even_odd_split(seed: Sequence) -> tuple[Series2, Series2, Series1]:
    """Split a sign-symmetric array into ``cosh(x-y) B(x+y)`` and ``sinh(x-y) B(x+y)``.

    ``B = exp(-x) A(x)`` must be even.  Returns ``(even part, odd part, B)``.
    """
    arr, _ = seidel_closed_form(seed)
    a = arr.values
    n = arr.order
    for i in range(n + 1):
        if a[(0, i)] != (-1) ** i * a[(i, 0)]:
            raise SymmetryViolation(
                f"a_(0,{i}) = {a[(0, i)]} but (-1)^{i} a_({i},0) = {(-1) ** i * a[(i, 0)]}")
    A = Series1(seed)
    B = compose_linear(elementary("exp", n), -1, 0).restrict_x() * A
    if any(B.coeffs[i] for i in range(1, n + 1, 2)):
        raise IdentityViolation("exp(-x) A(x) has a nonzero odd coefficient")
    Bxy = compose_linear(B, 1, 1)
    even = compose_linear(elementary("cosh", n), 1, -1) * Bxy
    odd = compose_linear(elementary("sinh", n), 1, -1) * Bxy
    if a.even_part() != even:
        raise IdentityViolation("even part differs from cosh(x-y) B(x+y)")
    if a.odd_part() != odd:
        raise IdentityViolation("odd part differs from sinh(x-y) B(x+y)")
    return a.even_part(), a.odd_part(), B


def B_closed_form(order: int) -> Series1:
    """``1 / (cosh x - x sinh x)``."""
    d = elementary("cosh", order) - Series1.variable(order) * elementary("sinh", order)
    return 1 / d


def diag_series(order: int) -> Series1:
    """``P(x, 0) = cosh x / (cosh x - x sinh x)``; coefficient ``2n`` is ``2**n p_n(n)``."""
    cosh = elementary("cosh", order)
    return cosh / (cosh - Series1.variable(order) * elementary("sinh", order))


def uudd_series(order: int) -> Series1:
    """``tanh u / (1 - u tanh u)``; coefficient ``2n+1`` is ``2**n V_n``."""
    th = elementary("tanh", order)
    return th / (1 - Series1.variable(order) * th)


def extract_V(s: Series1, n: int) -> int:
    c = s[2 * n + 1]
    v = c / 2 ** n
    if v.denominator != 1 or v <= 0:
        raise NonIntegralError(f"coefficient {c} at 2n+1={2 * n + 1} is not 2^n times a count")
    return int(v)


def verify_w_relation(t: PnkTable, N: int, series: Series1 | None = None) -> bool:
    """``2 p_n(n) == 2n V_{n-1}`` for ``1 <= n <= N``.

    Coefficient form of: subtract 1 from ``sum p_n(n) x^{2n}/(2n)!``, double,
    divide by ``x`` and land on the uudd series.
    """
    if series is None or series.order < 2 * N - 1:
        series = uudd_series(max(2 * N - 1, 1))
    return all(2 * t[n, n] == 2 * n * extract_V(series, n - 1) for n in range(1, N + 1))


def beta_integral(a: int, b: int) -> Fraction:
    """``int_0^1 t^a (1-t)^b dt``, integrating the expanded polynomial term by term."""
    return sum((Fraction((-1) ** i * comb(b, i), a + i + 1) for i in range(b + 1)), Fraction(0))


def verify_beta_row_sum(t: PnkTable, N: int, series: Series1 | None = None) -> bool:
    """Row sums equal ``V_n`` for ``0 <= n <= N``, via the beta-integral collapse.

    Substituting ``x -> s x``, ``y -> (1-s) x`` in the bivariate EGF and
    integrating over ``s`` maps ``x^(n+k) y^(n-k)/((n+k)!(n-k)!)`` to
    ``x^(2n)/(2n+1)!``.  The collapse is computed with the integral itself,
    then compared to the plain row sum and to ``V_n``.
    """
    if series is None or series.order < 2 * N + 1:
        series = uudd_series(2 * N + 1)
    for n in range(N + 1):
        collapsed = Fraction(0)
        for k in range(-n, n + 1):
            w = beta_integral(n + k, n - k)
            if w != Fraction(factorial(n + k) * factorial(n - k), factorial(2 * n + 1)):
                return False
            collapsed += Fraction(t[n, k], factorial(n + k) * factorial(n - k)) * w
        collapsed *= factorial(2 * n + 1)
        if collapsed != sum(t.row(n)) or collapsed != extract_V(series, n):
            return False
    return True
