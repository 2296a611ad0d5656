"""Two more last-entry-fixed bivariate EGFs: alternating permutations and descents.

For permutations of ``{-m..n}`` that end in 0, negative and positive entries
act as two sorts of labels, weighted by ``x^m/m! y^n/n!``.

* Alternating (``a1 > a2 < a3 > ...``): ``(cos y + sin y) / cos(x + y)``.
* Descent polynomials ``A_{m,n}(t)``:
  ``sum A_{m,n}(t) / (1-t)^(m+n+1) x^m/m! y^n/n! = e^x / (1 - t e^(x+y))``.
"""
from __future__ import annotations

from math import comb

from .fps import Series2, compose_linear, elementary
from .permlab import brute_descent_poly_ending_zero
from .tpoly import TPoly

__all__ = [
    "TPoly", "entringer_series", "eulerian_coefficient", "eulerian_poly",
    "verify_eulerian_identity",
]


def entringer_series(order: int) -> Series2:
    """``(cos y + sin y) / cos(x + y)`` through total degree ``order``."""
    cos, sin = elementary("cos", order), elementary("sin", order)
    num = compose_linear(cos, 0, 1) + compose_linear(sin, 0, 1)
    return num / compose_linear(cos, 1, 1)


def eulerian_coefficient(m: int, n: int, terms: int) -> TPoly:
    """First ``terms`` terms of ``sum_j t^j (j+1)^m j^n``.

    This is the ``(m, n)`` EGF coefficient of
    ``e^x / (1 - t e^(x+y)) = sum_j t^j e^((j+1) x + j y)``.
    """
    return TPoly((j + 1) ** m * j ** n for j in range(terms))


def _one_minus_t_power(e: int) -> TPoly:
    return TPoly((-1) ** i * comb(e, i) for i in range(e + 1))


def eulerian_poly(m: int, n: int) -> TPoly:
    """``A_{m,n}(t)``: descents over permutations of ``{-m..n}`` ending in 0.

    The ``j``-sum is infinite, but ``A_{m,n}`` has degree ``<= m + n``, so only
    its first ``m + n + 1`` terms reach the kept coefficients.  The result is
    recomputed with twice as many terms and must not change.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    d = m + n
    factor = _one_minus_t_power(d + 1)
    short = (eulerian_coefficient(m, n, d + 1) * factor).truncate(d)
    long = (eulerian_coefficient(m, n, 2 * d + 3) * factor).truncate(d)
    if short != long:
        raise ArithmeticError(f"truncated j-sum did not stabilize at (m, n) = ({m}, {n})")
    return short


def _series_coefficient(m: int, n: int, terms: int) -> TPoly:
    """Same coefficient as :func:`eulerian_coefficient`, expanded with the series
    kernel: the ``(m, n)`` coefficient of ``e^x e^(j(x+y))``, one ``j`` at a time."""
    order = m + n
    ex = elementary("exp", order)
    out = []
    for j in range(terms):
        term = compose_linear(ex, 1, 0) * compose_linear(ex, j, j)
        c = term[(m, n)]
        if c.denominator != 1:
            return TPoly()
        out.append(int(c))
    return TPoly(out)


def verify_eulerian_identity(M: int, overrides: dict | None = None) -> bool:
    """Closed form agrees with enumeration for every ``m + n <= M``.

    Also checks the explicit ``j``-sum against a direct series expansion.
    ``overrides`` maps ``(m, n)`` to a replacement polynomial, so a tampered
    value can be shown to fail.
    """
    overrides = overrides or {}
    for total in range(M + 1):
        for m in range(total + 1):
            n = total - m
            poly = overrides.get((m, n)) or eulerian_poly(m, n)
            if poly != brute_descent_poly_ending_zero(m, n):
                return False
            terms = 2 * total + 3
            if eulerian_coefficient(m, n, terms) != _series_coefficient(m, n, terms):
                return False
    return True
