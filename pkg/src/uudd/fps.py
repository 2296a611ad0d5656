"""Truncated formal power series with exact rational coefficients.

Every series is stored in the exponential convention: a univariate series
``Series1`` holds ``c_i`` for the term ``c_i x^i/i!`` and a bivariate series
``Series2`` holds ``c_{i,j}`` for ``c_{i,j} x^i/i! y^j/j!``, truncated at total
degree ``order`` (inclusive).  In this convention differentiation is a shift
and linear substitution ``f(a x + b y)`` is the closed-form map
``c_{i,j} = f_{i+j} a^i b^j``.

Binary operations on series of different orders truncate to the smaller
order instead of raising.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "Series1", "Series2", "NonInvertibleError", "TruncationError",
    "s_add", "s_sub", "s_scale", "s_mul", "s_div",
    "compose_linear", "elementary", "partial_x", "partial_y", "coeff",
    "ELEMENTARY_NAMES",
]

Scalar = Union[int, Fraction]


class NonInvertibleError(ZeroDivisionError):
    """Division by a series whose constant term is zero."""


class TruncationError(IndexError):
    """Coefficient requested beyond the truncation order."""


@lru_cache(maxsize=None)
def _pascal(n: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for k in range(1, n + 1):
        prev = rows[-1]
        rows.append((1,) + tuple(prev[i - 1] + prev[i] for i in range(1, k)) + (1,))
    return tuple(rows)


def _frac(v: Scalar) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class Series1:
    """Univariate truncated EGF ``sum c_i x^i/i!`` for ``i <= order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar]):
        c = tuple(_frac(v) for v in coeffs)
        if not c:
            raise ValueError("a series needs at least the constant coefficient")
        self._c = c

    @classmethod
    def zero(cls, order: int) -> Series1:
        return cls([0] * (order + 1))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> Series1:
        return cls([value] + [0] * order)

    @classmethod
    def variable(cls, order: int) -> Series1:
        """The series ``x``."""
        c = [0] * (order + 1)
        if order >= 1:
            c[1] = 1
        return cls(c)

    @classmethod
    def from_ordinary(cls, coeffs: Sequence[Scalar]) -> Series1:
        """Build from ordinary coefficients ``sum a_i x^i``."""
        fact = 1
        out = []
        for i, a in enumerate(coeffs):
            if i:
                fact *= i
            out.append(_frac(a) * fact)
        return cls(out)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, i: int) -> Fraction:
        return coeff(self, i)

    def truncate(self, order: int) -> Series1:
        if order > self.order:
            raise TruncationError(f"cannot raise order {self.order} to {order}")
        return Series1(self._c[:order + 1])

    def ordinary(self) -> list[Fraction]:
        """Ordinary coefficients ``a_i = c_i / i!``."""
        out = []
        fact = 1
        for i, v in enumerate(self._c):
            if i:
                fact *= i
            out.append(v / fact)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series1):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Series1({[str(v) for v in self._c]})"

    def __add__(self, other):
        return s_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return s_sub(self, other)

    def __rsub__(self, other):
        return s_sub(_lift(other, self), self)

    def __neg__(self):
        return s_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return s_scale(self, other)
        return s_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return s_scale(self, Fraction(1) / other)
        return s_div(self, other)

    def __rtruediv__(self, other):
        return s_div(_lift(other, self), self)


class Series2:
    """Bivariate truncated EGF, truncated by total degree.

    ``rows[i][j]`` is the coefficient of ``x^i/i! y^j/j!``; row ``i`` has
    ``order - i + 1`` entries.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        r = tuple(tuple(_frac(v) for v in row) for row in rows)
        n = len(r) - 1
        if n < 0 or any(len(row) != n - i + 1 for i, row in enumerate(r)):
            raise ValueError("rows must form a total-degree triangle")
        self._rows = r

    @classmethod
    def zero(cls, order: int) -> Series2:
        return cls([[0] * (order - i + 1) for i in range(order + 1)])

    @classmethod
    def constant(cls, value: Scalar, order: int) -> Series2:
        rows = [[0] * (order - i + 1) for i in range(order + 1)]
        rows[0][0] = value
        return cls(rows)

    @classmethod
    def from_function(cls, order: int, fn) -> Series2:
        """Fill coefficient ``(i, j)`` with ``fn(i, j)``."""
        return cls([[fn(i, j) for j in range(order - i + 1)]
                    for i in range(order + 1)])

    @classmethod
    def linear(cls, a: Scalar, b: Scalar, order: int) -> Series2:
        """The series ``a x + b y``."""
        rows = [[0] * (order - i + 1) for i in range(order + 1)]
        if order >= 1:
            rows[1][0] = a
            rows[0][1] = b
        return cls(rows)

    @property
    def order(self) -> int:
        return len(self._rows) - 1

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return coeff(self, ij)

    def items(self):
        for i, row in enumerate(self._rows):
            for j, v in enumerate(row):
                yield (i, j), v

    def truncate(self, order: int) -> Series2:
        if order > self.order:
            raise TruncationError(f"cannot raise order {self.order} to {order}")
        return Series2(row[:order - i + 1] for i, row in enumerate(self._rows[:order + 1]))

    def swap(self) -> Series2:
        """``S(y, x)``."""
        n = self.order
        return Series2([[self._rows[j][i] for j in range(n - i + 1)] for i in range(n + 1)])

    def restrict_x(self) -> Series1:
        """``S(x, 0)``."""
        return Series1(row[0] for row in self._rows)

    def even_part(self) -> Series2:
        """Terms of even total degree."""
        return Series2([[v if (i + j) % 2 == 0 else 0 for j, v in enumerate(row)]
                        for i, row in enumerate(self._rows)])

    def odd_part(self) -> Series2:
        return Series2([[v if (i + j) % 2 else 0 for j, v in enumerate(row)]
                        for i, row in enumerate(self._rows)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Series2(order={self.order})"

    def __add__(self, other):
        return s_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return s_sub(self, other)

    def __rsub__(self, other):
        return s_sub(_lift(other, self), self)

    def __neg__(self):
        return s_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return s_scale(self, other)
        return s_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return s_scale(self, Fraction(1) / other)
        return s_div(self, other)

    def __rtruediv__(self, other):
        return s_div(_lift(other, self), self)


Series = Union[Series1, Series2]


def _lift(v, like: Series) -> Series:
    if isinstance(v, (Series1, Series2)):
        return v
    return type(like).constant(v, like.order)


def _pair(a, b) -> tuple[Series, Series, int]:
    if isinstance(a, (int, Fraction)):
        a = _lift(a, b)
    if isinstance(b, (int, Fraction)):
        b = _lift(b, a)
    if type(a) is not type(b):
        raise TypeError(f"cannot combine {type(a).__name__} and {type(b).__name__}")
    return a, b, min(a.order, b.order)


def s_add(a, b) -> Series:
    a, b, n = _pair(a, b)
    if isinstance(a, Series1):
        return Series1(a.coeffs[i] + b.coeffs[i] for i in range(n + 1))
    return Series2([[a.rows[i][j] + b.rows[i][j] for j in range(n - i + 1)]
                    for i in range(n + 1)])


def s_sub(a, b) -> Series:
    a, b, n = _pair(a, b)
    if isinstance(a, Series1):
        return Series1(a.coeffs[i] - b.coeffs[i] for i in range(n + 1))
    return Series2([[a.rows[i][j] - b.rows[i][j] for j in range(n - i + 1)]
                    for i in range(n + 1)])


def s_scale(a: Series, c: Scalar) -> Series:
    c = _frac(c)
    if isinstance(a, Series1):
        return Series1(v * c for v in a.coeffs)
    return Series2([[v * c for v in row] for row in a.rows])


def _mul1(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    binom = _pascal(n)
    out = []
    for k in range(n + 1):
        bk = binom[k]
        acc = Fraction(0)
        for i in range(k + 1):
            ai = a[i]
            if ai:
                bv = b[k - i]
                if bv:
                    acc += bk[i] * ai * bv
        out.append(acc)
    return out


def _nonzero(rows) -> list[tuple[int, int, Fraction]]:
    return [(i, j, v) for i, row in enumerate(rows) for j, v in enumerate(row) if v]


def s_mul(a, b) -> Series:
    """EGF (binomial) product, truncated at the smaller order."""
    a, b, n = _pair(a, b)
    if isinstance(a, Series1):
        return Series1(_mul1(a.coeffs, b.coeffs, n))
    binom = _pascal(n)
    out = [[Fraction(0)] * (n - i + 1) for i in range(n + 1)]
    bnz = _nonzero(b.rows)
    for i, j, av in _nonzero(a.rows):
        if i + j > n:
            continue
        for p, q, bv in bnz:
            k, l = i + p, j + q
            if k + l > n:
                continue
            out[k][l] += binom[k][i] * binom[l][j] * av * bv
    return Series2(out)


def s_div(a, b) -> Series:
    """Quotient ``q`` with ``b * q == a`` through the common order.

    Forward substitution: each new coefficient is solved from the product
    formula using the already known lower-degree coefficients.
    """
    a, b, n = _pair(a, b)
    if isinstance(a, Series1):
        b0 = b.coeffs[0]
        if not b0:
            raise NonInvertibleError("divisor has zero constant term")
        binom = _pascal(n)
        bc = b.coeffs
        q: list[Fraction] = []
        for k in range(n + 1):
            acc = a.coeffs[k]
            bk = binom[k]
            for i in range(1, k + 1):
                if bc[i]:
                    acc -= bk[i] * bc[i] * q[k - i]
            q.append(acc / b0)
        return Series1(q)

    b0 = b.rows[0][0]
    if not b0:
        raise NonInvertibleError("divisor has zero constant term")
    binom = _pascal(n)
    bnz = [(i, j, v) for i, j, v in _nonzero(b.rows) if (i, j) != (0, 0) and i + j <= n]
    q2 = [[Fraction(0)] * (n - i + 1) for i in range(n + 1)]
    # total degree d only needs quotient terms of degree < d
    for d in range(n + 1):
        for k in range(d + 1):
            l = d - k
            acc = a.rows[k][l]
            bk, bl = binom[k], binom[l]
            for i, j, bv in bnz:
                if i <= k and j <= l:
                    qv = q2[k - i][l - j]
                    if qv:
                        acc -= bk[i] * bl[j] * bv * qv
            q2[k][l] = acc / b0
    return Series2(q2)


def compose_linear(f: Series1, a: Scalar, b: Scalar, order: int | None = None) -> Series2:
    """Bivariate ``f(a x + b y)``; coefficient ``(i, j)`` is ``f_{i+j} a^i b^j``."""
    if order is None:
        order = f.order
    if f.order < order:
        raise TruncationError(f"series of order {f.order} cannot supply order {order}")
    a, b = _frac(a), _frac(b)
    apow = [a ** i for i in range(order + 1)]
    bpow = [b ** j for j in range(order + 1)]
    fc = f.coeffs
    return Series2([[fc[i + j] * apow[i] * bpow[j] for j in range(order - i + 1)]
                    for i in range(order + 1)])


def _trig(order: int, offset: int, sign: int) -> Series1:
    out = []
    for k in range(order + 1):
        if (k - offset) % 2:
            out.append(0)
        elif sign < 0:
            out.append(-1 if ((k - offset) // 2) % 2 else 1)
        else:
            out.append(1)
    return Series1(out)


ELEMENTARY_NAMES = ("exp", "sinh", "cosh", "tanh", "sin", "cos")


def elementary(name: str, order: int) -> Series1:
    """EGF of ``exp``, ``sinh``, ``cosh``, ``tanh``, ``sin`` or ``cos`` at ``x``."""
    if name == "exp":
        return Series1([1] * (order + 1))
    if name == "cosh":
        return _trig(order, 0, 1)
    if name == "sinh":
        return _trig(order, 1, 1)
    if name == "cos":
        return _trig(order, 0, -1)
    if name == "sin":
        return _trig(order, 1, -1)
    if name == "tanh":
        return s_div(_trig(order, 1, 1), _trig(order, 0, 1))
    raise ValueError(f"unknown elementary series {name!r}; expected one of {ELEMENTARY_NAMES}")


def partial_x(s: Series2) -> Series2:
    """Derivative in ``x``: an index shift; the order drops by one."""
    n = s.order
    if n < 1:
        raise TruncationError("differentiation needs order >= 1")
    return Series2(s.rows[i + 1][:n - i] for i in range(n))


def partial_y(s: Series2) -> Series2:
    n = s.order
    if n < 1:
        raise TruncationError("differentiation needs order >= 1")
    return Series2(s.rows[i][1:] for i in range(n))


def coeff(s: Series, idx) -> Fraction:
    """EGF coefficient at ``i`` (univariate) or ``(i, j)`` (bivariate)."""
    if isinstance(s, Series1):
        i = idx
        if not 0 <= i <= s.order:
            raise TruncationError(f"index {i} outside order {s.order}")
        return s.coeffs[i]
    i, j = idx
    if i < 0 or j < 0 or i + j > s.order:
        raise TruncationError(f"index {(i, j)} outside total order {s.order}")
    return s.rows[i][j]
