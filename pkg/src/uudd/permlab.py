"""Brute-force ground truth: enumerate small permutations and count patterns.

Nothing here is clever on purpose.  These counts are the oracles that the
recurrence and the generating functions are checked against, so they go
straight from the definitions.

Feasibility bounds cap the enumeration size.  Defaults are in
:data:`DEFAULT_LIMITS`; the environment variables ``UUDD_MAX_LENGTH`` and
``UUDD_MAX_CELLS`` raise them globally, and every function also takes an
explicit ``limits`` argument.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from ._pykernels import block_rank, VORTEX_PATTERNS
from .tpoly import TPoly

__all__ = [
    "FeasibilityError", "Limits", "DEFAULT_LIMITS", "current_limits",
    "Permutation", "WhirlpoolMatrix",
    "is_uudd", "classify_extrema", "brute_pnk_row", "is_whirlpool",
    "count_whirlpool", "brute_uudd_count", "brute_alternating_ending_zero",
    "brute_descent_poly_ending_zero",
]


class FeasibilityError(ValueError):
    """Requested enumeration exceeds the configured size bound."""


@dataclass(frozen=True)
class Limits:
    max_length: int = 11   # permutation length; 11! ~ 4e7
    max_cells: int = 9     # whirlpool matrix cells


DEFAULT_LIMITS = Limits()


def current_limits() -> Limits:
    """Defaults, raised (never lowered) by the environment."""
    length = DEFAULT_LIMITS.max_length
    cells = DEFAULT_LIMITS.max_cells
    if os.environ.get("UUDD_MAX_LENGTH"):
        length = max(length, int(os.environ["UUDD_MAX_LENGTH"]))
    if os.environ.get("UUDD_MAX_CELLS"):
        cells = max(cells, int(os.environ["UUDD_MAX_CELLS"]))
    return Limits(length, cells)


def _require_length(length: int, limits: Limits | None, what: str) -> None:
    lim = limits or current_limits()
    if length > lim.max_length:
        raise FeasibilityError(
            f"{what}: length {length} exceeds enumeration bound {lim.max_length}")


@dataclass(frozen=True)
class Permutation:
    """Distinct integers that fill a contiguous range ``lo..hi``."""
    entries: tuple[int, ...]

    def __post_init__(self):
        e = tuple(self.entries)
        object.__setattr__(self, "entries", e)
        if not e:
            raise ValueError("empty permutation")
        if sorted(e) != list(range(min(e), max(e) + 1)):
            raise ValueError(f"{e} is not a permutation of a contiguous range")

    @property
    def lo(self) -> int:
        return min(self.entries)

    @property
    def hi(self) -> int:
        return max(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class WhirlpoolMatrix:
    """An ``m x n`` filling of ``1..mn``."""
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        r = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", r)
        if not r or not r[0] or any(len(row) != len(r[0]) for row in r):
            raise ValueError("matrix rows must be non-empty and of equal length")
        flat = sorted(v for row in r for v in row)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError("entries must be a permutation of 1..mn")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])


def is_uudd(p: Sequence[int]) -> bool:
    """Up-up-or-down-down: ``a_{2i-1} < a_{2i}`` iff ``a_{2i} < a_{2i+1}``.

    Equivalently every peak and every valley sits at an odd (1-based) index.
    """
    n = len(p)
    for i in range(1, (n - 1) // 2 + 1):
        if (p[2 * i - 2] < p[2 * i - 1]) != (p[2 * i - 1] < p[2 * i]):
            return False
    return True


def classify_extrema(p: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """1-based peak and valley indices."""
    peaks, valleys = set(), set()
    for i in range(2, len(p)):
        a, b, c = p[i - 2], p[i - 1], p[i]
        if a < b > c:
            peaks.add(i)
        elif a > b < c:
            valleys.add(i)
    return frozenset(peaks), frozenset(valleys)


def brute_pnk_row(n: int, limits: Limits | None = None) -> tuple[int, ...]:
    """Row ``n`` of p_n(k) by enumeration; offset ``n + k`` holds p_n(k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _require_length(2 * n + 1, limits, "brute_pnk_row")
    # uudd-ness depends only on relative order, so shift {-n..n} to {0..2n}
    return tuple(kernels.backend.uudd_by_last(2 * n + 1))


def brute_uudd_count(length: int, limits: Limits | None = None) -> int:
    """Number of uudd permutations of ``{1..length}``."""
    if length < 1:
        raise ValueError("length must be positive")
    _require_length(length, limits, "brute_uudd_count")
    return int(kernels.backend.uudd_count(length))


def is_whirlpool(m: WhirlpoolMatrix | Sequence[Sequence[int]]) -> bool:
    rows = m.rows if isinstance(m, WhirlpoolMatrix) else m
    for r in range(len(rows) - 1):
        top, bot = rows[r], rows[r + 1]
        for c in range(len(top) - 1):
            if block_rank(top[c], top[c + 1], bot[c], bot[c + 1]) not in VORTEX_PATTERNS:
                return False
    return True


def count_whirlpool(rows: int, cols: int, limits: Limits | None = None) -> int:
    if rows < 1 or cols < 1:
        raise ValueError("matrix dimensions must be positive")
    lim = limits or current_limits()
    if rows * cols > lim.max_cells:
        raise FeasibilityError(
            f"count_whirlpool: {rows}x{cols} exceeds cell bound {lim.max_cells}")
    return int(kernels.backend.whirlpool_count(rows, cols))


def brute_alternating_ending_zero(m: int, n: int, limits: Limits | None = None) -> int:
    """Permutations of ``{-m..n}`` ending in 0 with ``a1 > a2 < a3 > ...``."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    _require_length(m + n + 1, limits, "brute_alternating_ending_zero")
    return int(kernels.backend.alternating_last(m + n + 1, m))


def brute_descent_poly_ending_zero(m: int, n: int, limits: Limits | None = None) -> TPoly:
    """Sum of ``t**des(p)`` over permutations of ``{-m..n}`` ending in 0."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    _require_length(m + n + 1, limits, "brute_descent_poly_ending_zero")
    return TPoly(kernels.backend.descents_last(m + n + 1, m))
