"""The p_n(k) triangle from the absolute-difference recurrence.

``p_{n+1}(k) = sum_{j=-n..n} |j - k| p_n(j)`` with ``p_0(0) = 1``, where
p_n(k) counts up-up-or-down-down permutations of ``{-n..n}`` ending in ``k``.

Index convention, used everywhere in the package: row ``n`` is a tuple of
length ``2n + 1`` and offset ``n + k`` holds p_n(k).
"""
from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "PnkTable", "build_table", "next_row_direct", "next_row_prefix",
    "verify_symmetry", "verify_second_difference", "verify_edge_relation",
    "row_sum",
]


class PnkTable:
    """Immutable triangle of rows ``0..N``.

    Construction only checks the triangular shape so that deliberately
    broken tables can be fed to the verifiers.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Sequence[int]]):
        r = tuple(tuple(int(v) for v in row) for row in rows)
        if not r:
            raise ValueError("table needs at least row 0")
        for n, row in enumerate(r):
            if len(row) != 2 * n + 1:
                raise ValueError(f"row {n} has length {len(row)}, expected {2 * n + 1}")
        self._rows = r

    @property
    def N(self) -> int:
        return len(self._rows) - 1

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def row(self, n: int) -> tuple[int, ...]:
        if not 0 <= n <= self.N:
            raise IndexError(f"row {n} outside 0..{self.N}")
        return self._rows[n]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        """``table[n, k]`` is p_n(k)."""
        n, k = nk
        if abs(k) > n:
            raise IndexError(f"k={k} outside -{n}..{n}")
        return self.row(n)[n + k]

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PnkTable):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"PnkTable(N={self.N})"

    def replace(self, n: int, k: int, value: int) -> PnkTable:
        """Copy with p_n(k) overwritten."""
        rows = [list(r) for r in self._rows]
        rows[n][n + k] = value
        return PnkTable(rows)


def next_row_direct(row: Sequence[int]) -> tuple[int, ...]:
    """One recurrence step by the defining O(n^2) sum."""
    n = (len(row) - 1) // 2
    return tuple(sum(abs(j - k) * row[j + n] for j in range(-n, n + 1))
                 for k in range(-n - 1, n + 2))


def next_row_prefix(row: Sequence[int]) -> tuple[int, ...]:
    """One recurrence step in O(n) using prefix sums of p and j*p.

    Split the sum at k: ``sum_{j<k} (k-j) p(j) + sum_{j>k} (j-k) p(j)``.
    """
    n = (len(row) - 1) // 2
    total_p = sum(row)
    total_jp = sum(j * row[j + n] for j in range(-n, n + 1))
    out = []
    below_p = below_jp = 0  # sums over j < k
    for k in range(-n - 1, n + 2):
        if -n <= k - 1 <= n:
            below_p += row[k - 1 + n]
            below_jp += (k - 1) * row[k - 1 + n]
        above_p = total_p - below_p
        above_jp = total_jp - below_jp
        # j == k contributes zero to both halves
        out.append(k * below_p - below_jp + above_jp - k * above_p)
    return tuple(out)


def build_table(N: int, method: str = "prefix") -> PnkTable:
    """Rows ``0..N`` of the triangle."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    step = {"prefix": next_row_prefix, "direct": next_row_direct}[method]
    rows = [(1,)]
    for _ in range(N):
        rows.append(step(rows[-1]))
    return PnkTable(rows)


def verify_symmetry(t: PnkTable) -> bool:
    """Every row is a palindrome: p_n(-k) == p_n(k)."""
    return all(row == row[::-1] for row in t.rows)


def verify_second_difference(t: PnkTable) -> bool:
    """``p_{n+1}(k+1) - 2 p_{n+1}(k) + p_{n+1}(k-1) == 2 p_n(k)`` for ``|k| <= n < N``."""
    for n in range(t.N):
        for k in range(-n, n + 1):
            lhs = t[n + 1, k + 1] - 2 * t[n + 1, k] + t[n + 1, k - 1]
            if lhs != 2 * t[n, k]:
                return False
    return True


def verify_edge_relation(t: PnkTable) -> bool:
    """``(n - 1) p_n(n) == n p_n(n - 1)`` for ``1 <= n <= N``."""
    return all((n - 1) * t[n, n] == n * t[n, n - 1] for n in range(1, t.N + 1))


def row_sum(t: PnkTable, n: int) -> int:
    return sum(t.row(n))
