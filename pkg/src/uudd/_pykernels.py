"""Pure-Python enumeration kernels.

Same interface as the compiled ``_kernels`` module.  All routines work on
permutations of ``0 .. L-1`` and stream them in lexicographic order through
``itertools.permutations``; nothing is materialized.
"""
from __future__ import annotations

from itertools import permutations

BACKEND = "python"

# cyclic order of a 2x2 block: top-left, top-right, bottom-right, bottom-left
_CYCLE = (0, 1, 3, 2)  # cell offsets in row-major (tl, tr, bl, br) numbering


def _vortex_patterns() -> frozenset[tuple[int, int, int, int]]:
    pats = set()
    for start in range(4):
        for step in (1, -1):
            order = [_CYCLE[(start + step * r) % 4] for r in range(4)]
            ranks = [0] * 4
            for rank, cell in enumerate(order):
                ranks[cell] = rank
            pats.add(tuple(ranks))
    return frozenset(pats)


VORTEX_PATTERNS = _vortex_patterns()


def uudd_ok(p) -> bool:
    for m in range(1, (len(p) - 1) // 2 + 1):
        # 0-based: a_{2m-1}, a_{2m}, a_{2m+1} are p[2m-2], p[2m-1], p[2m]
        if (p[2 * m - 2] < p[2 * m - 1]) != (p[2 * m - 1] < p[2 * m]):
            return False
    return True


def block_rank(a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    vals = (a, b, c, d)
    return tuple(sum(v < w for v in vals) for w in vals)


def is_vortex(a: int, b: int, c: int, d: int) -> bool:
    """Row-major block ``[[a, b], [c, d]]``."""
    return block_rank(a, b, c, d) in VORTEX_PATTERNS


def uudd_by_last(length: int) -> list[int]:
    """Counts of uudd permutations of ``0..length-1`` keyed by last entry."""
    counts = [0] * length
    for p in permutations(range(length)):
        if uudd_ok(p):
            counts[p[-1]] += 1
    return counts


def uudd_count(length: int) -> int:
    return sum(uudd_by_last(length))


def whirlpool_count(rows: int, cols: int) -> int:
    total = 0
    blocks = [(r * cols + c, r * cols + c + 1, (r + 1) * cols + c, (r + 1) * cols + c + 1)
              for r in range(rows - 1) for c in range(cols - 1)]
    for p in permutations(range(rows * cols)):
        for a, b, c, d in blocks:
            if block_rank(p[a], p[b], p[c], p[d]) not in VORTEX_PATTERNS:
                break
        else:
            total += 1
    return total


def alternating_last(length: int, last: int) -> int:
    """Permutations of ``0..length-1`` ending in ``last`` with ``a1 > a2 < a3 > ...``."""
    rest = [v for v in range(length) if v != last]
    total = 0
    for head in permutations(rest):
        p = head + (last,)
        for i in range(length - 1):
            if (p[i] > p[i + 1]) != (i % 2 == 0):
                break
        else:
            total += 1
    return total


def descents_last(length: int, last: int) -> list[int]:
    """Descent-number distribution over permutations ending in ``last``."""
    rest = [v for v in range(length) if v != last]
    dist = [0] * length
    for head in permutations(rest):
        p = head + (last,)
        dist[sum(p[i] > p[i + 1] for i in range(length - 1))] += 1
    return dist
