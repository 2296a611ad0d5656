"""Exact counts of up-up-or-down-down permutations.

p_n(k), the number of up-up-or-down-down permutations of ``{-n..n}`` ending
in ``k``, is computed three independent ways: brute-force enumeration
(:mod:`uudd.permlab`), the absolute-difference recurrence (:mod:`uudd.pnk`)
and coefficient extraction from the bivariate generating function
(:mod:`uudd.genfun`), all in exact arithmetic.
"""
from .fps import Series1, Series2
from .genfun import build_P, extract_pnk, uudd_series
from .kernels import BACKEND
from .permlab import brute_pnk_row, brute_uudd_count, count_whirlpool, is_uudd
from .pnk import PnkTable, build_table

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "PnkTable", "Series1", "Series2", "build_P", "build_table",
    "brute_pnk_row", "brute_uudd_count", "count_whirlpool", "extract_pnk",
    "is_uudd", "uudd_series",
]
