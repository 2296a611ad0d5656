from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest

from uudd import kernels


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request, monkeypatch):
    """Run a test once per available enumeration backend."""
    mod = kernels.available_backends()[request.param]
    monkeypatch.setattr(kernels, "backend", mod)
    return mod


# Independent oracles: plain ordinary-coefficient polynomial arithmetic on
# dicts {(i, j): Fraction}, no EGF bookkeeping.

def ordinary2(rows):
    """EGF triangle -> ordinary coefficients."""
    return {(i, j): Fraction(v) / (factorial(i) * factorial(j))
            for i, row in enumerate(rows) for j, v in enumerate(row)}


def poly_mul2(a, b, order):
    out = {}
    for (i, j), u in a.items():
        for (p, q), v in b.items():
            if i + j + p + q <= order:
                out[(i + p, j + q)] = out.get((i + p, j + q), 0) + u * v
    return out


def to_egf2(d, order):
    return [[d.get((i, j), 0) * factorial(i) * factorial(j) for j in range(order - i + 1)]
            for i in range(order + 1)]


def linear_subst(ordinary1, a, b, order):
    """sum f_m (a x + b y)^m expanded by the binomial theorem."""
    out = {}
    for m, fm in enumerate(ordinary1[:order + 1]):
        for i in range(m + 1):
            out[(i, m - i)] = out.get((i, m - i), 0) + fm * comb(m, i) * Fraction(a) ** i * Fraction(b) ** (m - i)
    return out


def brute_uudd_by_last(length):
    counts = [0] * length
    for p in permutations(range(length)):
        if all((p[2 * i - 2] < p[2 * i - 1]) == (p[2 * i - 1] < p[2 * i])
               for i in range(1, (length - 1) // 2 + 1)):
            counts[p[-1]] += 1
    return counts


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per acceptance criterion."""
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def report(number, title, ok, seconds=None):
        t = "" if seconds is None else f"  ({seconds:.3f}s)"
        lines.append(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}{t}")
        assert ok, f"criterion {number} failed: {title}"

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
