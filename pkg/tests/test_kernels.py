from itertools import permutations

import pytest

from uudd import _pykernels, kernels


def test_env_forces_pure_python(monkeypatch):
    monkeypatch.setenv("UUDD_PURE_PYTHON", "1")
    assert kernels._select() is _pykernels


def test_missing_extension_falls_back(monkeypatch):
    import builtins
    real_import = builtins.__import__

    def fake(name, globals=None, locals=None, fromlist=(), level=0):
        if fromlist and "_kernels" in fromlist:
            raise ImportError("no compiled kernel")
        return real_import(name, globals, locals, fromlist, level)

    monkeypatch.delenv("UUDD_PURE_PYTHON", raising=False)
    monkeypatch.setattr(builtins, "__import__", fake)
    assert kernels._select() is _pykernels


def test_eight_vortex_patterns():
    assert len(_pykernels.VORTEX_PATTERNS) == 8


@pytest.mark.parametrize("name", sorted(kernels.available_backends()))
def test_scalar_predicates_agree(name):
    k = kernels.available_backends()[name]
    for p in permutations(range(4)):
        assert k.is_vortex(*p) == _pykernels.is_vortex(*p)
    for p in permutations(range(6)):
        assert k.uudd_ok(p) == _pykernels.uudd_ok(p)
