"""Backend selection for the enumeration kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise, or
when ``UUDD_PURE_PYTHON`` is set to a non-empty value, the pure-Python
``_pykernels`` module is used.  Both expose the same functions.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _select() -> ModuleType:
    if os.environ.get("UUDD_PURE_PYTHON"):
        return _pykernels
    try:
        from . import _kernels
    except ImportError:
        return _pykernels
    return _kernels


backend: ModuleType = _select()
BACKEND: str = backend.BACKEND


def available_backends() -> dict[str, ModuleType]:
    out = {"python": _pykernels}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["cython"] = _kernels
    return out
