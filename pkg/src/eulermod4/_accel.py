"""Numba switch for the hot kernels.

Kernels are written once over plain numpy arrays. When numba is importable
and ``EULERMOD4_NUMBA`` is not set to ``0``, they are compiled with
``numba.njit``; otherwise the same functions run as ordinary Python.
The uncompiled function is always reachable as ``kernel.py_func``.
"""

from __future__ import annotations

import os

_FLAG = os.environ.get("EULERMOD4_NUMBA", "1").strip().lower()

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

NUMBA_ENABLED = _numba is not None and _FLAG not in ("0", "false", "no", "off")


def jit(func):
    """Compile ``func`` with numba when enabled, else return it unchanged."""
    if NUMBA_ENABLED:
        return _numba.njit(cache=True)(func)
    func.py_func = func
    return func
