"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``BRANCHWORK_PURE_PYTHON=1`` to force the fallback. The compiled kernels
use 64-bit integers and raise ``OverflowError`` on overflow, in which case
the wrappers below rerun the pure-Python version on the same input.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("BRANCHWORK_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

COMPILED = _ckernels is not None
BACKEND = "cython" if COMPILED else "python"


def _dispatch(name: str):
    slow = getattr(_pykernels, name)
    if _ckernels is None:
        return slow
    fast = getattr(_ckernels, name)

    def run(*args):
        try:
            return fast(*args)
        except OverflowError:
            return slow(*args)

    run.__name__ = name
    run.__doc__ = slow.__doc__
    return run


complete_series = _dispatch("complete_series")
class_sums = _dispatch("class_sums")
poly_mul_truncated = _dispatch("poly_mul_truncated")
orbit_representatives = _dispatch("orbit_representatives")
