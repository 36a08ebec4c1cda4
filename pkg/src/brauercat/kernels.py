"""Kernel selection: the compiled extension when it is importable, else the
pure-Python fallback.  Set ``BRAUERCAT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("BRAUERCAT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

compose_matchings = _impl.compose_matchings
permutation_sign = _impl.permutation_sign


def is_compiled() -> bool:
    return BACKEND == "cython"


__all__ = ["compose_matchings", "permutation_sign", "is_compiled", "BACKEND"]
