"""Backend selection for the numeric kernels.

Set ``TWOCROSS_DISABLE_NUMBA=1`` to force the pure-numpy kernels even when
numba is importable.
"""

import os
import warnings

_DISABLED = os.environ.get("TWOCROSS_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _DISABLED:
        raise ImportError("numba disabled by TWOCROSS_DISABLE_NUMBA")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn

    if not _DISABLED:
        warnings.warn("numba not installed; using pure-numpy kernels", RuntimeWarning)

BACKEND = "numba" if HAVE_NUMBA else "numpy"
