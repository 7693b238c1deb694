"""Hot numeric kernels with a compiled and a pure-numpy implementation.

The active implementation is picked once at import time (see
:mod:`twocross._accel`); both modules stay importable for comparison.
"""

from .._accel import BACKEND, HAVE_NUMBA
from . import _numpy as numpy_impl

if HAVE_NUMBA:
    from . import _numba as numba_impl
    _active = numba_impl
else:
    numba_impl = None
    _active = numpy_impl

INF_DIST = _active.INF_DIST
# memory-bound: the compiled version saves about a millisecond but costs
# a JIT startup on first use, so recognition always takes the numpy path
switch_counts = numpy_impl.switch_counts
bellman_ford = _active.bellman_ford
cc_tables = _active.cc_tables

__all__ = [
    "BACKEND",
    "HAVE_NUMBA",
    "INF_DIST",
    "bellman_ford",
    "cc_tables",
    "numba_impl",
    "numpy_impl",
    "switch_counts",
]
