"""Backend selection for the hot integer kernels.

Set ``MATORDER_JIT=0`` before import to force the pure-numpy code paths.
The numba path is also skipped silently when numba cannot be imported.
"""

import os

_flag = os.environ.get("MATORDER_JIT", "1").strip().lower()
JIT_REQUESTED = _flag not in ("0", "false", "no", "off")

try:
    if not JIT_REQUESTED:
        raise ImportError
    from numba import njit
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

    def njit(func=None, **kwargs):
        if func is not None:
            return func

        def wrapper(f):
            return f

        return wrapper


BACKEND = "numba" if HAS_NUMBA else "numpy"
