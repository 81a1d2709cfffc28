"""Kernel selector.

Imports the compiled kernel when available, otherwise the pure-Python one.
HOPFTWIST_PURE=1 forces the pure kernel regardless of what is installed.
"""

import os

if os.environ.get("HOPFTWIST_PURE"):
    from . import _pykernel as _impl
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernel as _impl

BACKEND = _impl.BACKEND
tensor_convolve = _impl.tensor_convolve
cyclo_mul = _impl.cyclo_mul
torus_scan = _impl.torus_scan
