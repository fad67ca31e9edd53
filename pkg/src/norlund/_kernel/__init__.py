"""Series-arithmetic kernels with a compiled core and a pure-Python fallback.

The compiled extension (built from ``_speedups.pyx``) is used when it
importable; otherwise the pure-Python reference takes over.  Set the
environment variable ``NORLUND_PURE=1`` to force the fallback.
"""

import os

from . import pure

if os.environ.get("NORLUND_PURE"):
    _impl = pure
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = pure

BACKEND = "compiled" if _impl is not pure else "pure"

conv = _impl.conv
conv_trunc = _impl.conv_trunc
inv_trunc = _impl.inv_trunc
exp_trunc = _impl.exp_trunc
log_trunc = _impl.log_trunc


def backend():
    """Name of the active kernel backend: ``"compiled"`` or ``"pure"``."""
    return BACKEND
