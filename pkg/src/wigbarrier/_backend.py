"""Selects the quadrature kernel backend at import time.

The compiled extension is preferred; the pure-NumPy fallback is used when
the extension is absent or when ``WIGBARRIER_PURE_PYTHON`` is set (useful
for benchmarking and for testing the fallback path).
"""

import os

if os.environ.get("WIGBARRIER_PURE_PYTHON"):
    from . import _core_py as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl

profile_sums = _impl.profile_sums
node_counts = _impl.node_counts


def backend_name():
    """Name of the active kernel backend: 'cython' or 'python'."""
    return _impl.BACKEND_NAME
