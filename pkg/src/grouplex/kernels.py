"""Backend selection for the hot kernels.

The compiled extension is used when it imports; set ``GROUPLEX_PURE=1`` to
force the pure-Python fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("GROUPLEX_PURE", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
prepare = _impl.prepare
closure = _impl.closure
element_orders = _impl.element_orders
first_nonassociative = _impl.first_nonassociative

__all__ = ["BACKEND", "prepare", "closure", "element_orders", "first_nonassociative"]
