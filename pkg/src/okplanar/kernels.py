"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``OKPLANAR_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and by the equivalence tests).
"""

from __future__ import annotations

import os

from . import _fallback

BACKEND = "python"
_impl = _fallback

if not os.environ.get("OKPLANAR_PURE_PYTHON"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _fallback


def crossing_csr(n, us, vs):
    """Crossing graph of the chords ``(us[e], vs[e])``; see ``_fallback``."""
    ptr, idx = _impl.crossing_csr(n, us, vs)
    if BACKEND == "cython":
        return ptr.tolist(), idx.tolist()
    return ptr, idx


def piercing_filter(n, us, vs):
    """Callable ``(x, y, candidate ids) -> piercing ids of link (x, y)``, bottom-to-top."""
    return _impl.PiercingFilter(n, us, vs)
