"""Backend selection for the exact elimination kernels.

The compiled ``_bareiss`` extension is used when importable; otherwise, or
when ``KAPPARING_PURE_PYTHON=1`` is set, the pure-Python twin is used.  Both
expose ``rank_int`` and ``det_int`` with identical results.
"""

import os

from . import _bareiss_py

if os.environ.get("KAPPARING_PURE_PYTHON", "") not in ("", "0"):
    _impl = _bareiss_py
    BACKEND = "python"
else:
    try:
        from . import _bareiss as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _bareiss_py
        BACKEND = "python"

rank_int = _impl.rank_int
det_int = _impl.det_int

__all__ = ["BACKEND", "rank_int", "det_int"]
