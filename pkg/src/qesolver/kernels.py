"""Backend selection for the tridiagonal eigenvalue kernel.

The compiled Cython extension is preferred; the pure-Python implementation
is used when the extension is missing or QESOLVER_PURE_PYTHON is set.
`benchmarks/bench_backends.py` compares the two.
"""

from __future__ import annotations

import os

if os.environ.get("QESOLVER_PURE_PYTHON"):
    from . import _core_py as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl

BACKEND: str = _impl.BACKEND
sturm_count = _impl.sturm_count
tridiag_lowest = _impl.tridiag_lowest

__all__ = ["BACKEND", "sturm_count", "tridiag_lowest"]
