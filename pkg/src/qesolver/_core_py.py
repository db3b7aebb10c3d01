"""Pure-Python Sturm-sequence bisection for symmetric tridiagonal matrices.

Mirrors the Cython kernel in `_core.pyx`; selected at import time when the
extension is unavailable (or QESOLVER_PURE_PYTHON is set).  Plain lists and
scalar arithmetic: fast enough for the default grids, no numpy overhead in
the inner loop.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

BACKEND = "python"


def sturm_count(d: Sequence[float], e2: Sequence[float], x: float, pivmin: float) -> int:
    """Number of eigenvalues of tridiag(d, e) strictly below x.

    e2 holds the squared off-diagonal entries.
    """
    q = d[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    count = 1 if q < 0.0 else 0
    for i in range(1, len(d)):
        q = d[i] - x - e2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def tridiag_lowest(d, e, count: int, rel_tol: float = 1e-14) -> np.ndarray:
    """The `count` lowest eigenvalues of tridiag(d, e), ascending."""
    d = list(map(float, d))
    e = list(map(float, e))
    n = len(d)
    if count < 1 or count > n:
        raise ValueError(f"count must be in [1, {n}], got {count}")
    e2 = [x * x for x in e]
    radius = [0.0] * n
    for i in range(n - 1):
        a = abs(e[i])
        radius[i] += a
        radius[i + 1] += a
    lo = min(d[i] - radius[i] for i in range(n))
    hi = max(d[i] + radius[i] for i in range(n))
    spread = hi - lo
    # smallest admissible Sturm pivot (dstebz-style safeguard)
    pivmin = max(max(e2, default=0.0) * 4.9e-32, 1e-300)
    tol_floor = spread * 1e-18

    out = np.empty(count)
    lower = lo
    for j in range(count):
        a, b = lower, hi
        for _ in range(200):
            if b - a <= max(rel_tol * max(abs(a), abs(b)), tol_floor):
                break
            mid = 0.5 * (a + b)
            if sturm_count(d, e2, mid, pivmin) >= j + 1:
                b = mid
            else:
                a = mid
        out[j] = 0.5 * (a + b)
        lower = a  # eigenvalue j+1 cannot lie below this
    return out
