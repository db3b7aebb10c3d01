"""Scalar root location by sign-change scan plus bisection.

Self-contained (works with float and numpy.longdouble alike) so the
table-reproduction harness can run in extended precision.
"""

from __future__ import annotations

from typing import Callable, List, Sequence

from .errors import SolverError

__all__ = ["bisect_root", "scan_roots"]


def bisect_root(f: Callable, lo, hi, rel_tol=1e-14, max_iter: int = 200):
    """Bisect a bracketed sign change of f down to relative width rel_tol."""
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise SolverError(f"no sign change in [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = (lo + hi) / 2
        if abs(hi - lo) <= rel_tol * max(abs(lo), abs(hi), 1.0):
            return mid
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def scan_roots(
    f: Callable,
    lo,
    hi,
    n_scan: int = 200,
    rel_tol=1e-14,
    dedup_rel: float = 1e-9,
) -> List:
    """All sign-change roots of f on [lo, hi], ascending, deduplicated.

    Even-multiplicity roots (no sign change) are not detected; callers that
    need a completeness statement compare the count against the expected
    polynomial degree.
    """
    xs = [lo + (hi - lo) * i / n_scan for i in range(n_scan + 1)]
    fs = [f(x) for x in xs]
    roots: List = []
    for i in range(n_scan):
        if fs[i] == 0:
            roots.append(xs[i])
        elif (fs[i] > 0) != (fs[i + 1] > 0):
            roots.append(bisect_root(f, xs[i], xs[i + 1], rel_tol=rel_tol))
    if fs[-1] == 0:
        roots.append(xs[-1])
    deduped: List = []
    for r in sorted(roots):
        if not deduped or abs(r - deduped[-1]) > dedup_rel * max(abs(r), 1.0):
            deduped.append(r)
    return deduped
