# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled Sturm-sequence bisection for symmetric tridiagonal matrices.

Same contract as the pure-Python fallback in `_core_py`.
"""

import numpy as np

cimport numpy as cnp

BACKEND = "cython"


cdef int _sturm_count(double[::1] d, double[::1] e2, double x, double pivmin) noexcept nogil:
    cdef Py_ssize_t i, n = d.shape[0]
    cdef double q = d[0] - x
    if -pivmin < q < pivmin:
        q = -pivmin
    cdef int count = 1 if q < 0.0 else 0
    for i in range(1, n):
        q = d[i] - x - e2[i - 1] / q
        if -pivmin < q < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def sturm_count(d, e2, double x, double pivmin):
    """Number of eigenvalues of tridiag(d, e) strictly below x (e2 = e**2)."""
    cdef double[::1] dv = np.ascontiguousarray(d, dtype=np.float64)
    cdef double[::1] e2v = np.ascontiguousarray(e2, dtype=np.float64)
    return _sturm_count(dv, e2v, x, pivmin)


def tridiag_lowest(d, e, int count, double rel_tol=1e-14):
    """The `count` lowest eigenvalues of tridiag(d, e), ascending."""
    cdef cnp.ndarray[double, ndim=1] darr = np.ascontiguousarray(d, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] earr = np.ascontiguousarray(e, dtype=np.float64)
    cdef Py_ssize_t n = darr.shape[0]
    if count < 1 or count > n:
        raise ValueError(f"count must be in [1, {n}], got {count}")
    cdef cnp.ndarray[double, ndim=1] e2arr = earr * earr
    cdef cnp.ndarray[double, ndim=1] radius = np.zeros(n)
    radius[:n - 1] += np.abs(earr)
    radius[1:] += np.abs(earr)
    cdef double lo = float(np.min(darr - radius))
    cdef double hi = float(np.max(darr + radius))
    cdef double spread = hi - lo
    # smallest admissible Sturm pivot (dstebz-style safeguard)
    cdef double e2max = float(np.max(e2arr)) if n > 1 else 0.0
    cdef double pivmin = max(e2max * 4.9e-32, 1e-300)
    cdef double tol_floor = spread * 1e-18

    cdef cnp.ndarray[double, ndim=1] out = np.empty(count)
    cdef double[::1] dv = darr
    cdef double[::1] e2v = e2arr
    cdef double a, b, mid, lower = lo
    cdef int j, it
    with nogil:
        for j in range(count):
            a = lower
            b = hi
            for it in range(200):
                if b - a <= max(rel_tol * max(fabs_c(a), fabs_c(b)), tol_floor):
                    break
                mid = 0.5 * (a + b)
                if _sturm_count(dv, e2v, mid, pivmin) >= j + 1:
                    b = mid
                else:
                    a = mid
            out[j] = 0.5 * (a + b)
            lower = a
    return out


cdef inline double fabs_c(double x) noexcept nogil:
    return -x if x < 0.0 else x
