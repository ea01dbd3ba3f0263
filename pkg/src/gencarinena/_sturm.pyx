# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Sturm-sequence kernels; same contract as ``_sturm_py``."""
from libc.math cimport sqrt, fabs, INFINITY

import numpy as np

cdef double _TINY = 1e-300


cdef Py_ssize_t _count(const double[::1] d, const double[::1] e2, double lam) noexcept nogil:
    cdef Py_ssize_t i, n = d.shape[0], count = 0
    cdef double q = d[0] - lam
    if q == 0.0:
        q = -_TINY
    if q < 0.0:
        count += 1
    for i in range(1, n):
        q = (d[i] - lam) - e2[i - 1] / q
        if q == 0.0:
            q = -_TINY
        if q < 0.0:
            count += 1
    return count


def sturm_count(diag, off_sq, double lam):
    cdef const double[::1] d = np.ascontiguousarray(diag, dtype=np.float64)
    cdef const double[::1] e2 = np.ascontiguousarray(off_sq, dtype=np.float64)
    return int(_count(d, e2, lam))


def lowest_eigenvalues(diag, off_sq, Py_ssize_t count, double tol):
    cdef const double[::1] d = np.ascontiguousarray(diag, dtype=np.float64)
    cdef const double[::1] e2 = np.ascontiguousarray(off_sq, dtype=np.float64)
    cdef Py_ssize_t n = d.shape[0], i, k
    cdef double lo = INFINITY, r, step, hi, a, b, mid, left
    if count > n:
        raise ValueError(f"requested {count} eigenvalues of a {n}x{n} matrix")
    for i in range(n):
        r = 0.0
        if i > 0:
            r += sqrt(e2[i - 1])
        if i < n - 1:
            r += sqrt(e2[i])
        if d[i] - r < lo:
            lo = d[i] - r
    out = []
    with nogil:
        step = 1.0
        hi = lo + step
        while _count(d, e2, hi) < count:
            step *= 2.0
            hi = lo + step
    left = lo
    for k in range(count):
        a = left
        b = hi
        with nogil:
            while b - a > tol * max(1.0, fabs(a), fabs(b)):
                mid = 0.5 * (a + b)
                if mid <= a or mid >= b:
                    break
                if _count(d, e2, mid) > k:
                    b = mid
                else:
                    a = mid
        out.append(0.5 * (a + b))
        left = a
    return out
