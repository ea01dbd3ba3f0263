"""Pure-Python Sturm-sequence kernels for symmetric tridiagonal matrices.

Reference implementation and fallback for the compiled ``_sturm`` module;
both expose the same two functions with identical results.
"""
from __future__ import annotations

import math

# pivot substituted for an exact zero in the LDL^T recurrence
_TINY = 1e-300


def sturm_count(diag, off_sq, lam: float) -> int:
    """Number of eigenvalues strictly below ``lam``.

    ``diag`` has length N, ``off_sq`` holds the N-1 squared off-diagonals.
    """
    d = diag.tolist() if hasattr(diag, "tolist") else list(diag)
    e2 = off_sq.tolist() if hasattr(off_sq, "tolist") else list(off_sq)
    return _count(d, e2, lam)


def _count(d: list, e2: list, lam: float) -> int:
    count = 0
    q = d[0] - lam
    if q == 0.0:
        q = -_TINY
    if q < 0.0:
        count += 1
    for i in range(1, len(d)):
        q = (d[i] - lam) - e2[i - 1] / q
        if q == 0.0:
            q = -_TINY
        if q < 0.0:
            count += 1
    return count


def lowest_eigenvalues(diag, off_sq, count: int, tol: float):
    """The ``count`` smallest eigenvalues by bisection, ascending."""
    d = diag.tolist() if hasattr(diag, "tolist") else list(diag)
    e2 = off_sq.tolist() if hasattr(off_sq, "tolist") else list(off_sq)
    n = len(d)
    if count > n:
        raise ValueError(f"requested {count} eigenvalues of a {n}x{n} matrix")
    # Gershgorin lower bound
    lo = math.inf
    for i in range(n):
        r = 0.0
        if i > 0:
            r += math.sqrt(e2[i - 1])
        if i < n - 1:
            r += math.sqrt(e2[i])
        lo = min(lo, d[i] - r)
    step = 1.0
    hi = lo + step
    while _count(d, e2, hi) < count:
        step *= 2.0
        hi = lo + step
    out = []
    left = lo
    for k in range(count):
        a, b = left, hi
        while b - a > tol * max(1.0, abs(a), abs(b)):
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break
            if _count(d, e2, mid) > k:
                b = mid
            else:
                a = mid
        val = 0.5 * (a + b)
        out.append(val)
        left = a
    return out
