# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Semantics match ``_fallback`` exactly, including
floating-point accumulation order where noted."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def sample_inverse_cdf(const double[::1] cdf, const double[::1] u):
    """Index of the first ``cdf[i] > u[k] * cdf[-1]`` for each uniform."""
    cdef Py_ssize_t n = cdf.shape[0]
    cdef Py_ssize_t r = u.shape[0]
    cdef Py_ssize_t k, lo, hi, mid
    cdef double total, t
    out = np.empty(r, dtype=np.int64)
    cdef cnp.int64_t[::1] res = out
    if n == 0:
        raise ValueError("empty cdf")
    total = cdf[n - 1]
    with nogil:
        for k in range(r):
            t = u[k] * total
            lo = 0
            hi = n
            while lo < hi:
                mid = (lo + hi) >> 1
                if cdf[mid] <= t:
                    lo = mid + 1
                else:
                    hi = mid
            if lo >= n:
                lo = n - 1
            res[k] = lo
    return out


def count_draws(const cnp.int64_t[::1] draws, Py_ssize_t size):
    out = np.zeros(size, dtype=np.int64)
    cdef cnp.int64_t[::1] c = out
    cdef Py_ssize_t k
    with nogil:
        for k in range(draws.shape[0]):
            c[draws[k]] += 1
    return out


def accumulate_laplacian(Py_ssize_t n, const cnp.int64_t[::1] u,
                         const cnp.int64_t[::1] v, const double[::1] w):
    """Dense sum of w_e (e_u - e_v)(e_u - e_v)^T.

    Accumulation order: diagonal at u for all edges, diagonal at v for all
    edges, then off-diagonals. The fallback uses the same order.
    """
    out = np.zeros((n, n), dtype=np.float64)
    cdef double[:, ::1] L = out
    cdef Py_ssize_t e, m = u.shape[0]
    with nogil:
        for e in range(m):
            L[u[e], u[e]] += w[e]
        for e in range(m):
            L[v[e], v[e]] += w[e]
        for e in range(m):
            L[u[e], v[e]] -= w[e]
        for e in range(m):
            L[v[e], u[e]] -= w[e]
    return out


def outer_accumulate(const double[:, ::1] At, const double[:, ::1] B,
                     const cnp.int64_t[::1] idx, const double[::1] scale):
    """Sum over k of scale[k] * outer(At[idx[k]], B[idx[k]]).

    ``At`` is the transpose of the left factor, so row access is contiguous.
    """
    cdef Py_ssize_t rows = At.shape[1]
    cdef Py_ssize_t cols = B.shape[1]
    cdef Py_ssize_t k, i, j, s
    cdef double a
    out = np.zeros((rows, cols), dtype=np.float64)
    cdef double[:, ::1] Y = out
    with nogil:
        for k in range(idx.shape[0]):
            s = idx[k]
            for i in range(rows):
                a = scale[k] * At[s, i]
                if a == 0.0:
                    continue
                for j in range(cols):
                    Y[i, j] += a * B[s, j]
    return out
