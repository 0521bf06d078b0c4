# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: boundary-offset decay and the DTW recursion."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline int _sign(double x) nogil:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def offset_decay(offset, steps):
    """See motionsimp._kernels._fallback.offset_decay."""
    cdef double[:] o = np.array(offset, dtype=np.float64)
    cdef double[:, :] d = np.ascontiguousarray(steps, dtype=np.float64)
    cdef Py_ssize_t n = d.shape[0]
    out_arr = np.empty((n, 3), dtype=np.float64)
    cdef double[:, :] out = out_arr
    cdef Py_ssize_t f, a
    cdef double u
    with nogil:
        for f in range(n):
            for a in range(3):
                out[f, a] = o[a]
            for a in range(3):
                if _sign(d[f, a]) == -_sign(o[a]):
                    u = o[a] + d[f, a]
                    if _sign(u) != _sign(o[a]):
                        o[a] = 0.0
                    else:
                        o[a] = u
    return out_arr


def dtw_accumulate(dist):
    """See motionsimp._kernels._fallback.dtw_accumulate."""
    cdef double[:, :] dmat = np.ascontiguousarray(dist, dtype=np.float64)
    cdef Py_ssize_t n = dmat.shape[0]
    cdef Py_ssize_t m = dmat.shape[1]
    cdef double[:, :] work = np.empty((2, m), dtype=np.float64)
    cdef Py_ssize_t i, j, cur, prev
    cdef double best
    with nogil:
        work[0, 0] = dmat[0, 0]
        for j in range(1, m):
            work[0, j] = work[0, j - 1] + dmat[0, j]
        prev = 0
        for i in range(1, n):
            cur = i % 2
            prev = 1 - cur
            work[cur, 0] = work[prev, 0] + dmat[i, 0]
            for j in range(1, m):
                best = work[prev, j]
                if work[cur, j - 1] < best:
                    best = work[cur, j - 1]
                if work[prev, j - 1] < best:
                    best = work[prev, j - 1]
                work[cur, j] = dmat[i, j] + best
        prev = (n - 1) % 2
    return float(work[prev, m - 1])
