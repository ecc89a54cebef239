# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: exact-integer LHV strategy scans and early-exit
canonical forms under signed-permutation group tables.  Semantics match
``bellforge.kernels._pure`` exactly."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def lhv_max_int(coeffs):
    """Exact max of |functional value| over all deterministic strategies.

    Depth-first contraction: fixing one party's sign vector reduces the
    coefficient tensor by one axis; leaves are scalars.
    """
    c = np.ascontiguousarray(np.asarray(coeffs, dtype=np.int64))
    cdef int n = c.ndim
    sizes = list(c.shape)
    # rests[k] = product of dims after axis k
    rests = []
    prod = 1
    for k in range(n - 1, -1, -1):
        rests.insert(0, prod)
        prod *= sizes[k]
    cdef list bufs = [np.zeros(rests[k], dtype=np.int64) for k in range(n)]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] flat = c.reshape(-1)
    cdef long long best = 0
    best = _dfs(flat, 0, n, tuple(sizes), tuple(rests), bufs)
    return int(best)


cdef long long _dfs(cnp.int64_t[:] cur, int level, int n, tuple sizes,
                    tuple rests, list bufs):
    cdef long long best = 0, v
    cdef int m = sizes[level]
    cdef Py_ssize_t rest = rests[level]
    cdef Py_ssize_t i, t
    cdef unsigned int r
    cdef cnp.int64_t[:] nxt
    if level == n - 1:
        # leaves: rest == 1 per setting; contract directly
        for r in range(1u << m):
            v = 0
            for i in range(m):
                if (r >> i) & 1u:
                    v -= cur[i]
                else:
                    v += cur[i]
            if v < 0:
                v = -v
            if v > best:
                best = v
        return best
    nxt = bufs[level]
    for r in range(1u << m):
        for t in range(rest):
            nxt[t] = 0
        for i in range(m):
            if (r >> i) & 1u:
                for t in range(rest):
                    nxt[t] -= cur[i * rest + t]
            else:
                for t in range(rest):
                    nxt[t] += cur[i * rest + t]
        v = _dfs(nxt, level + 1, n, sizes, rests, bufs)
        if v > best:
            best = v
    return best


def canonical_form(g, perms, signs):
    """Lexicographically maximal group image of a flattened coefficient
    vector; rows are compared lazily with early exit, so most group
    elements are rejected after one or two entries."""
    cdef cnp.ndarray[cnp.int8_t, ndim=1] gv = np.ascontiguousarray(g, dtype=np.int8)
    cdef cnp.ndarray[cnp.int16_t, ndim=2] pv = np.ascontiguousarray(perms, dtype=np.int16)
    cdef cnp.ndarray[cnp.int8_t, ndim=2] sv = np.ascontiguousarray(signs, dtype=np.int8)
    cdef Py_ssize_t ncols = gv.shape[0]
    cdef Py_ssize_t nrows = pv.shape[0]
    cdef cnp.ndarray[cnp.int8_t, ndim=1] best = np.empty(ncols, dtype=np.int8)
    cdef Py_ssize_t r, col, c2
    cdef int v
    for col in range(ncols):
        best[col] = sv[0, col] * gv[pv[0, col]]
    for r in range(1, nrows):
        for col in range(ncols):
            v = sv[r, col] * gv[pv[r, col]]
            if v < best[col]:
                break
            if v > best[col]:
                best[col] = v
                for c2 in range(col + 1, ncols):
                    best[c2] = sv[r, c2] * gv[pv[r, c2]]
                break
    return np.asarray(best)
