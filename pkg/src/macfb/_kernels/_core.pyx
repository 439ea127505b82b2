# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: per-row exact enumeration of the finite joint law.

Mirrors ``_fallback.py`` (same entropy-difference definitions, same column
order); kept scalar-per-row so no large intermediates are materialized.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport log2

cnp.import_array()

KIND_NOISY = 0
KIND_ERASURE = 1


cdef inline double nlog2(double x) noexcept nogil:
    if x > 0.0:
        return -x * log2(x)
    return 0.0


cdef void _row_input_stats(const double* p, const double* q1, const double* q2,
                           Py_ssize_t k, int kind, double* out) noexcept nogil:
    cdef int ny = 4 if kind == 0 else 3
    cdef Py_ssize_t t
    cdef int x1, x2, y, dy
    cdef double w, a, frac
    cdef double qa[2]
    cdef double qb[2]
    # accumulated marginal tables (T axis handled in-loop, others fixed size)
    cdef double m_x1x2y[2][2][4]
    cdef double m_y[4]
    cdef double s_t = 0.0, s_tx1 = 0.0, s_tx2 = 0.0, s_full = 0.0
    cdef double s_tx1y = 0.0, s_tx2y = 0.0
    cdef double tab_tx1y[2][4]
    cdef double tab_tx2y[2][4]
    cdef double s_x1x2y = 0.0, s_x1x2 = 0.0, s_x1y = 0.0, s_x2y = 0.0
    cdef double s_x1 = 0.0, s_x2 = 0.0, s_y = 0.0
    cdef double row_x1[2]
    cdef double row_x2[2]

    frac = 0.5 if kind == 0 else 1.0

    for x1 in range(2):
        for x2 in range(2):
            for y in range(4):
                m_x1x2y[x1][x2][y] = 0.0

    for t in range(k):
        s_t += nlog2(p[t])
        qa[0] = q1[t]; qa[1] = 1.0 - q1[t]
        qb[0] = q2[t]; qb[1] = 1.0 - q2[t]
        s_tx1 += nlog2(p[t] * qa[0]) + nlog2(p[t] * qa[1])
        s_tx2 += nlog2(p[t] * qb[0]) + nlog2(p[t] * qb[1])
        for x1 in range(2):
            for y in range(4):
                tab_tx1y[x1][y] = 0.0
                tab_tx2y[x1][y] = 0.0
        for x1 in range(2):
            for x2 in range(2):
                w = p[t] * qa[x1] * qb[x2]
                for dy in range(2 if kind == 0 else 1):
                    y = x1 + x2 + dy
                    a = w * frac
                    s_full += nlog2(a)
                    m_x1x2y[x1][x2][y] += a
                    tab_tx1y[x1][y] += a
                    tab_tx2y[x2][y] += a
        for x1 in range(2):
            for y in range(ny):
                s_tx1y += nlog2(tab_tx1y[x1][y])
                s_tx2y += nlog2(tab_tx2y[x1][y])

    for y in range(4):
        m_y[y] = 0.0
    row_x1[0] = 0.0; row_x1[1] = 0.0
    row_x2[0] = 0.0; row_x2[1] = 0.0
    cdef double cell
    cdef double tab_x1y[2][4]
    cdef double tab_x2y[2][4]
    for x1 in range(2):
        for y in range(4):
            tab_x1y[x1][y] = 0.0
            tab_x2y[x1][y] = 0.0
    for x1 in range(2):
        for x2 in range(2):
            cell = 0.0
            for y in range(ny):
                a = m_x1x2y[x1][x2][y]
                s_x1x2y += nlog2(a)
                cell += a
                m_y[y] += a
                tab_x1y[x1][y] += a
                tab_x2y[x2][y] += a
            s_x1x2 += nlog2(cell)
            row_x1[x1] += cell
            row_x2[x2] += cell
    for x1 in range(2):
        s_x1 += nlog2(row_x1[x1])
        s_x2 += nlog2(row_x2[x1])
        for y in range(ny):
            s_x1y += nlog2(tab_x1y[x1][y])
            s_x2y += nlog2(tab_x2y[x1][y])
    for y in range(ny):
        s_y += nlog2(m_y[y])

    out[0] = s_tx1 - s_t
    out[1] = s_tx2 - s_t
    out[2] = (s_x1x2 - s_x2) - (s_x1x2y - s_x2y)
    out[3] = (s_x1x2 - s_x1) - (s_x1x2y - s_x1y)
    out[4] = s_y - (s_x1x2y - s_x1x2)
    out[5] = s_y
    out[6] = s_full - s_tx2y
    out[7] = s_full - s_tx1y


def input_stats(cnp.ndarray[cnp.float64_t, ndim=2] p,
                cnp.ndarray[cnp.float64_t, ndim=2] q1,
                cnp.ndarray[cnp.float64_t, ndim=2] q2,
                int kind):
    """Batch information quantities; see ``_fallback.input_stats``."""
    cdef Py_ssize_t n = p.shape[0]
    cdef Py_ssize_t k = p.shape[1]
    if q1.shape[0] != n or q2.shape[0] != n or q1.shape[1] != k or q2.shape[1] != k:
        raise ValueError("p, q1, q2 must share shape (n, K)")
    cdef cnp.ndarray[cnp.float64_t, ndim=2] pc = np.ascontiguousarray(p)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] q1c = np.ascontiguousarray(q1)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] q2c = np.ascontiguousarray(q2)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n, 8), dtype=np.float64)
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            _row_input_stats(&pc[i, 0], &q1c[i, 0], &q2c[i, 0], k, kind, &out[i, 0])
    return out


cdef void _row_cutset(const double* j, int kind, double* out) noexcept nogil:
    cdef int ny = 4 if kind == 0 else 3
    cdef int x1, x2, y, dy
    cdef double a, w, frac
    cdef double m_y[4]
    cdef double tab_x1y[2][4]
    cdef double tab_x2y[2][4]
    cdef double row_x1[2]
    cdef double row_x2[2]
    cdef double s_x1x2y = 0.0, s_x1x2 = 0.0, s_x1y = 0.0, s_x2y = 0.0
    cdef double s_x1 = 0.0, s_x2 = 0.0, s_y = 0.0

    frac = 0.5 if kind == 0 else 1.0
    for y in range(4):
        m_y[y] = 0.0
    for x1 in range(2):
        row_x1[x1] = 0.0
        row_x2[x1] = 0.0
        for y in range(4):
            tab_x1y[x1][y] = 0.0
            tab_x2y[x1][y] = 0.0

    for x1 in range(2):
        for x2 in range(2):
            w = j[2 * x1 + x2]
            s_x1x2 += nlog2(w)
            row_x1[x1] += w
            row_x2[x2] += w
            for dy in range(2 if kind == 0 else 1):
                y = x1 + x2 + dy
                a = w * frac
                s_x1x2y += nlog2(a)
                m_y[y] += a
                tab_x1y[x1][y] += a
                tab_x2y[x2][y] += a
    for x1 in range(2):
        s_x1 += nlog2(row_x1[x1])
        s_x2 += nlog2(row_x2[x1])
        for y in range(ny):
            s_x1y += nlog2(tab_x1y[x1][y])
            s_x2y += nlog2(tab_x2y[x1][y])
    for y in range(ny):
        s_y += nlog2(m_y[y])

    out[0] = (s_x1x2 - s_x2) - (s_x1x2y - s_x2y)
    out[1] = (s_x1x2 - s_x1) - (s_x1x2y - s_x1y)
    out[2] = s_y - (s_x1x2y - s_x1x2)


def cutset_stats(cnp.ndarray[cnp.float64_t, ndim=2] joint, int kind=KIND_NOISY):
    """Batch cut-set mutual informations; see ``_fallback.cutset_stats``."""
    cdef Py_ssize_t n = joint.shape[0]
    if joint.shape[1] != 4:
        raise ValueError("joint must have shape (n, 4)")
    cdef cnp.ndarray[cnp.float64_t, ndim=2] jc = np.ascontiguousarray(joint)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n, 3), dtype=np.float64)
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            _row_cutset(&jc[i, 0], kind, &out[i, 0])
    return out
