# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled point-evaluation kernels for sparse bipolynomials.

Same contract as ``pharmonic._pykernels``.
"""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef inline void _fill_powers(double complex w, double complex* buf, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t k
    buf[0] = 1.0
    for k in range(1, n + 1):
        buf[k] = buf[k - 1] * w


def eval_bipoly(const cnp.int64_t[:] i_exp, const cnp.int64_t[:] j_exp,
                const double complex[:] coef, z):
    cdef double complex[:] zv = np.ascontiguousarray(z, dtype=np.complex128)
    cdef Py_ssize_t npts = zv.shape[0], nterms = coef.shape[0]
    out = np.zeros(npts, dtype=np.complex128)
    cdef double complex[:] ov = out
    if nterms == 0:
        return out
    cdef Py_ssize_t mi = 0, mj = 0, t, q
    for t in range(nterms):
        if i_exp[t] > mi:
            mi = i_exp[t]
        if j_exp[t] > mj:
            mj = j_exp[t]
    cdef double complex* zp = <double complex*> malloc((mi + 1) * sizeof(double complex))
    cdef double complex* zbp = <double complex*> malloc((mj + 1) * sizeof(double complex))
    cdef double complex acc, w
    if zp == NULL or zbp == NULL:
        free(zp)
        free(zbp)
        raise MemoryError()
    with nogil:
        for q in range(npts):
            w = zv[q]
            _fill_powers(w, zp, mi)
            _fill_powers(w.conjugate(), zbp, mj)
            acc = 0
            for t in range(nterms):
                acc = acc + coef[t] * zp[i_exp[t]] * zbp[j_exp[t]]
            ov[q] = acc
    free(zp)
    free(zbp)
    return out


def eval_jet(const cnp.int64_t[:] i_exp, const cnp.int64_t[:] j_exp,
             const double complex[:] coef, z):
    cdef double complex[:] zv = np.ascontiguousarray(z, dtype=np.complex128)
    cdef Py_ssize_t npts = zv.shape[0], nterms = coef.shape[0]
    f = np.zeros(npts, dtype=np.complex128)
    fz = np.zeros(npts, dtype=np.complex128)
    fzb = np.zeros(npts, dtype=np.complex128)
    cdef double complex[:] fv = f, fzv = fz, fzbv = fzb
    if nterms == 0:
        return f, fz, fzb
    cdef Py_ssize_t mi = 0, mj = 0, t, q, a, b
    for t in range(nterms):
        if i_exp[t] > mi:
            mi = i_exp[t]
        if j_exp[t] > mj:
            mj = j_exp[t]
    cdef double complex* zp = <double complex*> malloc((mi + 1) * sizeof(double complex))
    cdef double complex* zbp = <double complex*> malloc((mj + 1) * sizeof(double complex))
    cdef double complex w, s0, s1, s2, c
    if zp == NULL or zbp == NULL:
        free(zp)
        free(zbp)
        raise MemoryError()
    with nogil:
        for q in range(npts):
            w = zv[q]
            _fill_powers(w, zp, mi)
            _fill_powers(w.conjugate(), zbp, mj)
            s0 = 0
            s1 = 0
            s2 = 0
            for t in range(nterms):
                a = i_exp[t]
                b = j_exp[t]
                c = coef[t]
                s0 = s0 + c * zp[a] * zbp[b]
                if a > 0:
                    s1 = s1 + (c * a) * zp[a - 1] * zbp[b]
                if b > 0:
                    s2 = s2 + (c * b) * zp[a] * zbp[b - 1]
            fv[q] = s0
            fzv[q] = s1
            fzbv[q] = s2
    free(zp)
    free(zbp)
    return f, fz, fzb
