# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: truncated series products/quotients/composition
and the fixed-step RK4 integrator for the radial Loewner equation.

Contracts match _corepy.py exactly; that module is the fallback."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"

ctypedef double complex cplx


def cauchy_mul(cnp.ndarray[cplx, ndim=1] a, cnp.ndarray[cplx, ndim=1] b):
    cdef Py_ssize_t n = a.shape[0]
    cdef cnp.ndarray[cplx, ndim=1] out = np.zeros(n, dtype=complex)
    cdef Py_ssize_t i, j
    cdef cplx ai
    for i in range(n):
        ai = a[i]
        if ai != 0:
            for j in range(n - i):
                out[i + j] = out[i + j] + ai * b[j]
    return out


def cauchy_div(cnp.ndarray[cplx, ndim=1] a, cnp.ndarray[cplx, ndim=1] b):
    cdef Py_ssize_t n = a.shape[0]
    cdef cnp.ndarray[cplx, ndim=1] q = np.empty(n, dtype=complex)
    cdef cplx b0 = b[0]
    cdef cplx acc
    cdef Py_ssize_t i, j
    for i in range(n):
        acc = a[i]
        for j in range(i):
            acc = acc - q[j] * b[i - j]
        q[i] = acc / b0
    return q


def compose(cnp.ndarray[cplx, ndim=1] outer, cnp.ndarray[cplx, ndim=1] inner):
    cdef Py_ssize_t n = outer.shape[0]
    cdef cnp.ndarray[cplx, ndim=1] h = np.zeros(n, dtype=complex)
    cdef cnp.ndarray[cplx, ndim=1] tmp = np.zeros(n, dtype=complex)
    cdef Py_ssize_t j, i, m
    cdef cplx hi
    h[0] = outer[n - 1]
    for j in range(n - 2, -1, -1):
        # tmp = (h * inner) truncated; inner[0] == 0 so degree shifts up
        for m in range(n):
            tmp[m] = 0
        for i in range(n):
            hi = h[i]
            if hi != 0:
                for m in range(1, n - i):
                    tmp[i + m] = tmp[i + m] + hi * inner[m]
        for m in range(n):
            h[m] = tmp[m]
        h[0] = h[0] + outer[j]
    return h


cdef inline cplx _rhs(cplx y, cplx kap):
    return -y * (1.0 + kap * y) / (1.0 - kap * y)


cdef inline cplx _drhs(cplx y, cplx kap):
    cdef cplx d = 1.0 - kap * y
    return (kap * kap * y * y - 2.0 * kap * y - 1.0) / (d * d)


def rk4_loewner(cnp.ndarray[cplx, ndim=1] z0, cnp.ndarray[cplx, ndim=1] kappa,
                double h, Py_ssize_t store_stride, bint with_deriv):
    cdef Py_ssize_t nsteps = kappa.shape[0]
    cdef Py_ssize_t nz = z0.shape[0]
    cdef Py_ssize_t nstored = nsteps // store_stride + 1
    cdef cnp.ndarray[cplx, ndim=2] traj = np.empty((nstored, nz), dtype=complex)
    cdef cnp.ndarray[cplx, ndim=2] dtraj
    cdef cnp.ndarray[cplx, ndim=1] y = z0.copy()
    cdef cnp.ndarray[cplx, ndim=1] v = np.ones(nz, dtype=complex)
    cdef Py_ssize_t s, p, row
    cdef cplx kap, k1, k2, k3, k4, y2, y3, y4, d1, d2, d3, d4, yy, vv
    cdef double h2 = 0.5 * h, h6 = h / 6.0
    if with_deriv:
        dtraj = np.empty((nstored, nz), dtype=complex)
    else:
        dtraj = np.empty((1, 1), dtype=complex)
    for p in range(nz):
        traj[0, p] = y[p]
        if with_deriv:
            dtraj[0, p] = 1.0
    row = 1
    for s in range(nsteps):
        kap = kappa[s]
        for p in range(nz):
            yy = y[p]
            k1 = _rhs(yy, kap)
            y2 = yy + h2 * k1
            k2 = _rhs(y2, kap)
            y3 = yy + h2 * k2
            k3 = _rhs(y3, kap)
            y4 = yy + h * k3
            k4 = _rhs(y4, kap)
            if with_deriv:
                vv = v[p]
                d1 = _drhs(yy, kap) * vv
                d2 = _drhs(y2, kap) * (vv + h2 * d1)
                d3 = _drhs(y3, kap) * (vv + h2 * d2)
                d4 = _drhs(y4, kap) * (vv + h * d3)
                v[p] = vv + h6 * (d1 + 2.0 * d2 + 2.0 * d3 + d4)
            yy = yy + h6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            y[p] = yy
            if abs(1.0 - kap * yy) < 1e-6:
                raise ValueError("singular")
            if abs(yy) >= 1.0:
                raise ValueError("escaped")
        if (s + 1) % store_stride == 0:
            for p in range(nz):
                traj[row, p] = y[p]
                if with_deriv:
                    dtraj[row, p] = v[p]
            row += 1
    if with_deriv:
        return traj, dtraj
    return traj, None
