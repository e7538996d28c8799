# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; twin of ``_kernels_py`` (same signatures)."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sinh

cnp.import_array()

BACKEND_NAME = "cython"

cdef double _DE_SATURATE = 20.0


def imcot(object u_in, double d, double eps):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] u = np.ascontiguousarray(u_in, dtype=np.float64).ravel()
    cdef Py_ssize_t n = u.shape[0], i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double de, s, sh
    for i in range(n):
        de = u[i] * eps
        if de < _DE_SATURATE:
            s = sin(u[i] * d)
            sh = sinh(de)
            out[i] = sinh(2.0 * de) / (2.0 * (s * s + sh * sh))
        else:
            out[i] = 1.0
    return out.reshape(np.shape(u_in))


def cot_coef_ee(object u_in, double q0, double b):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] u = np.ascontiguousarray(u_in, dtype=np.float64).ravel()
    cdef Py_ssize_t n = u.shape[0], i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double u2, q2 = q0 * q0
    for i in range(n):
        u2 = u[i] * u[i]
        out[i] = u2 + u2 * u2 * cos(2.0 * b * u[i]) / q2
    return out.reshape(np.shape(u_in))


def cot_coef_bb(object u_in, double q0, double b):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] u = np.ascontiguousarray(u_in, dtype=np.float64).ravel()
    cdef Py_ssize_t n = u.shape[0], i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double u2, q2 = q0 * q0
    for i in range(n):
        u2 = u[i] * u[i]
        out[i] = (q2 + u2) * (1.0 - u2 * cos(2.0 * b * u[i]) / q2)
    return out.reshape(np.shape(u_in))


def sin_part_ee(object u_in, double q0, double b):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] u = np.ascontiguousarray(u_in, dtype=np.float64).ravel()
    cdef Py_ssize_t n = u.shape[0], i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double u2, q2 = q0 * q0
    for i in range(n):
        u2 = u[i] * u[i]
        out[i] = u2 * u2 * sin(2.0 * b * u[i]) / q2
    return out.reshape(np.shape(u_in))


def sin_part_bb(object u_in, double q0, double b):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] u = np.ascontiguousarray(u_in, dtype=np.float64).ravel()
    cdef Py_ssize_t n = u.shape[0], i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double u2, q2 = q0 * q0
    for i in range(n):
        u2 = u[i] * u[i]
        out[i] = -(q2 + u2) * u2 * sin(2.0 * b * u[i]) / q2
    return out.reshape(np.shape(u_in))


def weighted_imcot(object u_in, double q0, double b, double d, double eps, int kind):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] u = np.ascontiguousarray(u_in, dtype=np.float64).ravel()
    cdef Py_ssize_t n = u.shape[0], i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double u2, de, s, sh, w, coef, q2 = q0 * q0
    for i in range(n):
        u2 = u[i] * u[i]
        if kind == 0:
            coef = u2 + u2 * u2 * cos(2.0 * b * u[i]) / q2
        else:
            coef = (q2 + u2) * (1.0 - u2 * cos(2.0 * b * u[i]) / q2)
        de = u[i] * eps
        if de < _DE_SATURATE:
            s = sin(u[i] * d)
            sh = sinh(de)
            w = sinh(2.0 * de) / (2.0 * (s * s + sh * sh))
        else:
            w = 1.0
        out[i] = coef * w
    return out.reshape(np.shape(u_in))
