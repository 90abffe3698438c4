# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice sums.  Same contract as ``_pykernels``."""

import numpy as np

from libc.math cimport ceil, cos, exp, floor, M_PI


def spectral_sum(double g11, double g12, double g22, double t,
                 xs, ys, double radius, double log_cut):
    cdef const double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef const double[::1] y = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t npts = x.shape[0]
    out_arr = np.zeros(npts, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef long nmax = <long>floor(radius)
    cdef long k, l
    cdef Py_ssize_t p
    cdef double expo, w, fk, fl
    cdef double r2 = radius * radius
    cdef double two_pi = 2.0 * M_PI
    for k in range(0, nmax + 1):
        for l in range(-nmax, nmax + 1):
            if k == 0 and l <= 0:
                continue
            fk = <double>k
            fl = <double>l
            if fk * fk + fl * fl > r2:
                continue
            expo = M_PI * t * (g11 * fk * fk + 2.0 * g12 * fk * fl + g22 * fl * fl)
            if expo > log_cut:
                continue
            w = exp(-expo)
            for p in range(npts):
                out[p] += w * cos(two_pi * (fk * y[p] - fl * x[p]))
    for p in range(npts):
        out[p] = 1.0 + 2.0 * out[p]
    return out_arr


def periodized_sum(double g11, double g12, double g22, double t,
                   xs, ys, double radius, double log_cut):
    cdef const double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef const double[::1] y = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t npts = x.shape[0]
    out_arr = np.empty(npts, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t p
    cdef long k, l, k0, k1, l0, l1
    cdef double a, b, expo, acc
    cdef double c = M_PI / t
    cdef double r2 = radius * radius
    for p in range(npts):
        k0 = <long>floor(-x[p] - radius)
        k1 = <long>ceil(-x[p] + radius)
        l0 = <long>floor(-y[p] - radius)
        l1 = <long>ceil(-y[p] + radius)
        acc = 0.0
        for k in range(k0, k1 + 1):
            a = x[p] + k
            for l in range(l0, l1 + 1):
                b = y[p] + l
                if a * a + b * b > r2:
                    continue
                expo = c * (g11 * a * a + 2.0 * g12 * a * b + g22 * b * b)
                if expo > log_cut:
                    continue
                acc += exp(-expo)
        out[p] = acc / t
    return out_arr
