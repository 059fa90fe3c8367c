# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mirrors of logse.kernels.pure (single-pass loops, no temporaries).

Semantics must match the numpy versions exactly; the test suite checks
elementwise parity between the two backends.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, hypot, log, log1p, sqrt

cdef extern from "math.h" nogil:
    void sincos(double x, double *s, double *c)

cnp.import_array()

BACKEND = "compiled"

DEGENERATE_ETA = 1e-12


def log_phase_apply(u, double coeff, double eps):
    """Pointwise u_j * exp(i * coeff * ln(eps + |u_j|))."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] uu = \
        np.ascontiguousarray(u, dtype=np.complex128)
    cdef Py_ssize_t n = uu.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = \
        np.empty(n, dtype=np.complex128)
    cdef double re, im, ph, c, s
    cdef Py_ssize_t j
    for j in range(n):
        re = uu[j].real
        im = uu[j].imag
        ph = coeff * log(eps + hypot(re, im))
        sincos(ph, &s, &c)
        out[j].real = re * c - im * s
        out[j].imag = re * s + im * c
    return out


cdef inline double _f_eps(double rho, double lam, double eps) nogil:
    return 2.0 * lam * log(eps + sqrt(rho))


cdef inline double _F_eps(double rho, double lam, double eps) nogil:
    cdef double root = sqrt(rho)
    return 2.0 * lam * (rho - eps * eps) * log(eps + root) \
        - lam * rho + 2.0 * eps * lam * root


def f_eps_arr(rho, double lam, double eps):
    """2*lam*ln(eps + sqrt(rho)) elementwise."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rr = \
        np.ascontiguousarray(rho, dtype=np.float64)
    cdef Py_ssize_t n = rr.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t j
    for j in range(n):
        out[j] = _f_eps(rr[j], lam, eps)
    return out


def F_eps_arr(rho, double lam, double eps):
    """Closed-form antiderivative of f_eps, elementwise."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rr = \
        np.ascontiguousarray(rho, dtype=np.float64)
    cdef Py_ssize_t n = rr.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t j
    for j in range(n):
        out[j] = _F_eps(rr[j], lam, eps)
    return out


def g_eps_arr(z1, z2, double lam, double eps, double eta=DEGENERATE_ETA):
    """Divided-difference nonlinearity with the degenerate-band switch.

    The slope uses the cancellation-free rearrangement documented in
    logse.kernels.pure.g_eps_arr.
    """
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] a = \
        np.ascontiguousarray(z1, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] b = \
        np.ascontiguousarray(z2, dtype=np.complex128)
    cdef Py_ssize_t n = a.shape[0]
    if b.shape[0] != n:
        raise ValueError("z1 and z2 must have equal length")
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = \
        np.empty(n, dtype=np.complex128)
    cdef double m1, m2, r1, r2, rhi, rlo, shi, slo, d, slope, mre, mim
    cdef Py_ssize_t j
    for j in range(n):
        m1 = hypot(a[j].real, a[j].imag)
        m2 = hypot(b[j].real, b[j].imag)
        r1 = m1 * m1
        r2 = m2 * m2
        rhi = max(r1, r2)
        rlo = min(r1, r2)
        d = rhi - rlo
        if d <= eta * max(1.0, rhi):
            slope = _f_eps(0.5 * (r1 + r2), lam, eps)
        else:
            shi = sqrt(rhi)
            slo = sqrt(rlo)
            slope = 2.0 * lam * (
                (rhi - eps * eps) * log1p(d / ((shi + slo) * (eps + slo))) / d
                + log(eps + slo)) - lam + 2.0 * eps * lam / (shi + slo)
        mre = 0.5 * (a[j].real + b[j].real)
        mim = 0.5 * (a[j].imag + b[j].imag)
        out[j].real = slope * mre
        out[j].imag = slope * mim
    return out
