# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: SplitMix64 uniform blocks and population construction.

Must stay bit-compatible with pssopt._kernels; the arithmetic below mirrors
the NumPy expressions operation for operation (no fused multiply-adds, and
rint() matches np.rint under the default round-to-nearest-even mode).
"""

from libc.math cimport rint
from libc.stdint cimport uint64_t

import numpy as np

DEF INV_2_53 = 1.0 / 9007199254740992.0


cdef inline uint64_t _mix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


def uniform_block(seed, position, count):
    """Doubles in [0, 1) for stream positions position..position+count-1."""
    out = np.empty(int(count), dtype=np.float64)
    cdef double[::1] o = out
    cdef uint64_t s = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t p = <uint64_t>(int(position) & 0xFFFFFFFFFFFFFFFF)
    cdef Py_ssize_t i, n = o.shape[0]
    cdef uint64_t z
    with nogil:
        for i in range(n):
            z = s + (p + 1 + <uint64_t>i) * <uint64_t>0x9E3779B97F4A7C15
            o[i] = <double>(_mix64(z) >> 11) * INV_2_53
    return out


def scale_population(const double[:, ::1] u,
                     const double[::1] lower, const double[::1] upper,
                     const unsigned char[::1] int_mask,
                     const double[::1] int_lower, const double[::1] int_upper):
    """Map a coefficient matrix onto the box [lower, upper] column-wise."""
    out = np.empty((u.shape[0], u.shape[1]), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t k, j
    cdef double v
    with nogil:
        for k in range(u.shape[0]):
            for j in range(u.shape[1]):
                v = lower[j] + u[k, j] * (upper[j] - lower[j])
                if int_mask[j]:
                    v = rint(v)
                    if v < int_lower[j]:
                        v = int_lower[j]
                    elif v > int_upper[j]:
                        v = int_upper[j]
                o[k, j] = v
    return out


def mix_population(const double[:, ::1] u, const double[:, ::1] r, double accept_prob,
                   const double[::1] lower, const double[::1] upper,
                   const double[::1] reg_lower, const double[::1] reg_upper,
                   const unsigned char[::1] int_mask,
                   const double[::1] int_lower, const double[::1] int_upper):
    """Build one generation from region/full-box draws selected by r."""
    out = np.empty((u.shape[0], u.shape[1]), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t k, j
    cdef double v
    with nogil:
        for k in range(u.shape[0]):
            for j in range(u.shape[1]):
                if r[k, j] <= accept_prob:
                    v = reg_lower[j] + u[k, j] * (reg_upper[j] - reg_lower[j])
                else:
                    v = lower[j] + u[k, j] * (upper[j] - lower[j])
                if int_mask[j]:
                    v = rint(v)
                    if v < int_lower[j]:
                        v = int_lower[j]
                    elif v > int_upper[j]:
                        v = int_upper[j]
                o[k, j] = v
    return out
