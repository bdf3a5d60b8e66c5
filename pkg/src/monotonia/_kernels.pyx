# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels for the per-cell reductions.

Single sequential pass per reduction, accumulating left to right in IEEE
doubles, so results match the pure-Python fallback and a direct Python loop
bit for bit (libm ``pow`` is the shared powered-transform primitive).
"""

from libc.math cimport fabs, pow

BACKEND_NAME = "compiled"

NEG = 0
POS = 1
ABS = 2
NEG_POW = 3
POS_POW = 4
ABS_POW = 5


def transform_reduce(const double[::1] lengths, const double[::1] values, int code, double p=1.0):
    """Sum of ``length * H(value)`` over cells, accumulated left to right."""
    cdef Py_ssize_t i, n = values.shape[0]
    cdef double acc = 0.0
    cdef double v
    if code == 0:
        for i in range(n):
            v = values[i]
            if v < 0.0:
                acc += lengths[i] * (-v)
    elif code == 1:
        for i in range(n):
            v = values[i]
            if v > 0.0:
                acc += lengths[i] * v
    elif code == 2:
        for i in range(n):
            acc += lengths[i] * fabs(values[i])
    elif code == 3:
        if p == 1.0:
            return transform_reduce(lengths, values, 0)
        for i in range(n):
            v = values[i]
            if v < 0.0:
                acc += lengths[i] * pow(-v, p)
    elif code == 4:
        if p == 1.0:
            return transform_reduce(lengths, values, 1)
        for i in range(n):
            v = values[i]
            if v > 0.0:
                acc += lengths[i] * pow(v, p)
    elif code == 5:
        if p == 1.0:
            return transform_reduce(lengths, values, 2)
        for i in range(n):
            v = values[i]
            if v != 0.0:
                acc += lengths[i] * pow(fabs(v), p)
    else:
        raise ValueError(f"unknown transform code {code}")
    return acc


def sign_split_sums(const double[::1] lengths, const double[::1] values):
    """Fused pass returning (negative mass, positive mass, total mass, signed total)."""
    cdef Py_ssize_t i, n = values.shape[0]
    cdef double neg = 0.0, pos = 0.0, tv = 0.0, signed_total = 0.0
    cdef double v, term
    for i in range(n):
        v = values[i]
        if v < 0.0:
            term = lengths[i] * (-v)
            neg += term
            tv += term
            signed_total -= term
        elif v > 0.0:
            term = lengths[i] * v
            pos += term
            tv += term
            signed_total += term
    return neg, pos, tv, signed_total
