# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernel_py: cyclic convolution and cyclotomic
reduction on lists of Python ints.  Coefficients stay arbitrary
precision (object arithmetic); the win is loop and indexing overhead,
which dominates at the small orders (m <= 24) used here.
"""


def conv_mod(list a, list b, Py_ssize_t m):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    cdef list out = [0] * m
    cdef object ai, bj
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[(i + j) % m] = out[(i + j) % m] + ai * bj
    return out


def poly_reduce(list vec, Py_ssize_t m, tuple phi):
    cdef Py_ssize_t i, k, base, deg = len(phi) - 1
    cdef object c, pk
    for i in range(m - 1, deg - 1, -1):
        c = vec[i]
        if c:
            vec[i] = 0
            base = i - deg
            for k in range(deg):
                pk = phi[k]
                if pk:
                    vec[base + k] = vec[base + k] - c * pk
    return vec


def mul_reduce(list a, list b, Py_ssize_t m, tuple phi):
    return poly_reduce(conv_mod(a, b, m), m, phi)
