# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loop: exhaustive periodic pair correlations by direct summation."""

from cython.parallel cimport prange
from libc.math cimport sqrt


def pair_abs_correlations(const int[:, ::1] symbols,
                          const long long[::1] left,
                          const long long[::1] right,
                          const double[::1] cos_tab,
                          const double[::1] sin_tab,
                          int m_alphabet,
                          double[:, ::1] out,
                          int threads):
    """Fill out[b, tau] with |sum_t w**(u_i(t) - u_j(t+tau))| for each pair.

    cos_tab/sin_tab hold the real/imaginary parts of the M-th roots of
    unity over a doubled index range so that the symbol difference plus M
    indexes them directly.
    """
    cdef Py_ssize_t npairs = left.shape[0]
    cdef Py_ssize_t period = symbols.shape[1]
    cdef Py_ssize_t b, t, tau, i, j
    cdef int diff
    cdef double re, im

    for b in prange(npairs, nogil=True, num_threads=threads, schedule='dynamic', chunksize=32):
        i = left[b]
        j = right[b]
        for tau in range(period):
            re = 0.0
            im = 0.0
            for t in range(period - tau):
                diff = symbols[i, t] - symbols[j, t + tau] + m_alphabet
                re = re + cos_tab[diff]
                im = im + sin_tab[diff]
            for t in range(period - tau, period):
                diff = symbols[i, t] - symbols[j, t + tau - period] + m_alphabet
                re = re + cos_tab[diff]
                im = im + sin_tab[diff]
            out[b, tau] = sqrt(re * re + im * im)
    return 0
