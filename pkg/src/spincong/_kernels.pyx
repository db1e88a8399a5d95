# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: machine-integer convolution and the enumeration oracles.

``mul_trunc_i64`` assumes the caller has bounded every output coefficient
below 2**62.  The two counting walks are the brute-force side of the
generating-function cross-checks.  The strict walk visits every partition
that can still grow and counts each run of final parts in one step.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t


def mul_trunc_i64(a, b, Py_ssize_t n_out):
    cdef Py_ssize_t la = min(len(a), n_out), lb = min(len(b), n_out)
    cdef Py_ssize_t i, j, hi
    cdef int64_t x
    cdef int64_t *ca = <int64_t *> malloc(max(la, 1) * sizeof(int64_t))
    cdef int64_t *cb = <int64_t *> malloc(max(lb, 1) * sizeof(int64_t))
    cdef int64_t *out = <int64_t *> calloc(max(n_out, 1), sizeof(int64_t))
    if ca == NULL or cb == NULL or out == NULL:
        free(ca); free(cb); free(out)
        raise MemoryError()
    try:
        for i in range(la):
            ca[i] = a[i]
        for j in range(lb):
            cb[j] = b[j]
        for i in range(la):
            x = ca[i]
            if x == 0:
                continue
            hi = lb if lb < n_out - i else n_out - i
            for j in range(hi):
                out[i + j] += x * cb[j]
        return [out[i] for i in range(n_out)]
    finally:
        free(ca); free(cb); free(out)


cdef void _walk_strict(int last, int total, int length, int n_max, int64_t *diff) noexcept nogil:
    # every child total + a (a > last) is a strict partition of length + 1;
    # count the whole run at once, then descend only where a grandchild fits
    cdef int a, lo = total + last + 1
    cdef int64_t *row = diff + ((length + 1) & 1) * (n_max + 2)
    if lo > n_max:
        return
    row[lo] += 1
    row[n_max + 1] -= 1
    for a in range(last + 1, (n_max - total - 1) // 2 + 1):
        _walk_strict(a, total + a, length + 1, n_max, diff)


def strict_sign_counts(int n_max):
    cdef Py_ssize_t width = n_max + 2
    cdef int64_t *diff = <int64_t *> calloc(2 * width, sizeof(int64_t))
    cdef int64_t run0 = 0, run1 = 0
    cdef Py_ssize_t s
    if diff == NULL:
        raise MemoryError()
    try:
        with nogil:
            _walk_strict(0, 0, 0, n_max, diff)
        plus = [0] * (n_max + 1)
        minus = [0] * (n_max + 1)
        plus[0] = 1  # the empty partition
        for s in range(1, n_max + 1):
            run0 += diff[s]
            run1 += diff[width + s]
            # run0 counts even lengths, run1 odd lengths
            if s & 1:
                plus[s] += run1
                minus[s] += run0
            else:
                plus[s] += run0
                minus[s] += run1
        return plus, minus
    finally:
        free(diff)


cdef void _walk_core(int last, int total, int length, int n_max, int p,
                     char *present, int64_t *plus, int64_t *minus) noexcept nogil:
    cdef int a
    if (total - length) & 1:
        minus[total] += 1
    else:
        plus[total] += 1
    for a in range(last + 1, n_max - total + 1):
        if a >= p:
            if not present[a - p]:
                continue
        elif present[p - a]:
            continue
        present[a] = 1
        _walk_core(a, total + a, length + 1, n_max, p, present, plus, minus)
        present[a] = 0


def core_sign_counts(int n_max, int p):
    cdef int64_t *plus = <int64_t *> calloc(n_max + 1, sizeof(int64_t))
    cdef int64_t *minus = <int64_t *> calloc(n_max + 1, sizeof(int64_t))
    cdef char *present = <char *> calloc(n_max + p + 1, sizeof(char))
    if plus == NULL or minus == NULL or present == NULL:
        free(plus); free(minus); free(present)
        raise MemoryError()
    try:
        with nogil:
            _walk_core(0, 0, 0, n_max, p, present, plus, minus)
        return [plus[i] for i in range(n_max + 1)], [minus[i] for i in range(n_max + 1)]
    finally:
        free(plus); free(minus); free(present)
