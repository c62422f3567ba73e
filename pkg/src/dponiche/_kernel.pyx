# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled relation kernel; semantics identical to dponiche._kernel_py.

Coordinates must fit in int64 (the selector falls back to the pure kernel
otherwise).  Bit-rows are built in fixed-width words and assembled into
Python ints at the end, so callers see the same bitmask interface as the
pure-Python twin.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free


def relation_rows(x1, x2):
    """Competition and common-enemy bit-rows; see dponiche._kernel_py."""
    cdef Py_ssize_t n = len(x1)
    cdef Py_ssize_t nw = (n + 63) >> 6
    cdef Py_ssize_t i, j, w
    cdef int64_t a, b
    cdef int64_t *cx1
    cdef int64_t *cx2
    cdef uint64_t *prey
    cdef uint64_t *pred
    cdef uint64_t *comp
    cdef uint64_t *enemy

    if n == 0:
        return [], []

    cx1 = <int64_t *> calloc(n, sizeof(int64_t))
    cx2 = <int64_t *> calloc(n, sizeof(int64_t))
    prey = <uint64_t *> calloc(n * nw, sizeof(uint64_t))
    pred = <uint64_t *> calloc(n * nw, sizeof(uint64_t))
    comp = <uint64_t *> calloc(n * nw, sizeof(uint64_t))
    enemy = <uint64_t *> calloc(n * nw, sizeof(uint64_t))
    if not (cx1 and cx2 and prey and pred and comp and enemy):
        free(cx1); free(cx2); free(prey); free(pred); free(comp); free(enemy)
        raise MemoryError()

    try:
        for i in range(n):
            cx1[i] = x1[i]
            cx2[i] = x2[i]

        for i in range(n):
            a = cx1[i]
            b = cx2[i]
            for j in range(n):
                if cx1[j] < a and cx2[j] < b:
                    prey[i * nw + (j >> 6)] |= <uint64_t> 1 << (j & 63)
                elif a < cx1[j] and b < cx2[j]:
                    pred[i * nw + (j >> 6)] |= <uint64_t> 1 << (j & 63)

        for i in range(n):
            for j in range(i + 1, n):
                for w in range(nw):
                    if prey[i * nw + w] & prey[j * nw + w]:
                        comp[i * nw + (j >> 6)] |= <uint64_t> 1 << (j & 63)
                        comp[j * nw + (i >> 6)] |= <uint64_t> 1 << (i & 63)
                        break
                for w in range(nw):
                    if pred[i * nw + w] & pred[j * nw + w]:
                        enemy[i * nw + (j >> 6)] |= <uint64_t> 1 << (j & 63)
                        enemy[j * nw + (i >> 6)] |= <uint64_t> 1 << (i & 63)
                        break

        comp_rows = [_row_to_int(comp, i, nw) for i in range(n)]
        enemy_rows = [_row_to_int(enemy, i, nw) for i in range(n)]
        return comp_rows, enemy_rows
    finally:
        free(cx1); free(cx2); free(prey); free(pred); free(comp); free(enemy)


cdef object _row_to_int(uint64_t *rows, Py_ssize_t i, Py_ssize_t nw):
    cdef Py_ssize_t w
    value = 0
    for w in range(nw - 1, -1, -1):
        value = (value << 64) | rows[i * nw + w]
    return value
