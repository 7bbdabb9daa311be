# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled group kernels; mirrors ``_kernels_py``."""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free
from libc.string cimport memset

BACKEND = "cython"


def prepare(table):
    return np.ascontiguousarray(table, dtype=np.int32)


def closure(const int[:, ::1] rows, gens):
    cdef Py_ssize_t n = rows.shape[0]
    cdef list glist = [g for g in gens if g != 0]
    cdef Py_ssize_t ng = len(glist)
    cdef int *garr = <int *> malloc((ng + 1) * sizeof(int))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    cdef unsigned char *seen = <unsigned char *> malloc(n)
    cdef Py_ssize_t i, head = 0, tail = 0
    cdef int x, y
    try:
        for i in range(ng):
            garr[i] = glist[i]
        memset(seen, 0, n)
        seen[0] = 1
        queue[tail] = 0
        tail += 1
        while head < tail:
            x = queue[head]
            head += 1
            for i in range(ng):
                y = rows[x, garr[i]]
                if not seen[y]:
                    seen[y] = 1
                    queue[tail] = y
                    tail += 1
        packed = np.packbits(np.frombuffer(seen[:n], dtype=np.uint8), bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")
    finally:
        free(garr)
        free(queue)
        free(seen)


def element_orders(const int[:, ::1] rows):
    cdef Py_ssize_t n = rows.shape[0]
    cdef Py_ssize_t x
    cdef int y, k
    out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] o = out
    for x in range(n):
        k = 1
        y = <int> x
        while y != 0:
            y = rows[x, y]
            k += 1
        o[x] = k
    return [int(v) for v in out]


def first_nonassociative(const int[:, ::1] rows):
    cdef Py_ssize_t n = rows.shape[0]
    cdef Py_ssize_t a, b, c
    cdef int ab
    for a in range(n):
        for b in range(n):
            ab = rows[a, b]
            for c in range(n):
                if rows[ab, c] != rows[a, rows[b, c]]:
                    return int(a), int(b), int(c)
    return None
