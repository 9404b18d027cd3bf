# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word kernels.

Semantics are pinned by the pure-Python twin ``_kernel_py``; the test
suite cross-checks the two backends letter for letter.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

cdef int MAX_GENERATORS = 64


cdef int _load_masks(object comm, unsigned long long* cm) except -1:
    cdef Py_ssize_t k, m
    m = len(comm)
    if m > MAX_GENERATORS:
        raise ValueError("at most 64 generators are supported")
    for k in range(m):
        cm[k] = comm[k]
    return 0


def is_reduced(word: bytes, comm):
    cdef Py_ssize_t n = len(word)
    if n < 2:
        return True
    cdef const unsigned char* w = word
    cdef unsigned long long cm[64]
    cdef Py_ssize_t i, j
    cdef unsigned char s, t
    _load_masks(comm, cm)
    for i in range(n - 1):
        s = w[i]
        for j in range(i + 1, n):
            t = w[j]
            if t == s:
                return False
            if not (cm[s] >> t) & 1ULL:
                break
    return True


def reduce_word(word: bytes, comm):
    cdef Py_ssize_t n = len(word)
    cdef unsigned long long cm[64]
    _load_masks(comm, cm)
    if n < 2:
        return word
    cdef unsigned char* buf = <unsigned char*> malloc(n)
    if buf == NULL:
        raise MemoryError()
    memcpy(buf, <const unsigned char*> word, n)
    cdef Py_ssize_t i, j, k
    cdef unsigned char s, t
    cdef bint hit = True
    try:
        while hit:
            hit = False
            i = 0
            while i + 1 < n:
                s = buf[i]
                j = i + 1
                while j < n:
                    t = buf[j]
                    if t == s:
                        # drop positions i and j in one left shift
                        for k in range(i, j - 1):
                            buf[k] = buf[k + 1]
                        for k in range(j - 1, n - 2):
                            buf[k] = buf[k + 2]
                        n -= 2
                        hit = True
                        break
                    if not (cm[s] >> t) & 1ULL:
                        break
                    j += 1
                if hit:
                    break
                i += 1
        return PyBytes_FromStringAndSize(<char*> buf, n)
    finally:
        free(buf)


def normal_form(word: bytes, comm):
    cdef bytes reduced = reduce_word(word, comm)
    cdef Py_ssize_t n = len(reduced)
    if n < 2:
        return reduced
    cdef unsigned long long cm[64]
    _load_masks(comm, cm)
    cdef unsigned char* buf = <unsigned char*> malloc(2 * n)
    if buf == NULL:
        raise MemoryError()
    cdef unsigned char* out = buf + n
    memcpy(buf, <const unsigned char*> reduced, n)
    cdef Py_ssize_t p, q, pos, filled = 0
    cdef unsigned char s, t
    cdef int best
    cdef bint ok
    try:
        while n > 0:
            best = -1
            pos = -1
            for p in range(n):
                s = buf[p]
                if best >= 0 and s >= best:
                    continue
                ok = True
                for q in range(p):
                    t = buf[q]
                    if t == s or not (cm[s] >> t) & 1ULL:
                        ok = False
                        break
                if ok:
                    best = s
                    pos = p
            out[filled] = <unsigned char> best
            filled += 1
            for q in range(pos, n - 1):
                buf[q] = buf[q + 1]
            n -= 1
        return PyBytes_FromStringAndSize(<char*> out, filled)
    finally:
        free(buf)
