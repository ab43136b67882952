# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  Contracts mirror ``okplanar._fallback``."""

import numpy as np

from libc.stdlib cimport malloc, realloc, free, qsort

ctypedef long long i64


def crossing_csr(Py_ssize_t n, us, vs):
    cdef i64[::1] a = np.ascontiguousarray(us, dtype=np.int64)
    cdef i64[::1] b = np.ascontiguousarray(vs, dtype=np.int64)
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t e, f, p, r, t, node, lo, hi, nlo, nhi, mid, top
    cdef Py_ssize_t size = 1
    while size < max(n, 1):
        size *= 2

    left_ptr_np = np.zeros(n + 1, dtype=np.int64)
    right_ptr_np = np.zeros(n + 1, dtype=np.int64)
    left_idx_np = np.empty(m, dtype=np.int64)
    right_idx_np = np.empty(m, dtype=np.int64)
    fill_np = np.zeros(n + 1, dtype=np.int64)
    inserted_np = np.zeros(n, dtype=np.int64)
    tree_np = np.zeros(2 * size, dtype=np.int64)
    cdef i64[::1] left_ptr = left_ptr_np
    cdef i64[::1] right_ptr = right_ptr_np
    cdef i64[::1] left_idx = left_idx_np
    cdef i64[::1] right_idx = right_idx_np
    cdef i64[::1] fill = fill_np
    cdef i64[::1] inserted = inserted_np
    cdef i64[::1] tree = tree_np

    for e in range(m):
        left_ptr[a[e] + 1] += 1
        right_ptr[b[e] + 1] += 1
    for p in range(n):
        left_ptr[p + 1] += left_ptr[p]
        right_ptr[p + 1] += right_ptr[p]
    for p in range(n + 1):
        fill[p] = left_ptr[p]
    for e in range(m):
        left_idx[fill[a[e]]] = e
        fill[a[e]] += 1
    for p in range(n + 1):
        fill[p] = right_ptr[p]
    # stable by left endpoint inside each right bucket
    for t in range(m):
        e = left_idx[t]
        right_idx[fill[b[e]]] = e
        fill[b[e]] += 1

    cdef Py_ssize_t cap = 1024, count = 0
    cdef i64* buf = <i64*> malloc(2 * cap * sizeof(i64))
    cdef i64* grown
    cdef Py_ssize_t stack_cap = 3 * 64 * 2
    cdef i64* stack = <i64*> malloc(stack_cap * sizeof(i64))
    if buf == NULL or stack == NULL:
        free(buf)
        free(stack)
        raise MemoryError()

    try:
        for p in range(n):
            for t in range(left_ptr[p], left_ptr[p + 1]):
                e = left_idx[t]
                lo = p + 1
                hi = b[e] - 1
                if lo > hi or tree[1] == 0:
                    continue
                top = 0
                stack[0] = 1
                stack[1] = 0
                stack[2] = size - 1
                top = 3
                while top > 0:
                    top -= 3
                    node = stack[top]
                    nlo = stack[top + 1]
                    nhi = stack[top + 2]
                    if tree[node] == 0 or nhi < lo or nlo > hi:
                        continue
                    if nlo == nhi:
                        for r in range(right_ptr[nlo], right_ptr[nlo] + inserted[nlo]):
                            f = right_idx[r]
                            if count == cap:
                                cap *= 2
                                grown = <i64*> realloc(buf, 2 * cap * sizeof(i64))
                                if grown == NULL:
                                    raise MemoryError()
                                buf = grown
                            buf[2 * count] = e
                            buf[2 * count + 1] = f
                            count += 1
                        continue
                    mid = (nlo + nhi) // 2
                    stack[top] = 2 * node + 1
                    stack[top + 1] = mid + 1
                    stack[top + 2] = nhi
                    stack[top + 3] = 2 * node
                    stack[top + 4] = nlo
                    stack[top + 5] = mid
                    top += 6
            for t in range(left_ptr[p], left_ptr[p + 1]):
                e = left_idx[t]
                inserted[b[e]] += 1
                node = b[e] + size
                while node > 0:
                    tree[node] += 1
                    node //= 2

        ptr_np = np.zeros(m + 1, dtype=np.int64)
        idx_np = np.empty(2 * count, dtype=np.int64)
        cdef_ptr = ptr_np
        cdef_idx = idx_np
        _fill_csr(buf, count, m, cdef_ptr, cdef_idx)
    finally:
        free(buf)
        free(stack)
    return ptr_np, idx_np


cdef void _fill_csr(i64* buf, Py_ssize_t count, Py_ssize_t m,
                    i64[::1] ptr, i64[::1] idx) noexcept:
    cdef Py_ssize_t t, e, f, lo, hi
    for t in range(count):
        ptr[buf[2 * t] + 1] += 1
        ptr[buf[2 * t + 1] + 1] += 1
    for e in range(m):
        ptr[e + 1] += ptr[e]
    cdef i64* pos = <i64*> malloc((m + 1) * sizeof(i64))
    for e in range(m + 1):
        pos[e] = ptr[e]
    for t in range(count):
        e = buf[2 * t]
        f = buf[2 * t + 1]
        idx[pos[e]] = f
        pos[e] += 1
        idx[pos[f]] = e
        pos[f] += 1
    free(pos)
    for e in range(m):
        lo = ptr[e]
        hi = ptr[e + 1]
        if hi - lo > 1:
            qsort(&idx[lo], hi - lo, sizeof(i64), _cmp_i64)


cdef int _cmp_i64(const void* x, const void* y) noexcept nogil:
    cdef i64 u = (<const i64*> x)[0]
    cdef i64 v = (<const i64*> y)[0]
    return (u > v) - (u < v)


cdef struct KeyedEdge:
    i64 key
    i64 e


cdef int _cmp_keyed(const void* x, const void* y) noexcept nogil:
    cdef const KeyedEdge* s = <const KeyedEdge*> x
    cdef const KeyedEdge* t = <const KeyedEdge*> y
    if s.key != t.key:
        return (s.key > t.key) - (s.key < t.key)
    return (s.e > t.e) - (s.e < t.e)


cdef class PiercingFilter:
    cdef i64[::1] a
    cdef i64[::1] b
    cdef i64 n
    cdef KeyedEdge* buf
    cdef Py_ssize_t cap

    def __cinit__(self, Py_ssize_t n, us, vs):
        self.n = n
        self.a = np.ascontiguousarray(us, dtype=np.int64)
        self.b = np.ascontiguousarray(vs, dtype=np.int64)
        self.cap = 64
        self.buf = <KeyedEdge*> malloc(self.cap * sizeof(KeyedEdge))
        if self.buf == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.buf)

    def __call__(self, i64 x, i64 y, list cands):
        cdef Py_ssize_t c = len(cands)
        cdef Py_ssize_t cnt = 0, t
        cdef i64 e, p, q, right, left
        cdef bint p_in, q_in
        cdef KeyedEdge* grown
        if c > self.cap:
            grown = <KeyedEdge*> realloc(self.buf, c * sizeof(KeyedEdge))
            if grown == NULL:
                raise MemoryError()
            self.buf = grown
            self.cap = c
        for t in range(c):
            e = cands[t]
            p = self.a[e]
            q = self.b[e]
            p_in = x < p < y
            q_in = x < q < y
            if p_in == q_in:
                continue
            if p_in:
                right, left = p, q
            else:
                right, left = q, p
            if left == x or left == y:
                continue
            self.buf[cnt].key = right * self.n + (x - left + self.n) % self.n
            self.buf[cnt].e = e
            cnt += 1
        if cnt > 1:
            qsort(self.buf, cnt, sizeof(KeyedEdge), _cmp_keyed)
        out = []
        for t in range(cnt):
            if t and self.buf[t].e == self.buf[t - 1].e:
                continue
            out.append(self.buf[t].e)
        return out
