# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the set kernels in _kernels_py.

Same contracts: tables are int32 (n, n) index tables, membership sets are
uint8 arrays.  Worklist loops instead of vectorized sweeps.
"""

import numpy as np

cimport cython
from libc.stdlib cimport free, malloc

BACKEND = "cython"


def ideal_closure(object add, object mul, object seed):
    cdef const int[:, :] a = np.ascontiguousarray(add, dtype=np.int32)
    cdef const int[:, :] m = np.ascontiguousarray(mul, dtype=np.int32)
    cdef int n = a.shape[0]
    out = np.array(seed, dtype=np.uint8).copy()
    cdef unsigned char[:] mem = out
    cdef int* stack = <int*> malloc(n * sizeof(int))
    cdef int top = 0, i, x, y, v
    if stack == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            if mem[i]:
                stack[top] = i
                top += 1
        while top > 0:
            top -= 1
            x = stack[top]
            for y in range(n):
                if mem[y]:
                    v = a[x, y]
                    if not mem[v]:
                        mem[v] = 1
                        stack[top] = v
                        top += 1
                    v = a[y, x]
                    if not mem[v]:
                        mem[v] = 1
                        stack[top] = v
                        top += 1
                v = m[x, y]
                if not mem[v]:
                    mem[v] = 1
                    stack[top] = v
                    top += 1
                v = m[y, x]
                if not mem[v]:
                    mem[v] = 1
                    stack[top] = v
                    top += 1
    finally:
        free(stack)
    return out.astype(bool)


def additive_closure(object add, object seed):
    cdef const int[:, :] a = np.ascontiguousarray(add, dtype=np.int32)
    cdef int n = a.shape[0]
    out = np.array(seed, dtype=np.uint8).copy()
    cdef unsigned char[:] mem = out
    cdef int* stack = <int*> malloc(n * sizeof(int))
    cdef int top = 0, i, x, y, v
    if stack == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            if mem[i]:
                stack[top] = i
                top += 1
        while top > 0:
            top -= 1
            x = stack[top]
            for y in range(n):
                if mem[y]:
                    v = a[x, y]
                    if not mem[v]:
                        mem[v] = 1
                        stack[top] = v
                        top += 1
    finally:
        free(stack)
    return out.astype(bool)


def residual_right(object mul, object i_elems, object j_members):
    cdef const int[:, :] m = np.ascontiguousarray(mul, dtype=np.int32)
    cdef const long[:] elems = np.ascontiguousarray(i_elems, dtype=np.int64)
    jm = np.array(j_members, dtype=np.uint8)
    cdef const unsigned char[:] j = jm
    cdef int n = m.shape[0]
    out = np.ones(n, dtype=np.uint8)
    cdef unsigned char[:] o = out
    cdef int x
    cdef Py_ssize_t k
    for x in range(n):
        for k in range(elems.shape[0]):
            if not j[m[x, elems[k]]]:
                o[x] = 0
                break
    return out.astype(bool)


def residual_left(object mul, object i_elems, object j_members):
    cdef const int[:, :] m = np.ascontiguousarray(mul, dtype=np.int32)
    cdef const long[:] elems = np.ascontiguousarray(i_elems, dtype=np.int64)
    jm = np.array(j_members, dtype=np.uint8)
    cdef const unsigned char[:] j = jm
    cdef int n = m.shape[0]
    out = np.ones(n, dtype=np.uint8)
    cdef unsigned char[:] o = out
    cdef int x
    cdef Py_ssize_t k
    for x in range(n):
        for k in range(elems.shape[0]):
            if not j[m[elems[k], x]]:
                o[x] = 0
                break
    return out.astype(bool)


def is_ideal(object add, object mul, object members, int zero):
    cdef const int[:, :] a = np.ascontiguousarray(add, dtype=np.int32)
    cdef const int[:, :] m = np.ascontiguousarray(mul, dtype=np.int32)
    mm = np.array(members, dtype=np.uint8)
    cdef const unsigned char[:] s = mm
    cdef int n = a.shape[0]
    cdef int i, j
    if not s[zero]:
        return False
    for i in range(n):
        if not s[i]:
            continue
        for j in range(n):
            if s[j] and not s[a[i, j]]:
                return False
            if not s[m[i, j]] or not s[m[j, i]]:
                return False
    return True


def enumerate_ideals_exhaustive(object add, object mul, int zero):
    cdef const int[:, :] a = np.ascontiguousarray(add, dtype=np.int32)
    cdef const int[:, :] m = np.ascontiguousarray(mul, dtype=np.int32)
    cdef int n = a.shape[0]
    if n > 20:
        raise ValueError(f"exhaustive subset sweep capped at order 20, got {n}")
    cdef unsigned long total = 1UL << n
    cdef unsigned long mask
    cdef int i, j
    cdef bint ok
    result = []
    for mask in range(total):
        if not (mask >> zero) & 1:
            continue
        ok = True
        for i in range(n):
            if not (mask >> i) & 1:
                continue
            for j in range(n):
                if ((mask >> j) & 1) and not (mask >> a[i, j]) & 1:
                    ok = False
                    break
                if not (mask >> m[i, j]) & 1 or not (mask >> m[j, i]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            result.append(int(mask))
    return result
