# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled diagram kernels.  Same contract as ``_pykernels``."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


def compose_matchings(fp, Py_ssize_t s, Py_ssize_t t, gp, Py_ssize_t u):
    cdef Py_ssize_t n = s + u
    cdef Py_ssize_t nf = s + t, ng = t + u
    cdef Py_ssize_t i, start, q, end, mid, j, k, loops = 0
    cdef bint in_f
    cdef long *f = <long *> PyMem_Malloc((nf + 1) * sizeof(long))
    cdef long *g = <long *> PyMem_Malloc((ng + 1) * sizeof(long))
    cdef long *out = <long *> PyMem_Malloc((n + 1) * sizeof(long))
    cdef char *seen = <char *> PyMem_Malloc(t + 1)
    if not f or not g or not out or not seen:
        PyMem_Free(f); PyMem_Free(g); PyMem_Free(out); PyMem_Free(seen)
        raise MemoryError()
    try:
        for i in range(nf):
            f[i] = fp[i]
        for i in range(ng):
            g[i] = gp[i]
        for i in range(n):
            out[i] = -1
        for i in range(t):
            seen[i] = 0
        for start in range(n):
            if out[start] >= 0:
                continue
            if start < s:
                q = f[start]
                in_f = True
            else:
                q = g[t + start - s]
                in_f = False
            while True:
                if in_f:
                    if q < s:
                        end = q
                        break
                    mid = q - s
                    seen[mid] = 1
                    q = g[mid]
                    in_f = False
                else:
                    if q >= t:
                        end = s + q - t
                        break
                    seen[q] = 1
                    q = f[s + q]
                    in_f = True
            out[start] = end
            out[end] = start
        for k in range(t):
            if seen[k]:
                continue
            loops += 1
            j = k
            while True:
                seen[j] = 1
                j = g[j]
                seen[j] = 1
                j = f[s + j] - s
                if j == k:
                    break
        return tuple([out[i] for i in range(n)]), loops
    finally:
        PyMem_Free(f)
        PyMem_Free(g)
        PyMem_Free(out)
        PyMem_Free(seen)


def permutation_sign(perm):
    cdef list p = list(perm)
    cdef Py_ssize_t n = len(p), i, j, length
    cdef int sign = 1
    order = sorted(range(n), key=p.__getitem__)
    cdef list seen = [False] * n
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
