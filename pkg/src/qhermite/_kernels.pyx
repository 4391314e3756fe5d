# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels (same contract as ``_kernels_py``).

``mul`` runs in int64 when a coefficient bound proves the products cannot
overflow, and falls back to Python-object arithmetic otherwise.
"""

from libc.stdlib cimport malloc, free

NAME = "cython"

# 2**62, leaves headroom for the accumulation bound below
cdef double _LIMIT = 4.611686018427388e18


cdef list _mul_object(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef list out = [0] * (na + nb - 1)
    cdef object ai, bj
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


cdef bint _load(list src, long long *dst, double *maxabs):
    cdef Py_ssize_t i, n = len(src)
    cdef long long v
    cdef double m = 0.0, av
    for i in range(n):
        obj = src[i]
        if obj > 2147483647 or obj < -2147483647:
            return False
        v = obj
        dst[i] = v
        av = <double>(v if v >= 0 else -v)
        if av > m:
            m = av
    maxabs[0] = m
    return True


def mul(a, b):
    """Product of two integer polynomials given as coefficient lists."""
    cdef list la = list(a), lb = list(b)
    cdef Py_ssize_t na = len(la), nb = len(lb), i, j, nc
    if na == 0 or nb == 0:
        return []
    cdef long long *pa = <long long *> malloc(na * sizeof(long long))
    cdef long long *pb = <long long *> malloc(nb * sizeof(long long))
    cdef long long *pc = NULL
    cdef double ma = 0.0, mb = 0.0
    cdef long long ai
    cdef list out
    try:
        if not (_load(la, pa, &ma) and _load(lb, pb, &mb)):
            return _mul_object(la, lb)
        if ma * mb * <double>(na if na < nb else nb) >= _LIMIT:
            return _mul_object(la, lb)
        nc = na + nb - 1
        pc = <long long *> malloc(nc * sizeof(long long))
        for i in range(nc):
            pc[i] = 0
        for i in range(na):
            ai = pa[i]
            if ai != 0:
                for j in range(nb):
                    pc[i + j] += ai * pb[j]
        out = [pc[i] for i in range(nc)]
        return out
    finally:
        free(pa)
        free(pb)
        if pc != NULL:
            free(pc)


def divexact(a, b):
    """Quotient a / b over the integers, or None if it is not exact there."""
    cdef list r = list(a), lb = list(b)
    cdef Py_ssize_t na = len(r), nb = len(lb), i, j
    if na == 0:
        return []
    if na < nb:
        return None
    cdef object lead = lb[nb - 1], t, c, rem, bj
    cdef list q = [0] * (na - nb + 1)
    for i in range(na - nb, -1, -1):
        t = r[i + nb - 1]
        if t:
            c, rem = divmod(t, lead)
            if rem:
                return None
            q[i] = c
            for j in range(nb):
                bj = lb[j]
                if bj:
                    r[i + j] = r[i + j] - c * bj
    for i in range(na):
        if r[i]:
            return None
    return q
