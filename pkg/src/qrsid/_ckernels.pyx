# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the integer series kernels in ``_pykernels``.

Coefficients are accumulated in int64 when a cheap a-priori bound shows the
result fits; otherwise the same loops run on Python ints.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

cdef object LIMIT = 1 << 62


cdef object _maxabs(list a, Py_ssize_t n):
    cdef Py_ssize_t i
    m = 0
    for i in range(n):
        v = a[i]
        if v < 0:
            v = -v
        if v > m:
            m = v
    return m


def mul_trunc(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n), lb = min(len(b), n)
    cdef Py_ssize_t i, j, top
    cdef int64_t *ca
    cdef int64_t *cb
    cdef int64_t *cc
    cdef int64_t ai
    if la == 0 or lb == 0:
        return [0] * n
    if la > lb:
        a, b = b, a
        la, lb = lb, la
    ma = _maxabs(a, la)
    mb = _maxabs(b, lb)
    if not ma or not mb:
        return [0] * n
    if ma * mb * la >= LIMIT:
        return _mul_obj(a, b, la, lb, n)
    ca = <int64_t *> malloc(la * sizeof(int64_t))
    cb = <int64_t *> malloc(lb * sizeof(int64_t))
    cc = <int64_t *> malloc(n * sizeof(int64_t))
    try:
        for i in range(la):
            ca[i] = a[i]
        for j in range(lb):
            cb[j] = b[j]
        for i in range(n):
            cc[i] = 0
        for i in range(la):
            ai = ca[i]
            if ai == 0:
                continue
            top = lb if lb < n - i else n - i
            for j in range(top):
                cc[i + j] += ai * cb[j]
        return [cc[i] for i in range(n)]
    finally:
        free(ca)
        free(cb)
        free(cc)


cdef list _mul_obj(list a, list b, Py_ssize_t la, Py_ssize_t lb, Py_ssize_t n):
    cdef Py_ssize_t i, j, top
    cdef list out = [0] * n
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        top = lb if lb < n - i else n - i
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def inv_unit(list a, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n)
    cdef Py_ssize_t k, t, m = 0
    cdef int64_t s, a0c
    cdef int64_t *idx
    cdef int64_t *val
    cdef int64_t *out
    a0 = a[0]
    if a0 != 1 and a0 != -1:
        raise ValueError("leading coefficient must be a unit")
    if n <= 0:
        return []
    nz = [(i, a[i]) for i in range(1, la) if a[i]]
    amax = max([abs(v) for _, v in nz], default=0)
    res = [0] * n
    res[0] = a0
    a0c = a0
    idx = <int64_t *> malloc((len(nz) + 1) * sizeof(int64_t))
    val = <int64_t *> malloc((len(nz) + 1) * sizeof(int64_t))
    out = <int64_t *> malloc(n * sizeof(int64_t))
    try:
        if amax >= LIMIT:
            k = 1
        else:
            for t in range(len(nz)):
                idx[t] = nz[t][0]
                val[t] = nz[t][1]
            m = len(nz)
            out[0] = a0c
            bmax = 1
            k = 1
            while k < n:
                if amax * bmax * (m + 1) >= LIMIT:
                    break
                s = 0
                for t in range(m):
                    if idx[t] > k:
                        break
                    s += val[t] * out[k - idx[t]]
                out[k] = -a0c * s
                if s < 0:
                    s = -s
                if s > bmax:
                    bmax = s
                k += 1
            for t in range(k):
                res[t] = out[t]
        while k < n:
            sv = 0
            for i, ai in nz:
                if i > k:
                    break
                sv += ai * res[k - i]
            res[k] = -a0 * sv
            k += 1
        return res
    finally:
        free(idx)
        free(val)
        free(out)


def div_binomial(list a, c, Py_ssize_t s, Py_ssize_t n):
    cdef Py_ssize_t k
    cdef list out = list(a[:n]) + [0] * (n - len(a))
    if c == 0:
        return out
    for k in range(s, n):
        prev = out[k - s]
        if prev:
            out[k] += c * prev
    return out


def mul_binomial(list a, c, Py_ssize_t s, Py_ssize_t n):
    cdef Py_ssize_t k
    cdef list out = list(a[:n]) + [0] * (n - len(a))
    if c == 0:
        return out
    for k in range(n - 1, s - 1, -1):
        prev = out[k - s]
        if prev:
            out[k] -= c * prev
    return out
