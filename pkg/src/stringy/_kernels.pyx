# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled dense polynomial kernels; same contracts as ``_kernels_py``."""


def poly_mul(list a, list b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    cdef list out
    cdef object x, y
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if x:
            for j in range(lb):
                y = b[j]
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


def divide_binomial(list p, Py_ssize_t m):
    cdef Py_ssize_t n = len(p), qlen, j
    cdef list q
    cdef object prev
    if n <= m:
        for j in range(n):
            if p[j]:
                return None
        return []
    qlen = n - m
    q = [0] * qlen
    for j in range(qlen):
        prev = q[j - m] if j >= m else 0
        q[j] = prev - p[j]
    for j in range(qlen, n):
        prev = q[j - m] if j >= m else 0
        if p[j] != prev:
            return None
    return q


def mulmod(list a, list b, list modulus):
    cdef Py_ssize_t d = len(modulus) - 1, i, j, base
    cdef list r = poly_mul(a, b)
    cdef object c, mj
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            base = i - d
            for j in range(d):
                mj = modulus[j]
                if mj:
                    r[base + j] = r[base + j] - c * mj
            r[i] = 0
    r = r[:d]
    if len(r) < d:
        r.extend([0] * (d - len(r)))
    return r
