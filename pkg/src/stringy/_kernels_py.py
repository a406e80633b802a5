"""Pure-Python dense polynomial kernels.

Coefficient lists run from low to high degree. Entries may be any exact
Python numbers (int or Fraction). ``_kernels.pyx`` mirrors this module
line for line.
"""


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def divide_binomial(p, m):
    """Quotient of ``p`` by ``t**m - 1``, or ``None`` if it does not divide."""
    n = len(p)
    if n <= m:
        return [] if not any(p) else None
    qlen = n - m
    q = [0] * qlen
    for j in range(qlen):
        prev = q[j - m] if j >= m else 0
        q[j] = prev - p[j]
    for j in range(qlen, n):
        if p[j] != (q[j - m] if j >= m else 0):
            return None
    return q


def mulmod(a, b, modulus):
    """``a * b`` reduced modulo a monic ``modulus`` of degree ``len(modulus) - 1``."""
    d = len(modulus) - 1
    r = poly_mul(a, b)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            base = i - d
            for j in range(d):
                mj = modulus[j]
                if mj:
                    r[base + j] -= c * mj
            r[i] = 0
    r = r[:d]
    r.extend([0] * (d - len(r)))
    return r
