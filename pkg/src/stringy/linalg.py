"""Exact linear algebra over fields and over the integers.

Matrices are lists of rows. The field routines only need ``+ - *``,
division and truthiness of their entries, so they serve both Fractions
and cyclotomic numbers. The integer routines (Hermite and Smith normal
forms) work on Python ints.
"""
from fractions import Fraction
from math import lcm


def _field(x):
    return Fraction(x) if isinstance(x, int) else x


def _copy(rows):
    return [[_field(x) for x in r] for r in rows]


def row_reduce(rows):
    """Reduced row echelon form; returns ``(rref_rows, pivot_columns)``."""
    m = _copy(rows)
    pivots = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    return len(row_reduce(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of ``{x : rows . x = 0}`` (column vectors)."""
    if not rows:
        n = ncols or 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    n = len(rows[0])
    R, pivots = row_reduce(rows)
    free = [c for c in range(n) if c not in pivots]
    zero = R[0][0] * 0
    basis = []
    for f in free:
        x = [zero] * n
        x[f] = zero + 1
        for i, p in enumerate(pivots):
            x[p] = -R[i][f]
        basis.append(x)
    return basis


def det(rows):
    m = _copy(rows)
    n = len(m)
    out = m[0][0] * 0 + 1 if n else 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return out * 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        out = out * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def transpose(rows):
    return [list(c) for c in zip(*rows)]


def solve_left(A, b):
    """Coefficients ``x`` with ``sum(x[i] * A[i]) == b``, or None."""
    k = len(A)
    if k == 0:
        return [] if not any(b) else None
    # augmented system A^T x = b
    aug = [list(col) + [bi] for col, bi in zip(transpose(A), b)]
    R, pivots = row_reduce(aug)
    if k in pivots:
        return None
    zero = _field(b[0]) * 0 if b else Fraction(0)
    x = [zero] * k
    for i, p in enumerate(pivots):
        x[p] = R[i][k]
    # free variables are set to zero; fine for independent rows
    return x


def inverse(M):
    n = len(M)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(M)]
    R, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in R]


def matmul(A, B):
    Bt = transpose(B)
    return [[sum((x * y for x, y in zip(r, c)), start=r[0] * 0) for c in Bt] for r in A]


def vecmat(x, M):
    return [sum((xi * r[j] for xi, r in zip(x, M)), start=Fraction(0)) for j in range(len(M[0]))]


def common_denominator(rows):
    return lcm(1, *(Fraction(x).denominator for r in rows for x in r))


# -- integer normal forms ---------------------------------------------------

def hermite_rows(rows):
    """Row Hermite normal form of an integer matrix: its nonzero rows.

    The result is a basis of the row lattice, upper triangular with
    positive pivots and reduced entries above each pivot.
    """
    m = [list(map(int, r)) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        # Euclid down the column until one nonzero entry remains at row r
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[piv] = m[piv], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    if m[i][c]:
                        done = False
            if done:
                break
        if r < len(m) and m[r][c]:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
            r += 1
            if r == len(m):
                break
    return [row for row in m[:r]]


def smith_form(M):
    """Smith normal form ``(U, D, V)`` with ``U * M * V == D``.

    ``U`` and ``V`` are unimodular; ``D`` is diagonal with ``d_i | d_{i+1}``
    and nonnegative entries.
    """
    k, n = len(M), len(M[0])
    A = [list(map(int, r)) for r in M]
    U = [[int(i == j) for j in range(k)] for i in range(k)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        A[dst] = [x - q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(k, n)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, k) for j in range(t, n) if A[i][j]]
            if not nz:
                return U, A, V
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            clean = True
            for i in range(t + 1, k):
                q = A[i][t] // A[t][t]
                if q:
                    add_row(i, t, q)
                if A[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = A[t][j] // A[t][t]
                if q:
                    add_col(j, t, q)
                if A[t][j]:
                    clean = False
            if not clean:
                continue
            # divisibility: fold a non-multiple entry into row t and retry
            bad = next(((i, j) for i in range(t + 1, k) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V
