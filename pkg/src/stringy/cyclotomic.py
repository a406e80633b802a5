"""Exact arithmetic in cyclotomic fields ``Q(zeta_m) = Q[x] / Phi_m(x)``."""
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from . import kernels, linalg

__all__ = ["CycNum", "cyclotomic_poly", "zeta", "common_conductor"]


def _poly_divexact(a, b):
    """Exact quotient of integer polynomials (low to high), ``b`` monic."""
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + db]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Coefficients of ``Phi_m``, low to high."""
    p = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            p = _poly_divexact(p, cyclotomic_poly(d))
    return tuple(p)


def _reduce(coeffs, m):
    mod = cyclotomic_poly(m)
    d = len(mod) - 1
    r = list(coeffs)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            for j in range(d):
                if mod[j]:
                    r[i - d + j] -= c * mod[j]
    r = r[:d]
    r.extend([0] * (d - len(r)))
    return r


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class CycNum:
    """An element of ``Q(zeta_m)``, stored as its coefficients in the power
    basis ``1, x, ..., x^(phi(m)-1)``.

    Hashes agree for equal values of the same conductor, and for rational
    values of any conductor. Mix conductors through :meth:`lift`.
    """

    __slots__ = ("m", "c")

    def __init__(self, m, coeffs=()):
        self.m = int(m)
        if self.m < 1:
            raise ValueError("conductor must be positive")
        self.c = tuple(_norm(Fraction(x) if not isinstance(x, int) else x)
                       for x in _reduce(coeffs, self.m))

    @classmethod
    def _raw(cls, m, c):
        obj = object.__new__(cls)
        obj.m = m
        obj.c = tuple(_norm(x) for x in c)
        return obj

    @classmethod
    def rational(cls, m, x):
        return cls(m, [x])

    @property
    def degree(self):
        return len(self.c)

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.m == self.m:
                return self, other
            L = lcm(self.m, other.m)
            return self.lift(L), other.lift(L)
        if isinstance(other, (int, Fraction)):
            return self, CycNum(self.m, [other])
        return None

    def lift(self, m2):
        """Image under ``Q(zeta_m) -> Q(zeta_m2)``, ``x -> x^(m2/m)``."""
        if m2 == self.m:
            return self
        if m2 % self.m:
            raise ValueError(f"{self.m} does not divide {m2}")
        step = m2 // self.m
        out = [0] * ((len(self.c) - 1) * step + 1)
        for i, x in enumerate(self.c):
            out[i * step] = x
        return CycNum(m2, out)

    def is_rational(self):
        return not any(self.c[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.c[0])

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0].c == pair[1].c

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash((self.m, self.c))

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNum._raw(a.m, [x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.m, [-x for x in self.c])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNum._raw(a.m, [x - y for x, y in zip(a.c, b.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum._raw(self.m, [x * other for x in self.c])
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.is_rational():
            return CycNum._raw(a.m, [a.c[0] * y for y in b.c])
        if b.is_rational():
            return CycNum._raw(a.m, [x * b.c[0] for x in a.c])
        return CycNum._raw(a.m, kernels.mulmod(list(a.c), list(b.c), list(cyclotomic_poly(a.m))))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycNum(self.m, [1 / Fraction(self.c[0])])
        d = self.degree
        # rows: self * x^i; find coefficients combining them into 1
        rows, cur = [], list(self.c)
        mod = list(cyclotomic_poly(self.m))
        x = [0, 1] + [0] * (d - 2) if d > 1 else [0]
        for _ in range(d):
            rows.append(cur)
            cur = kernels.mulmod(cur, x, mod)
        sol = linalg.solve_left(rows, [1] + [0] * (d - 1))
        return CycNum(self.m, sol)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum._raw(self.m, [Fraction(x) / other for x in self.c])
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0] * pair[1].inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = CycNum(self.m, [1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def to_complex(self):
        from cmath import exp, pi
        z = exp(2j * pi / self.m)
        return sum(float(x) * z ** i for i, x in enumerate(self.c))

    def __repr__(self):
        terms = [f"{x}*z^{i}" if i else str(x) for i, x in enumerate(self.c) if x]
        body = " + ".join(terms) if terms else "0"
        return f"CycNum[{self.m}]({body})"


def zeta(m, k=1, conductor=None):
    """``zeta_m ** k`` inside ``Q(zeta_conductor)`` (default ``m``)."""
    L = conductor or m
    if L % m:
        raise ValueError(f"{m} does not divide {L}")
    e = (k % m) * (L // m)
    out = [0] * (e + 1)
    out[e] = 1
    return CycNum(L, out)


def common_conductor(*ms):
    return lcm(1, *ms)


def reduced_root(m, k):
    """``(d, j)`` with ``zeta_m^k = zeta_d^j`` and ``gcd(j, d) = 1``."""
    k %= m
    g = gcd(k, m)
    return m // g, k // g
