"""Exact algebra of E-polynomials and stringy rational expressions.

Two value types live here:

``FracPoly``
    finite integer combination of monomials ``u**p * v**q`` with rational
    exponents, subject to ``p - q`` being an integer. Such a term is
    ``u**k * (uv)**q`` with ``k = p - q``, so after fixing ``N`` (the lcm of
    all exponent denominators) a polynomial is a family of Laurent
    polynomials in ``t = (uv)**(1/N)`` indexed by ``k``.

``RationalExpr``
    a ``FracPoly`` numerator over a product of factors ``(uv)**a - 1`` with
    rational ``a > 0``.

Both are immutable. Heavy lifting (dense convolution, exact division by
``t**m - 1``) goes through :mod:`stringy.kernels`.
"""
from collections import Counter, defaultdict
from fractions import Fraction
from math import factorial, lcm

from . import kernels
from .errors import PoleAtOne

__all__ = [
    "rat", "FracPoly", "RationalExpr", "poly_add", "poly_mul", "expr_add",
    "expr_mul", "limit_at_one", "expand_series", "uv", "e_projective",
]

# below this many term pairs the sparse product is cheaper than densifying
_DENSE_MIN_PAIRS = 48
_DENSE_SLACK = 24


def rat(x):
    """Coerce ints, Fractions and strings like ``"3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(x)


def _as_int(c):
    if isinstance(c, int):
        return c
    c = Fraction(c)
    if c.denominator != 1:
        raise ValueError(f"coefficient {c} is not an integer")
    return c.numerator


class FracPoly:
    """Integer combination of ``u**p v**q`` with rational exponents."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = defaultdict(int)
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for (p, q), c in items:
                p, q = rat(p), rat(q)
                if (p - q).denominator != 1:
                    raise ValueError(f"u^{p} v^{q}: exponents must differ by an integer")
                acc[(p, q)] += _as_int(c)
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: keys already Fractions, no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls.monomial(0, 0)

    @classmethod
    def monomial(cls, p, q, c=1):
        return cls({(p, q): c})

    @classmethod
    def uv(cls, s, c=1):
        """``c * (uv)**s``."""
        return cls({(s, s): c})

    @classmethod
    def parse(cls, text):
        from .syntax import parse_poly

        return parse_poly(text)

    # -- inspection ---------------------------------------------------------

    def terms(self):
        """Sorted list of ``((p, q), coefficient)``, lowest level first."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def coefficient(self, p, q):
        return self._terms.get((rat(p), rat(q)), 0)

    def at_one(self):
        """Value at ``u = v = 1``."""
        return sum(self._terms.values())

    def exponent_lcm(self):
        return lcm(1, *(q.denominator for _, q in self._terms))

    def is_diagonal(self):
        """True if every term is a power of ``uv``."""
        return all(p == q for p, q in self._terms)

    def levels(self):
        """Iterate ``(level, coefficient)`` with level ``(p + q) / 2``."""
        for (p, q), c in self._terms.items():
            yield (p + q) / 2, c

    def min_level(self):
        return min((p + q) / 2 for p, q in self._terms)

    def invert(self):
        """Substitute ``u -> 1/u``, ``v -> 1/v``."""
        return FracPoly._raw({(-p, -q): c for (p, q), c in self._terms.items()})

    def truncate(self, max_level):
        """Drop terms whose level ``(p+q)/2`` exceeds ``max_level``."""
        max_level = rat(max_level)
        return FracPoly._raw({k: c for k, c in self._terms.items() if (k[0] + k[1]) / 2 <= max_level})

    # -- dense form in t = (uv)^(1/N) ---------------------------------------

    def to_dense(self, N):
        """Map ``k -> (offset, coeffs)`` with the ``u**k`` part equal to
        ``t**offset * sum(coeffs[i] t**i)``."""
        byk = defaultdict(dict)
        for (p, q), c in self._terms.items():
            e = q * N
            if e.denominator != 1:
                raise ValueError(f"exponent {q} not a multiple of 1/{N}")
            byk[int(p - q)][e.numerator] = c
        out = {}
        for k, exps in byk.items():
            lo = min(exps)
            coeffs = [0] * (max(exps) - lo + 1)
            for e, c in exps.items():
                coeffs[e - lo] = c
            out[k] = (lo, coeffs)
        return out

    @classmethod
    def from_dense(cls, N, groups):
        terms = {}
        for k, (lo, coeffs) in groups.items():
            for i, c in enumerate(coeffs):
                if c:
                    q = Fraction(lo + i, N)
                    terms[(q + k, q)] = c
        return cls._raw(terms)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, FracPoly):
            return other
        if isinstance(other, int):
            return FracPoly({(0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return FracPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return FracPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return FracPoly.zero()
        pairs = len(a) * len(b)
        if pairs >= _DENSE_MIN_PAIRS:
            out = self._dense_mul(other, pairs)
            if out is not None:
                return out
        acc = defaultdict(int)
        for (p1, q1), c1 in a.items():
            for (p2, q2), c2 in b.items():
                acc[(p1 + p2, q1 + q2)] += c1 * c2
        return FracPoly._raw({k: c for k, c in acc.items() if c})

    __rmul__ = __mul__

    def _dense_mul(self, other, pairs):
        N = lcm(self.exponent_lcm(), other.exponent_lcm())
        da, db = self.to_dense(N), other.to_dense(N)
        cost = sum(len(x[1]) for x in da.values()) * sum(len(y[1]) for y in db.values())
        if cost > _DENSE_SLACK * pairs:
            return None
        out = {}
        for ka, (la, ca) in da.items():
            for kb, (lb, cb) in db.items():
                prod = kernels.poly_mul(ca, cb)
                k, lo = ka + kb, la + lb
                if k in out:
                    lo0, acc = out[k]
                    shift = lo - lo0
                    if shift < 0:
                        acc = [0] * (-shift) + acc
                        lo0, shift = lo, 0
                    if len(acc) < shift + len(prod):
                        acc.extend([0] * (shift + len(prod) - len(acc)))
                    for i, c in enumerate(prod):
                        acc[shift + i] += c
                    out[k] = (lo0, acc)
                else:
                    out[k] = (lo, prod)
        return FracPoly.from_dense(N, out)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("FracPoly powers must be non-negative integers")
        result, base = FracPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RationalExpr):
            return other == self
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        from .syntax import render_poly

        return render_poly(self)

    def __repr__(self):
        return f"FracPoly({str(self)!r})"


def uv(s=1, c=1):
    """Shorthand for ``c * (uv)**s``."""
    return FracPoly.uv(rat(s), c)


def e_projective(m):
    """E-polynomial of projective m-space, ``1 + uv + ... + (uv)**m``."""
    return FracPoly({(i, i): 1 for i in range(m + 1)})


def _binomial_poly(a):
    """``(uv)**a - 1`` as a FracPoly."""
    return FracPoly({(a, a): 1, (0, 0): -1})


def _canonicalize(num, factors):
    if not num:
        return FracPoly.zero(), ()
    if not factors:
        return num, ()
    N = lcm(num.exponent_lcm(), *(a.denominator for a in factors))
    groups = num.to_dense(N)
    remaining = []
    # larger factors first: (t^m - 1) for big m absorbs the small ones it contains
    for a in sorted(factors, reverse=True):
        m = (a * N).numerator
        new = {}
        for k, (lo, coeffs) in groups.items():
            q = kernels.divide_binomial(coeffs, m)
            if q is None:
                break
            new[k] = (lo, q)
        else:
            groups = new
            continue
        remaining.append(a)
    return FracPoly.from_dense(N, groups), tuple(sorted(remaining))


class RationalExpr:
    """``numerator / prod((uv)**a - 1 for a in factors)``, kept canonical.

    Canonical means no factor ``(uv)**a - 1`` divides the numerator. The
    representation is not unique (``(t+1)/(t^2-1)`` and ``1/(t-1)`` are both
    canonical), so equality is decided by cross-multiplication.
    """

    __slots__ = ("numerator", "factors")

    def __init__(self, numerator=0, factors=(), canonical=True):
        if isinstance(numerator, int):
            numerator = FracPoly({(0, 0): numerator})
        elif isinstance(numerator, str):
            numerator = FracPoly.parse(numerator)
        factors = tuple(rat(a) for a in factors)
        for a in factors:
            if a <= 0:
                raise ValueError(f"denominator factor exponent {a} must be positive")
        if canonical:
            numerator, factors = _canonicalize(numerator, factors)
        else:
            factors = tuple(sorted(factors))
        self.numerator = numerator
        self.factors = factors

    @classmethod
    def parse(cls, text):
        from .syntax import parse_expr

        return parse_expr(text)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalExpr):
            return x
        if isinstance(x, (FracPoly, int)):
            return cls(x)
        return NotImplemented

    @classmethod
    def geometric(cls, a):
        """``(uv - 1) / ((uv)**a - 1)``, the per-divisor stringy factor."""
        return cls(_binomial_poly(Fraction(1)), (rat(a),))

    def is_polynomial(self):
        return not self.factors

    def to_poly(self):
        if self.factors:
            raise ValueError(f"{self} is not a polynomial")
        return self.numerator

    def denominator(self):
        d = FracPoly.one()
        for a in self.factors:
            d = d * _binomial_poly(a)
        return d

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.numerator:
            return self
        if not self.numerator:
            return other
        ca, cb = Counter(self.factors), Counter(other.factors)
        union = ca | cb
        na = self.numerator * _product(union - ca)
        nb = other.numerator * _product(union - cb)
        return RationalExpr(na + nb, tuple(union.elements()))

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.numerator, self.factors, canonical=False)

    def __sub__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalExpr(self.numerator * other.numerator, self.factors + other.factors)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("powers must be non-negative integers")
        return RationalExpr(self.numerator ** e, self.factors * e)

    def __eq__(self, other):
        other = self.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ca, cb = Counter(self.factors), Counter(other.factors)
        common = ca & cb
        lhs = self.numerator * _product(cb - common)
        rhs = other.numerator * _product(ca - common)
        return lhs == rhs

    def __hash__(self):
        # the truncated expansion is an invariant of the value
        if not self.numerator:
            return hash(FracPoly.zero())
        return hash(self.expand_series(self.numerator.min_level() + 1))

    # -- analysis -----------------------------------------------------------

    def limit_at_one(self):
        """Exact value of the limit ``u, v -> 1`` taken along ``u = v``.

        With ``s = uv`` the denominator is ``(s-1)**r`` times a unit worth
        ``prod(factors)`` at ``s = 1``, so the limit is the r-th Taylor
        coefficient of the numerator at 1 over that product.
        """
        r = len(self.factors)
        levels = list(self.numerator.levels())
        value = Fraction(0)
        for j in range(r + 1):
            value = sum((c * _falling(L, j) for L, c in levels), Fraction(0))
            if j < r and value != 0:
                raise PoleAtOne(f"{self} has a pole of order {r - j} at uv = 1")
        denom = Fraction(factorial(r))
        for a in self.factors:
            denom *= a
        return value / denom

    def expand_series(self, max_exponent):
        """Ascending expansion in powers of ``uv``, dropping levels above the cutoff.

        Each factor expands as ``1/((uv)**a - 1) = -sum_j (uv)**(a j)``.
        """
        cutoff = rat(max_exponent)
        result = self.numerator
        if not result:
            return result
        base = result.min_level()
        for a in self.factors:
            if base > cutoff:
                break
            jmax = int((cutoff - base) // a)
            series = FracPoly({(a * j, a * j): -1 for j in range(jmax + 1)})
            result = (result * series).truncate(cutoff)
        return result.truncate(cutoff)

    def __str__(self):
        from .syntax import render_expr

        return render_expr(self)

    def __repr__(self):
        return f"RationalExpr({str(self)!r})"


def _product(counter):
    out = FracPoly.one()
    for a in sorted(counter.elements()):
        out = out * _binomial_poly(a)
    return out


def _falling(x, j):
    out = Fraction(1)
    for i in range(j):
        out *= x - i
    return out


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def expr_add(a, b):
    return RationalExpr.coerce(a) + b


def expr_mul(a, b):
    return RationalExpr.coerce(a) * b


def limit_at_one(x):
    return RationalExpr.coerce(x).limit_at_one()


def expand_series(x, max_exponent):
    return RationalExpr.coerce(x).expand_series(max_exponent)
