from fractions import Fraction

from hypothesis import strategies as st

from stringy.qalg import FracPoly, RationalExpr

EXPONENT_DENOMS = [1, 2, 3, 6]
FACTOR_CHOICES = [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2), Fraction(2)]


@st.composite
def monomials(draw):
    d = draw(st.sampled_from(EXPONENT_DENOMS))
    q = Fraction(draw(st.integers(0, 3 * d)), d)
    k = draw(st.integers(-1, 1))
    if q + k < 0:
        k = 0
    return (q + k, q)


@st.composite
def fracpolys(draw, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        m = draw(monomials())
        terms[m] = terms.get(m, 0) + draw(st.integers(-3, 3))
    return FracPoly(terms)


@st.composite
def diagonal_polys(draw, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        d = draw(st.sampled_from(EXPONENT_DENOMS))
        q = Fraction(draw(st.integers(0, 3 * d)), d)
        terms[(q, q)] = terms.get((q, q), 0) + draw(st.integers(-3, 3))
    return FracPoly(terms)


@st.composite
def exprs(draw):
    num = draw(fracpolys())
    factors = draw(st.lists(st.sampled_from(FACTOR_CHOICES), max_size=2))
    return RationalExpr(num, factors)


@st.composite
def finite_limit_exprs(draw):
    """``poly * prod (uv-1)/((uv)^a - 1)``: always has a finite limit."""
    x = RationalExpr(draw(fracpolys()))
    for a in draw(st.lists(st.sampled_from(FACTOR_CHOICES), max_size=2)):
        x = x * RationalExpr.geometric(a)
    return x
