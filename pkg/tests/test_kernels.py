from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from stringy import _kernels_py, kernels
from stringy.qalg import RationalExpr

coeffs = st.lists(st.integers(-20, 20), max_size=12)
compiled = pytest.mark.skipif("compiled" not in kernels.BACKENDS, reason="extension not built")


def test_backend_selection():
    assert kernels.BACKEND in kernels.BACKENDS
    assert "python" in kernels.BACKENDS


def test_python_kernels_examples():
    assert _kernels_py.poly_mul([1, 1], [-1, 1]) == [-1, 0, 1]
    assert _kernels_py.divide_binomial([-1, 0, 1], 1) == [1, 1]
    assert _kernels_py.divide_binomial([-1, 0, 2], 1) is None
    assert _kernels_py.divide_binomial([0, 0], 3) == []
    # x^2 mod x^2 + x + 1 = -x - 1
    assert _kernels_py.mulmod([0, 1], [0, 1], [1, 1, 1]) == [-1, -1]


@given(coeffs, coeffs)
def test_divide_binomial_inverts_multiplication(a, m_seed):
    m = len(m_seed) + 1
    binom = [-1] + [0] * (m - 1) + [1]
    p = _kernels_py.poly_mul(a, binom) if a else []
    q = _kernels_py.divide_binomial(p, m)
    assert q is not None
    assert _kernels_py.poly_mul(q, binom) == p or (not any(p) and not any(q))


@compiled
@given(coeffs, coeffs, st.integers(1, 6))
def test_backends_agree(a, b, m):
    c = kernels.BACKENDS["compiled"]
    assert c.poly_mul(a, b) == _kernels_py.poly_mul(a, b)
    assert c.divide_binomial(a, m) == _kernels_py.divide_binomial(a, m)
    mod = [1] + b[:3] + [1]
    assert c.mulmod(a, b, mod) == _kernels_py.mulmod(a, b, mod)


@compiled
def test_backends_agree_on_fractions():
    c = kernels.BACKENDS["compiled"]
    a = [Fraction(1, 2), Fraction(-3, 4), 2]
    assert c.poly_mul(a, a) == _kernels_py.poly_mul(a, a)


@compiled
def test_switching_backend_changes_nothing_observable():
    x = RationalExpr.parse("(uv - 1)^3 / (((uv)^(1/2) - 1)*((uv)^(1/3) - 1))")
    try:
        kernels.set_backend("python")
        slow = x * x + x
    finally:
        kernels.set_backend("compiled")
    assert slow == x * x + x
