"""Independent reference computations used to check the engines.

Each oracle takes a different route from the code under test: sympy for
rational functions and normal forms, closed cones with inclusion-exclusion
and brute-force boxes for toric sums, traces for eigenvalue counts.
"""
from fractions import Fraction
from itertools import combinations
from math import lcm

import sympy

from stringy.cyclotomic import CycNum, zeta
from stringy.qalg import FracPoly, RationalExpr
from stringy.toric import box_points_dense

t = sympy.Symbol("t", positive=True)
U = sympy.Symbol("U", positive=True)


def expr_to_sympy(x, N):
    """``x`` as a sympy function of ``t = (uv)^(1/N)`` (u-asymmetric parts
    carried by a symbol ``U`` standing for ``u/v``-type factors ``u^k``)."""
    x = RationalExpr.coerce(x)

    def poly(p):
        out = sympy.Integer(0)
        for (a, b), c in p.items():
            k = a - b
            e = b * N
            assert e.denominator == 1, "choose N as a multiple of all denominators"
            out += c * U ** int(k) * t ** int(e)
        return out

    den = sympy.Integer(1)
    for a in x.factors:
        e = a * N
        assert e.denominator == 1
        den *= t ** int(e) - 1
    return poly(x.numerator) / den


def common_N(*xs):
    dens = [1]
    for x in xs:
        x = RationalExpr.coerce(x)
        dens.append(x.numerator.exponent_lcm())
        dens += [a.denominator for a in x.factors]
    return lcm(*dens)


def sympy_equal(a, b):
    N = common_N(a, b)
    return sympy.cancel(expr_to_sympy(a, N) - expr_to_sympy(b, N)) == 0


def sympy_limit(x):
    """Limit at ``u = v = 1`` via sympy (``t -> 1`` with ``U = 1``)."""
    N = common_N(x)
    f = sympy.cancel(expr_to_sympy(x, N).subs(U, 1))
    val = sympy.limit(f, t, 1)
    return Fraction(int(sympy.numer(val)), int(sympy.denom(val)))


# -- toric -------------------------------------------------------------------

def closed_cone_sum(fan, phi_values, cone):
    """``sum_{p in closed cone ∩ N} (uv)^(-phi(p))`` from the half-open
    ``[0, 1)`` box, found by brute force."""
    vals = [phi_values[i] for i in cone]
    num = {}
    if cone:
        for lam in box_points_dense(fan, cone):
            lam = [x % 1 for x in lam]
            e = -sum((l * v for l, v in zip(lam, vals)), Fraction(0))
            num[(e, e)] = num.get((e, e), 0) + 1
    else:
        num[(Fraction(0), Fraction(0))] = 1
    shift = sum(vals, Fraction(0))
    # 1 / (1 - (uv)^-a) = (uv)^a / ((uv)^a - 1)
    return RationalExpr(FracPoly(num) * FracPoly.uv(shift), vals)


def toric_E_oracle(phi):
    """``(uv-1)^n * sum over the support`` by Moebius inversion over faces:
    ``sum_{sigma°} = sum_{tau <= sigma} (-1)^(dim sigma - dim tau) closed(tau)``."""
    fan = phi.fan
    total = RationalExpr(0)
    for sigma in fan.cones:
        for k in range(len(sigma) + 1):
            sign = -1 if (len(sigma) - k) % 2 else 1
            for tau in combinations(sigma, k):
                total = total + sign * closed_cone_sum(fan, phi.values, tau)
    return total * FracPoly({(1, 1): 1, (0, 0): -1}) ** fan.n


# -- groups ------------------------------------------------------------------

def trace(g):
    return sum((g.rows[i][i] for i in range(g.n)), CycNum(g.m))


def eigen_multiplicities_by_trace(g, d):
    """Multiplicity of ``zeta_d^k`` as ``(1/d) sum_j tr(g^j) zeta_d^(-jk)``."""
    L = lcm(g.m, d)
    h = g.lift(L)
    traces = []
    p = h ** 0
    for _ in range(d):
        traces.append(trace(p))
        p = p * h
    out = {}
    for k in range(d):
        s = CycNum(L)
        for j in range(d):
            s = s + traces[j] * zeta(d, -j * k, L)
        m = s / d
        assert m.is_rational()
        if m.to_rational():
            out[Fraction(k, d)] = int(m.to_rational())
    return out


def sympy_matrix(M):
    return sympy.Matrix([[int(x) for x in r] for r in M])


def brute_class_count(elements):
    """Class count by explicit conjugation over matrices (no index tables)."""
    inv = {}
    for g in elements:
        for h in elements:
            if (g * h).is_identity():
                inv[g] = h
                break
    seen = set()
    count = 0
    for g in elements:
        if g in seen:
            continue
        count += 1
        for h in elements:
            seen.add(h * g * inv[h])
    return count

