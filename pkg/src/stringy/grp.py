"""Finite matrix groups over cyclotomic fields and their orbifold invariants."""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from math import lcm

from . import linalg
from .cyclotomic import CycNum, zeta
from .errors import BoundExceeded, NonIntegralWeight, NotAbelian, NotDiagonal, NotSL
from .qalg import FracPoly, RationalExpr, e_projective
from .toric import Lattice, PLFunction, SimplicialFan

__all__ = [
    "GroupElement", "MatrixGroup", "WeightProfile", "ConjugacyClass",
    "group_closure", "conjugacy_classes", "eigen_alphas", "physicists_euler",
    "commuting_pairs", "orbifold_E", "mckay_table", "abelian_to_toric",
    "ramification_pair", "blowup_identity_check", "fixed_subspace",
    "diagonal_element", "cyclic_group", "binary_dihedral",
]

DEFAULT_BOUND = 10 ** 5


class GroupElement:
    """An invertible ``n x n`` matrix with entries in ``Q(zeta_m)``."""

    __slots__ = ("m", "rows", "_hash")

    def __init__(self, rows, m=None):
        entries = [x for r in rows for x in r]
        if m is None:
            m = lcm(1, *(x.m for x in entries if isinstance(x, CycNum)))
        self.m = m
        self.rows = tuple(tuple(_to_cyc(x, m) for x in r) for r in rows)
        if any(len(r) != len(self.rows) for r in self.rows):
            raise ValueError("matrix must be square")
        self._hash = None

    @property
    def n(self):
        return len(self.rows)

    @classmethod
    def identity(cls, n, m=1):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], m)

    def lift(self, m2):
        if m2 == self.m:
            return self
        return GroupElement([[x.lift(m2) for x in r] for r in self.rows], m2)

    def __mul__(self, other):
        if other.m != self.m:
            L = lcm(self.m, other.m)
            return self.lift(L) * other.lift(L)
        n = self.n
        cols = list(zip(*other.rows))
        zero = CycNum(self.m)
        out = []
        for r in self.rows:
            row = []
            nz = [(k, x) for k, x in enumerate(r) if x]
            for c in cols:
                acc = zero
                for k, x in nz:
                    y = c[k]
                    if y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        g = GroupElement.__new__(GroupElement)
        g.m, g.rows, g._hash = self.m, tuple(map(tuple, out)), None
        return g

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def is_identity(self):
        return all((x == 1) if i == j else not x
                   for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def is_diagonal(self):
        return all(not x for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def det(self):
        return linalg.det([list(r) for r in self.rows])

    def order(self, bound=10 ** 4):
        p, k = self, 1
        while not p.is_identity():
            p = p * self
            k += 1
            if k > bound:
                raise BoundExceeded(f"element order exceeds {bound}")
        return k

    def inverse(self):
        return self ** (self.order() - 1)

    def __pow__(self, k):
        out, base = GroupElement.identity(self.n, self.m), self
        if k < 0:
            return self.inverse() ** (-k)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"GroupElement(m={self.m}, rows={[list(r) for r in self.rows]})"


def _to_cyc(x, m):
    if isinstance(x, CycNum):
        return x.lift(m)
    return CycNum(m, [x])


def diagonal_element(order, exponents, m=None):
    """``diag(zeta_order^a_1, ..., zeta_order^a_n)``."""
    m = m or order
    n = len(exponents)
    return GroupElement([[zeta(order, a, m) if i == j else 0 for j in range(n)]
                         for i, a in enumerate(exponents)], m)


@dataclass
class MatrixGroup:
    elements: list
    generators: list
    n: int

    def __post_init__(self):
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._table = None

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def index(self, g):
        return self._index[g]

    def identity_index(self):
        return next(i for i, g in enumerate(self.elements) if g.is_identity())

    def table(self):
        """Multiplication table by element index."""
        if self._table is None:
            idx = self._index
            self._table = [[idx[a * b] for b in self.elements] for a in self.elements]
        return self._table

    def inverses(self):
        e = self.identity_index()
        return [row.index(e) for row in self.table()]

    def is_abelian(self):
        T = self.table()
        k = len(T)
        return all(T[i][j] == T[j][i] for i in range(k) for j in range(i + 1, k))


def group_closure(generators, bound=DEFAULT_BOUND):
    """Breadth-first closure of ``generators``; all entries are lifted to a
    common conductor first so that hashing is consistent."""
    if not generators:
        raise ValueError("need at least one generator")
    m = lcm(*(g.m for g in generators))
    gens = [g.lift(m) for g in generators]
    n = gens[0].n
    ident = GroupElement.identity(n, m)
    seen = {ident: None}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in seen:
                    seen[b] = None
                    order.append(b)
                    nxt.append(b)
                    if len(order) > bound:
                        raise BoundExceeded(f"group has more than {bound} elements")
        frontier = nxt
    return MatrixGroup(order, gens, n)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple
    centralizer_order: int

    def __len__(self):
        return len(self.members)


def conjugacy_classes(G):
    T = G.table()
    inv = G.inverses()
    k = G.order
    seen = [False] * k
    out = []
    for g in range(k):
        if seen[g]:
            continue
        cls = sorted({T[T[h][g]][inv[h]] for h in range(k)})
        for x in cls:
            seen[x] = True
        cent = sum(1 for h in range(k) if T[h][g] == T[g][h])
        if len(cls) * cent != k:
            raise AssertionError("orbit-stabilizer failed")
        out.append(ConjugacyClass(g, tuple(cls), cent))
    return out


def commuting_pairs(G):
    T = G.table()
    k = G.order
    return sum(1 for i in range(k) for j in range(k) if T[i][j] == T[j][i])


def physicists_euler(G):
    """``(1/|G|) * #{(g, h) : gh = hg}``, checked against the class count."""
    pairs = commuting_pairs(G)
    if pairs % G.order:
        raise AssertionError("commuting pairs not divisible by |G|")
    e = pairs // G.order
    if e != len(conjugacy_classes(G)):
        raise AssertionError("commuting-pair count disagrees with class count")
    return e


@dataclass(frozen=True)
class WeightProfile:
    alphas: tuple
    order: int

    @property
    def weight(self):
        return sum(self.alphas, Fraction(0))

    @property
    def fixed_dim(self):
        return sum(1 for a in self.alphas if a == 0)


def eigen_alphas(g):
    """Eigenvalue arguments ``alpha_i in [0, 1)``, sorted, with multiplicity."""
    d = g.order()
    L = lcm(g.m, d)
    n = g.n
    roots = {zeta(d, k, L): k for k in range(d)}
    if g.is_diagonal():
        out = []
        for i in range(n):
            k = roots.get(g.rows[i][i].lift(L))
            if k is None:
                raise AssertionError("diagonal entry is not a root of unity of the order")
            out.append(Fraction(k, d))
        return WeightProfile(tuple(sorted(out)), d)
    h = g.lift(L)
    out = []
    for z, k in roots.items():
        M = [[x - z if i == j else x for j, x in enumerate(r)] for i, r in enumerate(h.rows)]
        mult = n - linalg.rank(M)
        out += [Fraction(k, d)] * mult
    if len(out) != n:
        raise AssertionError("eigenvalue multiplicities do not sum to n")
    return WeightProfile(tuple(sorted(out)), d)


def fixed_subspace(H):
    """``(dim, basis)`` of ``{x : h x = x for all h in H}``."""
    H = list(H)
    n = H[0].n
    m = lcm(*(h.m for h in H))
    rows = []
    for h in H:
        h = h.lift(m)
        rows += [[x - 1 if i == j else x for j, x in enumerate(r)] for i, r in enumerate(h.rows)]
    basis = linalg.nullspace(rows)
    basis = [[x.to_rational() if isinstance(x, CycNum) and x.is_rational() else x for x in v]
             for v in basis]
    return len(basis), basis


def orbifold_E(G):
    """``sum over classes of (uv)^(wt(g) + dim V^g)``."""
    terms = Counter()
    for cls in conjugacy_classes(G):
        w = eigen_alphas(G.elements[cls.representative])
        terms[w.weight + w.fixed_dim] += 1
    return RationalExpr(FracPoly({(e, e): c for e, c in terms.items()}))


def mckay_table(G):
    """``{i: number of classes of weight i}`` for ``G`` inside SL(n)."""
    for g in G.generators:
        if g.det() != 1:
            raise NotSL(f"generator has determinant {g.det()!r}")
    table = Counter()
    for cls in conjugacy_classes(G):
        w = eigen_alphas(G.elements[cls.representative]).weight
        if w.denominator != 1:
            raise NonIntegralWeight(f"class weight {w} is not an integer")
        table[int(w)] += 1
    return dict(sorted(table.items()))


def _require_diagonal(G):
    if not all(g.is_diagonal() for g in G.generators):
        raise NotDiagonal("group is not simultaneously diagonal")
    if not G.is_abelian():
        raise NotAbelian("group is not abelian")


def abelian_to_toric(G):
    """The toric pair of ``C^n / G``: ``N = Z^n + sum_g Z alpha(g)``, the
    positive orthant, and the PL function equal to 1 on each ``e_i``."""
    _require_diagonal(G)
    n = G.n
    alphas = [eigen_alphas_diagonal(g) for g in G.elements]
    D = lcm(1, *(a.denominator for v in alphas for a in v))
    rows = [[D * int(i == j) for j in range(n)] for i in range(n)]
    rows += [[int(a * D) for a in v] for v in alphas]
    basis = [[Fraction(x, D) for x in r] for r in linalg.hermite_rows(rows)]
    lattice = Lattice(basis)
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    fan = SimplicialFan(lattice, rays, [tuple(range(n))], check=False)
    return PLFunction.from_given(fan, [1] * n)


def eigen_alphas_diagonal(g):
    """Per-coordinate alphas of a diagonal element (unsorted)."""
    d = g.order()
    L = lcm(g.m, d)
    roots = {zeta(d, k, L): k for k in range(d)}
    return [Fraction(roots[g.rows[i][i].lift(L)], d) for i in range(g.n)]


def ramification_pair(G):
    """``[(i, nu_i, (nu_i - 1)/nu_i)]`` for the coordinate hyperplanes ``z_i = 0``."""
    _require_diagonal(G)
    alphas = [eigen_alphas_diagonal(g) for g in G.elements]
    out = []
    for i in range(G.n):
        nu = sum(1 for v in alphas if all(a == 0 for j, a in enumerate(v) if j != i))
        out.append((i, nu, Fraction(nu - 1, nu)))
    return out


def blowup_identity_check(g):
    """Both sides of the blow-up identity for ``g`` acting on ``C^r``.

    Eigenvalue blocks of sizes ``k_1, ..., k_s`` give the fixed components
    ``P^(k_j - 1)`` of the exceptional divisor. Returns
    ``(holds, lhs, rhs)``.
    """
    prof = eigen_alphas(g)
    r = g.n
    alphas = prof.alphas
    # (uv - 1) / ((uv)^r - 1), kept uncanonicalized so the sides stay independent
    frac = RationalExpr(FracPoly({(1, 1): 1, (0, 0): -1}), [r], canonical=False)
    lhs = RationalExpr(0)
    for a, grp in groupby(alphas):
        k = len(list(grp))
        lhs = lhs + RationalExpr(FracPoly.uv(_exceptional_weight(alphas, a))) * frac \
            * RationalExpr(e_projective(k - 1))
    rhs = RationalExpr(FracPoly.uv(prof.weight))
    return lhs == rhs, lhs, rhs


def _exceptional_weight(alphas, a):
    """D-weight at the fixed component of eigenvalue ``a`` on the exceptional divisor.

    In the chart ``y_1 = z_p``, ``y_i = z_i / z_p`` around the eigenline
    ``p`` the eigenvalues are ``a`` on ``y_1`` and ``a_i - a`` (mod 1)
    elsewhere; the exceptional divisor ``y_1 = 0`` has multiplicity
    ``r - 1``.
    """
    r = len(alphas)
    p = alphas.index(a)
    return r * a + sum(((b - a) % 1 for i, b in enumerate(alphas) if i != p), Fraction(0))


def cyclic_group(order, exponents, bound=DEFAULT_BOUND):
    return group_closure([diagonal_element(order, exponents)], bound)


def binary_dihedral(k, bound=DEFAULT_BOUND):
    """Binary dihedral group of order ``4k`` inside SL(2)."""
    m = lcm(2 * k, 4)
    a = diagonal_element(2 * k, [1, -1], m)
    b = GroupElement([[0, 1], [-1, 0]], m)
    return group_closure([a, b], bound)
