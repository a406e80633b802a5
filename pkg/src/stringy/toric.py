"""Lattices, simplicial fans and piecewise linear functions.

Vectors are tuples of Fractions in the coordinates of a reference lattice
``Z^n``; the lattice ``N`` itself is given by a basis in those
coordinates. Rays of a fan are stored as primitive vectors of ``N``.

The main entry points compute the stringy E-function of a toric pair in
closed form (one geometric series per cone, summed over the cone's
half-open box), the normalized volume of the sub-level-1 shed, the
discrepancies and strata of a smooth subdivision, and the volume
comparison across a flip.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd, lcm, prod

from . import linalg
from .errors import (
    InvalidFan, NotASubdivision, NotInLattice, NotPositive, NotSmooth,
    OutsideSupport, RaysDiffer,
)
from .qalg import FracPoly, RationalExpr, rat
from .strata import StrataData, mask

__all__ = [
    "Lattice", "SimplicialFan", "PLFunction", "cone_mult", "box_points",
    "box_points_dense", "eval_pl",
    "divisor_from_pl", "subdivision_discrepancies", "stringy_E_toric",
    "shed_volume", "strata_from_subdivision", "flip_volume_compare",
    "check_subdivision", "pl_dominates", "find_flip_pairs", "FlipComparison",
]


def _vec(v):
    return tuple(rat(x) for x in v)


class Lattice:
    """A full-rank lattice ``N`` given by basis rows in reference coordinates."""

    def __init__(self, basis):
        self.basis = [list(_vec(r)) for r in basis]
        self.rank = len(self.basis)
        if any(len(r) != self.rank for r in self.basis):
            raise ValueError("lattice basis must be square")
        if linalg.det(self.basis) == 0:
            raise ValueError("lattice basis is singular")
        self._inv = linalg.inverse(self.basis)

    @classmethod
    def standard(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def coords(self, p):
        """Coordinates of ``p`` in the lattice basis (rational in general)."""
        return tuple(linalg.vecmat(list(_vec(p)), self._inv))

    def to_ref(self, c):
        return tuple(linalg.vecmat(list(c), self.basis))

    def contains(self, p):
        return all(x.denominator == 1 for x in self.coords(p))

    def int_coords(self, p):
        c = self.coords(p)
        if any(x.denominator != 1 for x in c):
            raise NotInLattice(f"{p} is not in the lattice")
        return [int(x) for x in c]

    def primitive(self, p):
        """``(prim, s)`` with ``p = s * prim`` and ``prim`` primitive in N."""
        c = self.coords(p)
        if not any(c):
            raise ValueError("zero vector has no primitive generator")
        den = lcm(*(x.denominator for x in c))
        ints = [int(x * den) for x in c]
        g = gcd(*ints)
        prim_c = [Fraction(x // g) for x in ints]
        return self.to_ref(prim_c), Fraction(g, den)

    def same_as(self, other):
        if self.rank != other.rank:
            return False
        T = linalg.matmul(self.basis, other._inv)
        return all(x.denominator == 1 for r in T for x in r) and abs(linalg.det(T)) == 1

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.same_as(other)

    def __repr__(self):
        return f"Lattice({[[str(x) for x in r] for r in self.basis]})"


def _faces(cone):
    return [tuple(c) for k in range(len(cone) + 1) for c in combinations(cone, k)]


class SimplicialFan:
    """A simplicial fan: primitive rays plus cones as sorted ray-index tuples.

    ``cones`` may list only maximal cones; all faces, and the zero cone,
    are added. ``ray_scales[i]`` records how the given ray relates to the
    stored primitive one (given = scale * primitive).
    """

    def __init__(self, lattice, rays, cones, check=True):
        self.lattice = lattice
        self.n = lattice.rank
        prims, scales = [], []
        for r in rays:
            v, s = lattice.primitive(r)
            prims.append(v)
            scales.append(s)
        if len(set(prims)) != len(prims):
            raise InvalidFan("two rays span the same half-line")
        self.rays = prims
        self.ray_scales = scales
        closure = set()
        for c in cones:
            c = tuple(sorted(set(int(i) for i in c)))
            if any(i < 0 or i >= len(prims) for i in c):
                raise InvalidFan(f"cone {c} refers to a missing ray")
            closure.update(_faces(c))
        self.cones = sorted(closure, key=lambda c: (len(c), c))
        self.maximal_cones = [c for c in self.cones
                              if not any(set(c) < set(d) for d in self.cones if len(d) > len(c))]
        self._ray_index = {r: i for i, r in enumerate(prims)}
        self._cone_set = set(self.cones)
        self._span_cache = {}
        for c in self.maximal_cones:
            if linalg.rank([list(self.rays[i]) for i in c]) != len(c):
                raise InvalidFan(f"rays of cone {c} are linearly dependent")
        if check:
            self.validate()

    # -- structure ----------------------------------------------------------

    def ray_index(self, v):
        return self._ray_index[_vec(v)]

    def has_cone(self, idx):
        return tuple(sorted(idx)) in self._cone_set

    def ray_matrix(self, cone):
        return [list(self.rays[i]) for i in cone]

    def ray_coords(self, cone):
        """Integer coordinates of the cone's rays in the lattice basis."""
        return [self.lattice.int_coords(self.rays[i]) for i in cone]

    def full_cones(self):
        return [c for c in self.maximal_cones if len(c) == self.n]

    def is_pure(self):
        return all(len(c) == self.n for c in self.maximal_cones)

    def is_smooth(self):
        return all(cone_mult(self, c) == 1 for c in self.maximal_cones)

    def cone_coordinates(self, cone, p):
        """``lam`` with ``p = sum lam_i ray_i`` over the cone, or None."""
        return linalg.solve_left(self.ray_matrix(cone), list(_vec(p)))

    def locate(self, p):
        """A maximal cone containing ``p`` and the coordinates of ``p`` there."""
        p = _vec(p)
        for c in self.maximal_cones:
            lam = self.cone_coordinates(c, p)
            if lam is not None and all(x >= 0 for x in lam):
                return c, lam
        raise OutsideSupport(f"{[str(x) for x in p]} is not in the support")

    def validate(self):
        """Check that maximal cones pairwise meet along common faces."""
        cones = self.maximal_cones
        for a, b in combinations(cones, 2):
            if not _meet_properly(self, a, b):
                raise InvalidFan(f"cones {a} and {b} do not meet along a common face")

    def with_cones(self, rays, cones):
        return SimplicialFan(self.lattice, rays, cones, check=False)

    def __repr__(self):
        rays = [[str(x) for x in r] for r in self.rays]
        return f"SimplicialFan(rays={rays}, maximal={self.maximal_cones})"


def _meet_properly(fan, a, b):
    """Exact test that ``cone(a) ∩ cone(b) = cone(a ∩ b)``.

    The feasible set ``{sum lam_i a_i = sum mu_j b_j, lam, mu >= 0}`` is a
    cone whose extreme rays are positive circuits of the combined ray
    list; the two cones meet properly iff no such circuit puts weight on
    a non-common ray.
    """
    common = set(a) & set(b)
    va = [(("a", i), fan.rays[i]) for i in a]
    vb = [(("b", j), tuple(-x for x in fan.rays[j])) for j in b]
    allv = va + vb
    for k in range(2, len(allv) + 1):
        for sub in combinations(allv, k):
            rows = linalg.transpose([list(v) for _, v in sub])
            ker = linalg.nullspace(rows)
            if len(ker) != 1:
                continue
            x = ker[0]
            if all(c > 0 for c in x) or all(c < 0 for c in x):
                for (side, i), c in zip((t for t, _ in sub), x):
                    if i not in common:
                        return False
    return True


class PLFunction:
    """Fan-piecewise linear function fixed by its values on primitive rays."""

    def __init__(self, fan, ray_values):
        values = [rat(x) for x in ray_values]
        if len(values) != len(fan.rays):
            raise ValueError("need one value per ray")
        for i, x in enumerate(values):
            if x <= 0:
                raise NotPositive(f"ray {i} has value {x}; values must be positive")
        self.fan = fan
        self.values = values

    @classmethod
    def from_given(cls, fan, given_values):
        """Values attached to the rays as originally supplied (before
        they were made primitive); rescaled by linearity."""
        return cls(fan, [rat(x) / s for x, s in zip(given_values, fan.ray_scales)])

    def __call__(self, p):
        return eval_pl(self, p)

    def value_on_cone(self, cone, lam):
        return sum((l * self.values[i] for l, i in zip(lam, cone)), Fraction(0))


def cone_mult(fan, cone):
    """Index of the ray sublattice in ``N ∩ span(cone)``."""
    if not cone:
        return 1
    _, D, _ = linalg.smith_form(fan.ray_coords(cone))
    return prod(D[i][i] for i in range(len(cone)))


def box_points(fan, cone):
    """Coordinates ``lam`` (in ``(0, 1]^k``) of the lattice points of the
    half-open box ``{sum lam_i e_i : 0 < lam_i <= 1}``.

    With ``U R V = D`` the Smith form of the ray coordinates, a point
    ``lam R`` is in N iff ``mu = lam U^{-1}`` has ``mu_i d_i`` integral,
    so the box points are ``(j_i / d_i) U`` reduced into ``(0, 1]``.
    """
    k = len(cone)
    if k == 0:
        return [()]
    U, D, _ = linalg.smith_form(fan.ray_coords(cone))
    d = [D[i][i] for i in range(k)]
    out = []
    for js in product(*(range(x) for x in d)):
        mu = [Fraction(j, x) for j, x in zip(js, d)]
        lam = [sum((m * U[i][c] for i, m in enumerate(mu)), Fraction(0)) for c in range(k)]
        lam = tuple(1 - ((-x) % 1) for x in lam)
        out.append(lam)
    return sorted(out)


def box_points_dense(fan, cone, limit=10 ** 4):
    """Brute-force enumeration for ``box_points``: scan the bounding box."""
    k = len(cone)
    if k == 0:
        return [()]
    R = [list(map(Fraction, r)) for r in fan.ray_coords(cone)]
    n = len(R[0])
    lo = [sum(min(0, R[i][c]) for i in range(k)) for c in range(n)]
    hi = [sum(max(0, R[i][c]) for i in range(k)) for c in range(n)]
    size = prod(int(h - l) + 1 for l, h in zip(lo, hi))
    if size > limit * (2 ** n):
        raise ValueError("box too large for dense enumeration")
    out = []
    for x in product(*(range(int(l), int(h) + 1) for l, h in zip(lo, hi))):
        lam = linalg.solve_left(R, [Fraction(v) for v in x])
        if lam is None:
            continue
        if all(0 < l <= 1 for l in lam):
            out.append(tuple(lam))
    return sorted(out)


def eval_pl(phi, p):
    p = _vec(p)
    if not any(p):
        return Fraction(0)
    cone, lam = phi.fan.locate(p)
    return phi.value_on_cone(cone, lam)


def divisor_from_pl(phi):
    """Torus-invariant boundary: coefficient ``1 - phi(e)`` on each ray."""
    return [(ray, 1 - v) for ray, v in zip(phi.fan.rays, phi.values)]


def _require_positive(phi):
    for i, v in enumerate(phi.values):
        if v <= 0:
            raise NotPositive(f"ray {i} has value {v}")


def stringy_E_toric(phi):
    """Closed form ``(uv-1)^n sum_{p in |fan| ∩ N} (uv)^{-phi(p)}``.

    Each cone contributes its relative-interior sum
    ``box_sum * prod 1/(1 - (uv)^{-phi(e)})``, rewritten as
    ``box_sum * prod (uv)^{phi(e)} / ((uv)^{phi(e)} - 1)``.
    """
    _require_positive(phi)
    fan = phi.fan
    uv1 = FracPoly({(1, 1): 1, (0, 0): -1})
    scale = uv1 ** fan.n
    by_factors = {}
    for cone in fan.cones:
        vals = [phi.values[i] for i in cone]
        shift = sum(vals, Fraction(0))
        terms = {}
        for lam in box_points(fan, cone):
            e = shift - sum((l * v for l, v in zip(lam, vals)), Fraction(0))
            terms[(e, e)] = terms.get((e, e), 0) + 1
        key = tuple(sorted(vals))
        by_factors[key] = by_factors.get(key, FracPoly.zero()) + FracPoly(terms)
    total = RationalExpr(0)
    for key, num in by_factors.items():
        total = total + RationalExpr(num * scale, key)
    return total


def shed_volume(phi):
    """``sum over n-dimensional cones of mult / prod phi(e)``."""
    _require_positive(phi)
    fan = phi.fan
    total = Fraction(0)
    for cone in fan.full_cones():
        total += Fraction(cone_mult(fan, cone)) / prod(phi.values[i] for i in cone)
    return total


def check_subdivision(coarse, fine):
    """Raise NotASubdivision unless ``fine`` refines ``coarse`` with the same support.

    Containment is checked ray by ray. Coverage uses volumes: inside a
    coarse cone of dimension k, the simplices ``conv(0, r / l(r))`` of the
    fine cones (``l`` = 1 on the coarse rays) must have total normalized
    volume 1.
    """
    if not coarse.lattice.same_as(fine.lattice):
        raise NotASubdivision("fans live in different lattices")
    owner = {}
    for tau in fine.maximal_cones:
        home = None
        for sigma in coarse.maximal_cones:
            coords = [coarse.cone_coordinates(sigma, fine.rays[i]) for i in tau]
            if all(c is not None and all(x >= 0 for x in c) for c in coords):
                home = (sigma, coords)
                break
        if home is None:
            raise NotASubdivision(f"fine cone {tau} lies in no coarse cone")
        owner[tau] = home
    for sigma in coarse.maximal_cones:
        k = len(sigma)
        vol = Fraction(0)
        for tau, (home, coords) in owner.items():
            if home != sigma or len(tau) != k:
                continue
            scaled = [[x / sum(c) for x in c] for c in coords]
            vol += abs(linalg.det(scaled))
        if vol != 1:
            raise NotASubdivision(f"fine cones cover {vol} of coarse cone {sigma}")


def subdivision_discrepancies(phi, fine, check=True):
    """``(ray, phi(ray) - 1)`` for every ray of the subdivision."""
    if check:
        check_subdivision(phi.fan, fine)
    return [(r, eval_pl(phi, r) - 1) for r in fine.rays]


def strata_from_subdivision(phi, fine, check=True):
    """Strata of the toric resolution given by a smooth subdivision.

    Components are the rays of ``fine`` with log discrepancy ``phi(e')``;
    the torus orbit of a cone with ray set J lies in exactly the divisors
    of J, so ``E(D_J°) = (uv-1)^(n-|J|)`` when J is a cone and 0 otherwise.
    """
    if check:
        check_subdivision(phi.fan, fine)
    bad = [c for c in fine.maximal_cones if cone_mult(fine, c) != 1]
    if bad:
        raise NotSmooth(f"cones {bad} are singular")
    uv1 = FracPoly({(1, 1): 1, (0, 0): -1})
    comps = [(f"e{i}", eval_pl(phi, r)) for i, r in enumerate(fine.rays)]
    strata = {mask(c): uv1 ** (fine.n - len(c)) for c in fine.cones}
    return StrataData(fine.n, comps, strata)


@dataclass(frozen=True)
class FlipComparison:
    volume: Fraction
    volume_plus: Fraction

    @property
    def ordering(self):
        if self.volume > self.volume_plus:
            return ">"
        return "=" if self.volume == self.volume_plus else "<"


def _ray_values(phi):
    return {r: v for r, v in zip(phi.fan.rays, phi.values)}


def flip_volume_compare(phi, phi_plus):
    """Shed volumes of two fans sharing rays and ray values.

    Only the combinatorial shadow of a flip is checked; relative
    ampleness of the two sides is the caller's responsibility, and the
    strict inequality is only guaranteed for a genuine flip.
    """
    if not phi.fan.lattice.same_as(phi_plus.fan.lattice):
        raise RaysDiffer("fans live in different lattices")
    if _ray_values(phi) != _ray_values(phi_plus):
        raise RaysDiffer("fans differ in rays or in values on rays")
    return FlipComparison(shed_volume(phi), shed_volume(phi_plus))


def _inequalities(fan, cone):
    # for a full cone: x in cone iff x . col_i(R^{-1}) >= 0 for all i
    inv = linalg.inverse(fan.ray_matrix(cone))
    return linalg.transpose(inv)


def _intersection_rays(fan_a, a, fan_b, b):
    """Extreme rays of ``cone(a) ∩ cone(b)`` for full-dimensional cones."""
    H = _inequalities(fan_a, a) + _inequalities(fan_b, b)
    n = fan_a.n
    rays = set()
    for sub in combinations(H, n - 1):
        ker = linalg.nullspace([list(r) for r in sub])
        if len(ker) != 1:
            continue
        x = ker[0]
        for cand in (x, [-c for c in x]):
            if all(sum(h * c for h, c in zip(row, cand)) >= 0 for row in H):
                den = lcm(*(c.denominator for c in cand))
                ints = [c * den for c in cand]
                g = gcd(*(int(c) for c in ints))
                rays.add(tuple(Fraction(c, g) for c in ints))
    return sorted(rays)


def pl_dominates(phi, phi_plus):
    """``(weak, strict)``: ``phi <= phi_plus`` everywhere, and ``phi < phi_plus``
    on the interior of some maximal cone of the second fan.

    Both functions are linear on every piece ``sigma ∩ tau``, so comparing
    them at the extreme rays of the pieces decides the weak inequality.
    A cone ``tau`` is strict when on every full piece the rays where the
    two agree lie in one facet of ``tau``.
    """
    fa, fb = phi.fan, phi_plus.fan
    n = fa.n
    weak = True
    strict_cones = []
    for tau in fb.full_cones():
        tau_eq = _inequalities(fb, tau)
        strict = True
        pieces = 0
        for sigma in fa.full_cones():
            rays = _intersection_rays(fa, sigma, fb, tau)
            if len(rays) < n or linalg.rank([list(r) for r in rays]) < n:
                continue
            pieces += 1
            zero = []
            for r in rays:
                lo = phi.value_on_cone(sigma, fa.cone_coordinates(sigma, r))
                hi = phi_plus.value_on_cone(tau, fb.cone_coordinates(tau, r))
                if lo > hi:
                    weak = False
                elif lo == hi:
                    zero.append(r)
            if zero and not any(
                all(sum(h * c for h, c in zip(row, r)) == 0 for r in zero) for row in tau_eq
            ):
                strict = False
        if pieces and strict:
            strict_cones.append(tau)
    return weak, weak and bool(strict_cones)


def find_flip_pairs(lattice, rays, cones, cones_plus, values):
    """Brute-force search for ray values making ``(cones -> cones_plus)`` a flip shadow.

    Tries every assignment of ``values`` to the rays and keeps those where
    ``phi <= phi_plus`` with strict inequality on some maximal cone.
    Returns a list of ``(phi, phi_plus)``.
    """
    fan = SimplicialFan(lattice, rays, cones)
    fan_plus = SimplicialFan(lattice, rays, cones_plus)
    found = []
    for vals in product(values, repeat=len(rays)):
        phi = PLFunction.from_given(fan, vals)
        phi_plus = PLFunction.from_given(fan_plus, vals)
        weak, strict = pl_dominates(phi, phi_plus)
        if strict:
            found.append((phi, phi_plus))
    return found
