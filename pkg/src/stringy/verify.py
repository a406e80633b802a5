"""Identity suite: every route to the same invariant must agree exactly."""
from collections import Counter
from dataclasses import dataclass

from .grp import (
    abelian_to_toric, blowup_identity_check, conjugacy_classes, eigen_alphas,
    mckay_table, orbifold_E, physicists_euler, ramification_pair,
)
from .qalg import FracPoly
from .strata import (
    ClosedStrataData, closed_from_open, open_from_closed, stringy_E,
    stringy_euler_direct,
)
from .subdivide import smooth_subdivide
from .toric import (
    box_points, check_subdivision, cone_mult, divisor_from_pl, flip_volume_compare,
    pl_dominates, shed_volume, strata_from_subdivision, stringy_E_toric,
    subdivision_discrepancies,
)

__all__ = ["Check", "verify_strata", "verify_toric", "verify_group", "verify_flip"]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        tail = f" ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}{tail}"


def _check(name, fn):
    try:
        ok, detail = fn()
    except AssertionError as exc:
        return Check(name, False, str(exc))
    return Check(name, bool(ok), detail)


def verify_strata(data):
    out = []
    if isinstance(data, ClosedStrataData):
        opened = open_from_closed(data)
        out.append(_check("closed -> open -> closed round trip",
                          lambda: (closed_from_open(opened).closed_strata == data.closed_strata, "")))
        data = opened
    else:
        out.append(_check("open -> closed -> open round trip",
                          lambda: (open_from_closed(closed_from_open(data)).open_strata
                                   == data.open_strata, "")))
    E = stringy_E(data)
    direct = stringy_euler_direct(data)

    def limit():
        lim = E.limit_at_one()
        return lim == direct, f"limit {lim}, direct {direct}"

    out.append(_check("e_st: limit of E_st equals direct sum", limit))
    return out


def _two_resolutions(phi):
    first = smooth_subdivide(phi, "min_phi")
    second = smooth_subdivide(phi, "min_phi_reverse")
    if second.maximal_cones == first.maximal_cones and second.rays == first.rays:
        second = smooth_subdivide(phi, "min_phi", extra_blowups=1)
    return first, second


def verify_toric(phi):
    out = []
    fan = phi.fan
    E = stringy_E_toric(phi)

    def boxes():
        bad = [c for c in fan.cones if len(box_points(fan, c)) != cone_mult(fan, c)]
        return not bad, f"{len(fan.cones)} cones" if not bad else f"mismatch on {bad}"

    out.append(_check("box count equals multiplicity", boxes))
    if fan.is_pure():
        def volume():
            lim, vol = E.limit_at_one(), shed_volume(phi)
            return lim == vol, f"e_st {lim}, vol {vol}"
        out.append(_check("e_st equals shed volume", volume))
    first, second = _two_resolutions(phi)
    distinct = (first.rays, first.maximal_cones) != (second.rays, second.maximal_cones)
    for label, fine in (("first", first), ("second", second)):
        def route(fine=fine):
            check_subdivision(fan, fine)
            got = stringy_E(strata_from_subdivision(phi, fine))
            return got == E, f"{len(fine.rays)} rays, {len(fine.maximal_cones)} cones"
        out.append(_check(f"strata of {label} smooth subdivision give the closed form", route))

        def klt(fine=fine):
            worst = min(d for _, d in subdivision_discrepancies(phi, fine))
            return worst > -1, f"min discrepancy {worst}"
        out.append(_check(f"discrepancies of {label} subdivision exceed -1", klt))
    if fan.n >= 2:
        # a one-dimensional fan has no subdivision other than itself
        out.append(Check("the two subdivisions are distinct", distinct))
    return out


def verify_flip(phi, phi_plus):
    cmp = flip_volume_compare(phi, phi_plus)
    weak, strict = pl_dominates(phi, phi_plus)
    out = [Check("phi <= phi_plus on the common support", weak)]
    if strict:
        out.append(Check("strict domination gives strict volume decrease",
                         cmp.volume > cmp.volume_plus, f"{cmp.volume} > {cmp.volume_plus}"))
    for label, f in (("minus", phi), ("plus", phi_plus)):
        lim, vol = stringy_E_toric(f).limit_at_one(), shed_volume(f)
        out.append(Check(f"e_st equals shed volume ({label})", lim == vol, f"{lim}"))
    return out


def _is_sl(G):
    return all(g.det() == 1 for g in G.generators)


def verify_group(G):
    out = []
    classes = conjugacy_classes(G)
    E = orbifold_E(G)

    def euler():
        e = physicists_euler(G)
        at1 = E.limit_at_one()
        return e == len(classes) == at1, f"e = {e}, classes = {len(classes)}, E_orb(1) = {at1}"

    out.append(_check("physicists' Euler number = class count = E_orb(1)", euler))

    def fixed():
        bad = [c.representative for c in classes
               if len(eigen_alphas(G.elements[c.representative]).alphas) != G.n]
        return not bad, ""

    out.append(_check("eigenvalue multiplicities sum to n", fixed))
    if _is_sl(G):
        def mckay():
            table = mckay_table(G)
            return sum(table.values()) == len(classes), f"table {table}"
        out.append(_check("McKay table sums to the class count", mckay))

    def inversion():
        # g <-> g^-1 with wt(g) + wt(g^-1) = n - dim V^g mirrors E_orb onto sum (uv)^wt(g)
        poly = E.to_poly()
        n = G.n
        mirrored = FracPoly({(n - p, n - q): c for (p, q), c in poly.items()})
        ages = Counter(eigen_alphas(G.elements[c.representative]).weight for c in classes)
        return mirrored == FracPoly({(w, w): c for w, c in ages.items()}), ""

    out.append(_check("E_orb mirrors onto the age polynomial", inversion))

    def blowups():
        bad = [c.representative for c in classes
               if not blowup_identity_check(G.elements[c.representative])[0]]
        return not bad, f"{len(classes)} class representatives"

    out.append(_check("blow-up identity on class representatives", blowups))
    if all(g.is_diagonal() for g in G.generators):
        phi = abelian_to_toric(G)
        Et = stringy_E_toric(phi)
        out.append(Check("toric closed form equals E_orb", Et == E))

        def divisor():
            ram = {i: coef for i, _, coef in ramification_pair(G)}
            coeffs = [c for _, c in divisor_from_pl(phi)]
            return coeffs == [ram[i] for i in range(G.n)], "coefficients " + ", ".join(map(str, coeffs))

        out.append(_check("boundary divisor matches ramification", divisor))
        out += verify_toric(phi)
    return out
