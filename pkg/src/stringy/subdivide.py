"""Smooth subdivisions of simplicial fans by repeated stellar subdivision."""
from fractions import Fraction

from .toric import SimplicialFan, box_points, cone_mult, eval_pl

__all__ = ["smooth_subdivide", "stellar", "interior_box_points"]


def interior_box_points(fan, cone):
    """Nonzero lattice points ``sum lam_i e_i`` with ``0 <= lam_i < 1``, as
    ``(point, lam)`` pairs."""
    out = []
    for lam in box_points(fan, cone):
        lam = tuple(x % 1 for x in lam)
        if not any(lam):
            continue
        pt = tuple(sum((l * fan.rays[i][c] for l, i in zip(lam, cone)), Fraction(0))
                   for c in range(fan.n))
        out.append((pt, lam))
    return out


def stellar(fan, point):
    """Stellar subdivision of ``fan`` at a lattice point of its support."""
    point = tuple(Fraction(x) for x in point)
    cone, lam = fan.locate(point)
    face = {i for i, l in zip(cone, lam) if l > 0}
    rays = list(fan.rays) + [point]
    v = len(rays) - 1
    cones = []
    for S in fan.maximal_cones:
        if face <= set(S):
            cones += [tuple(sorted((set(S) - {t}) | {v})) for t in face]
        else:
            cones.append(S)
    return fan.with_cones(rays, cones)


def _pick(fan, values, strategy):
    cones = fan.maximal_cones
    if strategy == "min_phi_reverse":
        cones = reversed(cones)
    for cone in cones:
        if cone_mult(fan, cone) == 1:
            continue
        cands = []
        for pt, lam in interior_box_points(fan, cone):
            val = sum((l * values[i] for l, i in zip(lam, cone)), Fraction(0))
            key = tuple(-x for x in pt) if strategy == "min_phi_reverse" else pt
            cands.append((val, key, pt))
        return min(cands)[2]
    return None


def smooth_subdivide(phi, strategy="min_phi", extra_blowups=0):
    """A smooth subdivision of ``phi``'s fan.

    Repeatedly picks a singular maximal cone and subdivides at its box
    point of least ``phi`` value. ``"min_phi"`` takes the first such cone
    and breaks ties lexicographically; ``"min_phi_reverse"`` takes the
    last cone and breaks ties in reverse order. Each step replaces a cone
    of multiplicity m by cones of multiplicity ``lam_t * m < m``, so the
    process stops. ``extra_blowups`` further subdivides that many times at
    the ray sum of a smooth cone of dimension >= 2 (which keeps the fan
    smooth), giving a different resolution of the same pair.
    """
    if strategy not in ("min_phi", "min_phi_reverse"):
        raise ValueError(f"unknown strategy {strategy!r}")
    fan = phi.fan
    values = list(phi.values)
    while True:
        pt = _pick(fan, values, strategy)
        if pt is None:
            break
        fan = stellar(fan, pt)
        values.append(eval_pl(phi, pt))
    for _ in range(extra_blowups):
        cone = next((c for c in fan.maximal_cones if len(c) >= 2), None)
        if cone is None:
            break
        pt = tuple(sum(fan.rays[i][c] for i in cone) for c in range(fan.n))
        fan = stellar(fan, pt)
    return fan
