"""Combinatorial shadow of a log resolution and its stringy invariants.

A resolution is described by its divisor components, each with a log
discrepancy, and the E-polynomials of the strata cut out by subsets of
components. Subsets of component indices are bitmasks; a missing key is
an empty stratum.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotKlt
from .qalg import FracPoly, RationalExpr, rat

__all__ = [
    "StrataData", "ClosedStrataData", "validate_klt", "open_from_closed",
    "closed_from_open", "stringy_E", "stringy_euler", "stringy_euler_direct",
    "mask", "members",
]


def mask(indices):
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def members(m):
    """Component indices in bitmask ``m``, ascending."""
    out, i = [], 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def _clean_strata(strata, ncomp):
    out = {}
    for J, E in strata.items():
        J = mask(J) if not isinstance(J, int) else J
        if J >> ncomp:
            raise ValueError(f"stratum {members(J)} refers to a missing component")
        if not isinstance(E, FracPoly):
            E = FracPoly.parse(E) if isinstance(E, str) else FracPoly({(0, 0): E})
        if E:
            out[J] = out.get(J, FracPoly.zero()) + E
    return out


@dataclass(frozen=True)
class StrataData:
    """Open strata ``E(D_J°)`` keyed by bitmask ``J``.

    ``components`` is a tuple of ``(label, log_discrepancy)``.
    """

    n: int
    components: tuple
    open_strata: dict = field(default_factory=dict)

    def __post_init__(self):
        comps = tuple((str(lab), rat(a)) for lab, a in self.components)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "open_strata", _clean_strata(self.open_strata, len(comps)))

    @property
    def log_discrepancies(self):
        return [a for _, a in self.components]

    def consistency_warnings(self):
        """Advisory checks that the shadow cannot fully certify."""
        notes = []
        for J, E in self.open_strata.items():
            if bin(J).count("1") > self.n:
                notes.append(f"stratum {members(J)} has more than n={self.n} components")
        return notes


@dataclass(frozen=True)
class ClosedStrataData:
    """Closed strata ``E(D_J)``; the empty key holds ``E(Y)``."""

    n: int
    components: tuple
    closed_strata: dict = field(default_factory=dict)

    def __post_init__(self):
        comps = tuple((str(lab), rat(a)) for lab, a in self.components)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "closed_strata", _clean_strata(self.closed_strata, len(comps)))

    def support_is_monotone(self):
        """True if every subset of a nonempty stratum is nonempty too."""
        present = set(self.closed_strata)
        return all((J & ~(1 << i)) in present for J in present for i in members(J))


def validate_klt(data):
    for i, (label, a) in enumerate(data.components):
        if a <= 0:
            raise NotKlt(i, label, a)


def _supersets(J, keys):
    return [K for K in keys if K & J == J]


def open_from_closed(data):
    """Inclusion-exclusion: ``E(D_J°) = sum_{K ⊇ J} (-1)^{|K \\ J|} E(D_K)``."""
    keys = list(data.closed_strata)
    candidates = set(keys)
    # every subset of a nonempty closed stratum may carry an open piece
    for K in keys:
        sub = K
        while True:
            candidates.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & K
    out = {}
    for J in candidates:
        total = FracPoly.zero()
        for K in _supersets(J, keys):
            sign = -1 if bin(K & ~J).count("1") % 2 else 1
            total = total + sign * data.closed_strata[K]
        if total:
            out[J] = total
    return StrataData(data.n, data.components, out)


def closed_from_open(data):
    """Re-sum open strata over supersets to recover the closed strata."""
    keys = list(data.open_strata)
    candidates = set()
    for K in keys:
        sub = K
        while True:
            candidates.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & K
    out = {}
    for J in candidates:
        total = FracPoly.zero()
        for K in _supersets(J, keys):
            total = total + data.open_strata[K]
        if total:
            out[J] = total
    return ClosedStrataData(data.n, data.components, out)


def stringy_E(data):
    """``sum_J E(D_J°) * prod_{j in J} (uv - 1) / ((uv)^{a_j} - 1)``."""
    validate_klt(data)
    a = data.log_discrepancies
    uv1 = FracPoly({(1, 1): 1, (0, 0): -1})
    # group strata by their factor multiset and sum numerators over a
    # common denominator once, instead of canonicalizing term by term
    numer = {}
    for J, E in data.open_strata.items():
        idx = members(J)
        key = tuple(sorted(a[j] for j in idx if a[j] != 1))
        # factors with a = 1 cancel against (uv - 1) on the spot
        num = E * (uv1 ** len(key))
        numer[key] = numer.get(key, FracPoly.zero()) + num
    total = RationalExpr(0)
    for key, num in numer.items():
        total = total + RationalExpr(num, key)
    return total


def stringy_euler_direct(data):
    """``sum_J e(D_J°) prod_{j in J} 1/a_j``, straight from the definition."""
    validate_klt(data)
    a = data.log_discrepancies
    total = Fraction(0)
    for J, E in data.open_strata.items():
        term = Fraction(E.at_one())
        for j in members(J):
            term /= a[j]
        total += term
    return total


def stringy_euler(data, check=True):
    """Stringy Euler number; with ``check`` the limit of :func:`stringy_E`
    is computed too and must agree with the direct sum."""
    direct = stringy_euler_direct(data)
    if check:
        via_limit = stringy_E(data).limit_at_one()
        if via_limit != direct:
            raise AssertionError(f"e_st paths disagree: direct {direct}, limit {via_limit}")
    return direct
