"""JSON input formats for the three engines.

Rationals are JSON integers or strings ``"p/q"``; floats are rejected.
Every failure raises :class:`ParseError` with a line and column in the
JSON document.
"""
import json
from fractions import Fraction

from .cyclotomic import CycNum
from .errors import ParseError
from .grp import GroupElement, diagonal_element, group_closure, DEFAULT_BOUND
from .strata import ClosedStrataData, StrataData
from .syntax import parse_poly
from .toric import Lattice, PLFunction, SimplicialFan

__all__ = ["load", "detect_kind", "parse_strata", "parse_toric", "parse_flip",
           "parse_group", "parse_rat"]


class _Doc:
    """The raw text plus helpers to locate values in it for error messages."""

    def __init__(self, text):
        self.text = text

    def fail(self, message, needle=None):
        pos = 0
        if needle is not None:
            found = self.text.find(json.dumps(needle) if isinstance(needle, str) else str(needle))
            pos = max(found, 0)
        raise ParseError(message, self.text, pos)

    def key_fail(self, key, message):
        found = self.text.find(f'"{key}"')
        raise ParseError(message, self.text, max(found, 0))


def load(text):
    """Parse JSON text, mapping decoder errors to ParseError."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, text, exc.pos) from None
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object", text, 0)
    return data


def parse_rat(x, doc=None):
    if isinstance(x, bool) or isinstance(x, float):
        (doc or _Doc("")).fail(f"expected an exact rational, found {x!r}", x)
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            (doc or _Doc("")).fail(f"bad rational {x!r}", x)
    (doc or _Doc("")).fail(f"expected a rational, found {x!r}")


def _require(data, key, doc, kind=None):
    if key not in data:
        doc.fail(f"missing key {key!r}")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        doc.key_fail(key, f"{key!r} must be a {kind.__name__}")
    return value


def detect_kind(data):
    if "diagonal_weights" in data or "generators" in data:
        return "group"
    if "cones_plus" in data:
        return "flip"
    if "rays" in data:
        return "toric"
    if "open_strata" in data or "closed_strata" in data:
        return "strata"
    return None


# -- strata -----------------------------------------------------------------

def parse_strata(data, text=""):
    """``StrataData`` or ``ClosedStrataData`` from the strata schema."""
    doc = _Doc(text)
    n = _require(data, "n", doc, int)
    comps = []
    for c in _require(data, "components", doc, list):
        if not isinstance(c, dict) or "log_discrepancy" not in c:
            doc.key_fail("components", "each component needs a 'log_discrepancy'")
        comps.append((str(c.get("label", f"D{len(comps)}")), parse_rat(c["log_discrepancy"], doc)))
    closed = "closed_strata" in data
    key = "closed_strata" if closed else "open_strata"
    strata = {}
    for entry in _require(data, key, doc, list):
        if not isinstance(entry, dict) or "subset" not in entry or "E" not in entry:
            doc.key_fail(key, "each stratum needs 'subset' and 'E'")
        subset = entry["subset"]
        if not isinstance(subset, list) or any(
                not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < len(comps)
                for i in subset):
            doc.key_fail(key, f"bad subset {subset!r}")
        E = entry["E"]
        if isinstance(E, int) and not isinstance(E, bool):
            E = str(E)
        if not isinstance(E, str):
            doc.fail(f"E must be a polynomial string, found {E!r}")
        try:
            poly = parse_poly(E)
        except ParseError as exc:
            base = max(text.find(json.dumps(E)), 0) + 1
            raise ParseError(f"in {E!r}: {exc.args[0]}", text, base + exc.pos) from None
        bits = 0
        for i in set(subset):
            bits |= 1 << i
        strata[bits] = strata[bits] + poly if bits in strata else poly
    cls = ClosedStrataData if closed else StrataData
    return cls(n, comps, strata)


# -- toric ------------------------------------------------------------------

def _vectors(data, key, doc, n=None):
    rows = _require(data, key, doc, list)
    out = []
    for r in rows:
        if not isinstance(r, list):
            doc.key_fail(key, f"{key!r} entries must be lists")
        v = [parse_rat(x, doc) for x in r]
        if n is not None and len(v) != n:
            doc.key_fail(key, f"{key!r} entries must have length {n}")
        out.append(v)
    return out


def _cones(data, key, doc, nrays):
    out = []
    for c in _require(data, key, doc, list):
        if not isinstance(c, list) or any(
                not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < nrays for i in c):
            doc.key_fail(key, f"bad cone {c!r}")
        out.append(tuple(c))
    return out


def _lattice(data, doc, n):
    if "lattice_basis" not in data:
        return Lattice.standard(n)
    basis = _vectors(data, "lattice_basis", doc, n)
    try:
        return Lattice(basis)
    except ValueError as exc:
        doc.key_fail("lattice_basis", str(exc))


def _fan(data, doc, lattice, rays, cones_key="cones", check=True):
    cones = _cones(data, cones_key, doc, len(rays))
    return SimplicialFan(lattice, rays, cones, check=check)


def parse_toric(data, text="", check=True):
    """``PLFunction`` (on its fan) from the toric schema; ``phi`` refers to the
    rays as given, and is rescaled when rays are made primitive."""
    doc = _Doc(text)
    rays = _vectors(data, "rays", doc)
    if not rays:
        doc.key_fail("rays", "need at least one ray")
    n = len(rays[0])
    if any(len(r) != n for r in rays):
        doc.key_fail("rays", "rays must have equal length")
    lattice = _lattice(data, doc, n)
    phi = [parse_rat(x, doc) for x in _require(data, "phi", doc, list)]
    if len(phi) != len(rays):
        doc.key_fail("phi", "need one phi value per ray")
    fan = _fan(data, doc, lattice, rays, check=check)
    return PLFunction.from_given(fan, phi)


def parse_flip(data, text="", check=True):
    """Two PL functions: on ``cones`` and on ``cones_plus``. Optional
    ``rays_plus`` / ``phi_plus`` override the shared rays and values."""
    doc = _Doc(text)
    phi = parse_toric(data, text, check)
    lattice = phi.fan.lattice
    rays_plus = _vectors(data, "rays_plus", doc) if "rays_plus" in data else _vectors(data, "rays", doc)
    vals_plus = data.get("phi_plus", data["phi"])
    vals_plus = [parse_rat(x, doc) for x in vals_plus]
    if len(vals_plus) != len(rays_plus):
        doc.key_fail("phi_plus", "need one phi value per ray")
    fan_plus = _fan(data, doc, lattice, rays_plus, "cones_plus", check)
    return phi, PLFunction.from_given(fan_plus, vals_plus)


def parse_subdivision(data, phi, text=""):
    """Optional explicit ``subdivision: {rays, cones}`` for toric-strata."""
    doc = _Doc(text)
    sub = data.get("subdivision")
    if sub is None:
        return None
    if not isinstance(sub, dict):
        doc.key_fail("subdivision", "'subdivision' must be an object")
    rays = _vectors(sub, "rays", doc, phi.fan.n)
    return _fan(sub, doc, phi.fan.lattice, rays)


# -- groups -----------------------------------------------------------------

def _cyc(entry, m, doc):
    if isinstance(entry, list):
        return CycNum(m, [parse_rat(x, doc) for x in entry])
    return CycNum(m, [parse_rat(entry, doc)])


def parse_group(data, text="", bound=DEFAULT_BOUND):
    """``MatrixGroup`` from the full schema or the ``diagonal_weights`` shorthand."""
    doc = _Doc(text)
    if "diagonal_weights" in data:
        dw = _require(data, "diagonal_weights", doc, dict)
        d = _require(dw, "order", doc, int)
        if d < 1:
            doc.key_fail("order", "order must be positive")
        exps = _require(dw, "exponents", doc, list)
        if not exps or any(not isinstance(e, list) or not all(isinstance(a, int) for a in e)
                           for e in exps):
            doc.key_fail("exponents", "exponents must be lists of integers")
        if len({len(e) for e in exps}) != 1 or not exps[0]:
            doc.key_fail("exponents", "exponent lists must have one common positive length")
        gens = [diagonal_element(d, e) for e in exps]
        return group_closure(gens, bound)
    m = _require(data, "conductor", doc, int)
    n = _require(data, "degree", doc, int)
    if m < 1 or n < 1:
        doc.fail("conductor and degree must be positive")
    gens = []
    for g in _require(data, "generators", doc, list):
        if not isinstance(g, list):
            doc.key_fail("generators", "each generator must be a list")
        rows_form = len(g) == n and all(isinstance(r, list) and len(r) == n for r in g)
        if rows_form and n == 1:
            rows_form = isinstance(g[0][0], list)
        if rows_form:
            rows = [[_cyc(x, m, doc) for x in r] for r in g]
        elif len(g) == n * n:
            flat = [_cyc(x, m, doc) for x in g]
            rows = [flat[i * n:(i + 1) * n] for i in range(n)]
        else:
            doc.key_fail("generators", f"generator does not describe a {n}x{n} matrix")
        gen = GroupElement(rows, m)
        if not gen.det():
            doc.key_fail("generators", "generator is singular")
        gens.append(gen)
    if not gens:
        doc.key_fail("generators", "need at least one generator")
    return group_closure(gens, bound)
