"""The eight acceptance criteria, each at exact equality.

Every test records a PASS/FAIL line that is printed in the terminal
summary under "acceptance criteria".
"""
import json
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from conftest import CORPUS, corpus_files, load_json
from strategies import exprs, finite_limit_exprs
from stringy import schema
from stringy.cli import main
from stringy.grp import (
    abelian_to_toric, blowup_identity_check, conjugacy_classes, mckay_table, orbifold_E,
    physicists_euler,
)
from stringy.qalg import FracPoly, limit_at_one, uv
from stringy.strata import stringy_E, stringy_euler
from stringy.subdivide import smooth_subdivide
from stringy.toric import (
    Lattice, PLFunction, SimplicialFan, box_points, box_points_dense, cone_mult, shed_volume,
    strata_from_subdivision, stringy_E_toric,
)
from test_grp import diagonal_elements
from test_toric import small_cones

LATTICES = st.sampled_from([
    Lattice.standard(2),
    Lattice([[1, 0], [Fraction(1, 2), Fraction(1, 2)]]),
    Lattice([[1, 0], [Fraction(1, 3), Fraction(2, 3)]]),
    Lattice([[Fraction(1, 5), Fraction(2, 5)], [0, 1]]),
])


def criterion(record, key, fn):
    try:
        detail = fn()
    except BaseException as exc:
        record(key, False, f"{type(exc).__name__}: {str(exc)[:200]}")
        raise
    record(key, True, detail or "")


def groups():
    out = []
    for path in corpus_files("groups"):
        text, data = load_json(path)
        out.append((path.stem, schema.parse_group(data, text)))
    return out


def diagonal_groups():
    return [(name, G) for name, G in groups() if all(g.is_diagonal() for g in G.generators)]


def toric_pairs():
    """Every fan in the corpus: toric files, both sides of each flip, and
    the toric models of the diagonal groups."""
    out = []
    for path in corpus_files("toric"):
        text, data = load_json(path)
        out.append((path.stem, schema.parse_toric(data, text)))
    for path in corpus_files("flip"):
        text, data = load_json(path)
        phi, phi_plus = schema.parse_flip(data, text)
        out += [(path.stem + "-", phi), (path.stem + "+", phi_plus)]
    for name, G in diagonal_groups():
        out.append((name + "-bridge", abelian_to_toric(G)))
    return out


def test_1_cyclic_line_exactness(record_acceptance, capsys):
    def body():
        for d in range(2, 13):
            expected = sum((uv(Fraction(k, d)) for k in range(1, d + 1)), FracPoly.zero())
            text, data = load_json(CORPUS / "strata" / f"mu{d}_line.json")
            strata = schema.parse_strata(data, text)
            E = stringy_E(strata)
            assert E.expand_series(1) == expected
            assert stringy_euler(strata) == d
            phi = PLFunction.from_given(SimplicialFan(Lattice([[Fraction(1, d)]]), [(1,)], [(0,)]), [1])
            Et = stringy_E_toric(phi)
            assert Et.expand_series(1) == expected
            assert Et == E and Et.limit_at_one() == d
            # and through the command line
            rendered = " + ".join([f"(uv)^({Fraction(k, d)})" for k in range(1, d)] + ["uv"])
            assert main(["stringy", "--json", json.dumps(data), "--max-exponent", "1"]) == 0
            out = capsys.readouterr().out
            assert f"E_st = {rendered}" in out and f"e_st = {d}" in out
            toric = json.dumps({"lattice_basis": [[f"1/{d}"]], "rays": [[1]], "cones": [[0]], "phi": [1]})
            assert main(["toric-stringy", "--json", toric, "--max-exponent", "1"]) == 0
            out = capsys.readouterr().out
            assert f"E_st = {rendered}" in out and f"e_st = {d}" in out
        return "d = 2..12, strata and toric routes, in-process and CLI"
    criterion(record_acceptance, 1, body)


def test_2_abelian_bridge(record_acceptance):
    def body():
        chosen = [(name, G) for name, G in diagonal_groups() if G.n <= 4 and G.order <= 60]
        assert len(chosen) >= 10
        for name, G in chosen:
            assert stringy_E_toric(abelian_to_toric(G)) == orbifold_E(G), name
        return f"{len(chosen)} diagonal groups"
    criterion(record_acceptance, 2, body)


def test_3_resolution_independence(record_acceptance):
    def body():
        pairs = 0
        for name, phi in toric_pairs():
            closed = stringy_E_toric(phi)
            first = smooth_subdivide(phi, "min_phi")
            got = stringy_E(strata_from_subdivision(phi, first))
            assert got == closed, name
            if phi.fan.n == 1:
                # a ray has no subdivision but itself
                continue
            second = smooth_subdivide(phi, "min_phi_reverse")
            if (second.rays, second.maximal_cones) == (first.rays, first.maximal_cones):
                second = smooth_subdivide(phi, "min_phi", extra_blowups=1)
            assert (second.rays, second.maximal_cones) != (first.rays, first.maximal_cones), name
            assert stringy_E(strata_from_subdivision(phi, second)) == got == closed, name
            pairs += 1
        return f"{pairs} pairs with two distinct resolutions; n = 1 pairs have a single subdivision"
    criterion(record_acceptance, 3, body)


def test_4_euler_equals_volume(record_acceptance):
    def body():
        fans = toric_pairs()
        for name, phi in fans:
            assert limit_at_one(stringy_E_toric(phi)) == shed_volume(phi), name
        return f"{len(fans)} fans"
    criterion(record_acceptance, 4, body)


def test_5_class_counts_and_mckay(record_acceptance):
    def body():
        gs = groups()
        for name, G in gs:
            classes = len(conjugacy_classes(G))
            assert physicists_euler(G) == classes, name
            assert orbifold_E(G).limit_at_one() == classes, name
            if all(g.is_diagonal() for g in G.generators):
                assert stringy_E_toric(abelian_to_toric(G)).limit_at_one() == classes, name
        by_name = dict(gs)
        for name, euler in (("mu2_n2", 2), ("quaternion_q8", 5), ("one_third_111", 3)):
            assert sum(mckay_table(by_name[name]).values()) == euler, name
        return f"{len(gs)} groups; McKay Euler numbers 2, 5, 3"
    criterion(record_acceptance, 5, body)


def test_6_blowup_identity(record_acceptance):
    @given(diagonal_elements())
    @settings(max_examples=200)
    def prop(g):
        ok, lhs, rhs = blowup_identity_check(g)
        assert ok, (lhs, rhs)

    def body():
        prop()
        return "200 diagonal elements, n <= 5, order <= 12"
    criterion(record_acceptance, 6, body)


def test_7_flip_monotonicity(record_acceptance):
    def body():
        text, data = load_json(CORPUS / "flip" / "flip_pair.json")
        phi, phi_plus = schema.parse_flip(data, text)
        vol, vol_plus = shed_volume(phi), shed_volume(phi_plus)
        assert vol > vol_plus
        assert limit_at_one(stringy_E_toric(phi)) > limit_at_one(stringy_E_toric(phi_plus))
        return f"vol {vol} > vol+ {vol_plus}"
    criterion(record_acceptance, 7, body)


def test_8_kernel_properties(record_acceptance):
    @given(exprs(), exprs(), exprs())
    @settings(max_examples=500)
    def ring(a, b, c):
        assert a + b == b + a and a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(finite_limit_exprs(), finite_limit_exprs())
    @settings(max_examples=500)
    def limits(a, b):
        assert limit_at_one(a * b) == limit_at_one(a) * limit_at_one(b)
        assert limit_at_one(a + b) == limit_at_one(a) + limit_at_one(b)

    @given(small_cones, LATTICES)
    @settings(max_examples=500)
    def boxes(R, lattice):
        fan = SimplicialFan(lattice, R, [(0, 1)])
        pts = box_points(fan, (0, 1))
        assert len(pts) == cone_mult(fan, (0, 1))
        assert pts == box_points_dense(fan, (0, 1))

    def body():
        ring()
        limits()
        boxes()
        return "500 cases each"
    criterion(record_acceptance, 8, body)


if __name__ == "__main__":
    import sys

    import pytest
    sys.exit(pytest.main([__file__, "-q"]))
