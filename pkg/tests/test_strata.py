from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from strategies import fracpolys
from stringy.errors import NotKlt
from stringy.qalg import FracPoly, RationalExpr, e_projective, uv
from stringy.strata import (
    ClosedStrataData, StrataData, closed_from_open, mask, members, open_from_closed,
    stringy_E, stringy_euler, stringy_euler_direct, validate_klt,
)

UV1 = uv() - 1


def mu_line(d):
    return StrataData(1, [("x0", Fraction(1, d))], {0: UV1, mask([0]): 1})


def a1():
    return StrataData(2, [("E", 1)], {0: uv(2) - 1, mask([0]): uv() + 1})


def test_masks():
    assert mask([0, 2]) == 5
    assert members(5) == [0, 2]
    assert members(0) == []


class TestKlt:
    def test_accepts(self):
        validate_klt(StrataData(2, [("a", 1), ("b", 1)]))
        validate_klt(mu_line(7))

    @pytest.mark.parametrize("a", [0, -1, Fraction(-1, 2)])
    def test_rejects(self, a):
        with pytest.raises(NotKlt) as info:
            validate_klt(StrataData(1, [("ok", 1), ("bad", a)]))
        assert info.value.index == 1
        assert info.value.label == "bad"

    def test_stringy_E_checks(self):
        with pytest.raises(NotKlt):
            stringy_E(StrataData(1, [("x", 0)], {0: 1}))


class TestOpenClosed:
    def test_one_component(self):
        x, y = e_projective(2), e_projective(1)
        out = open_from_closed(ClosedStrataData(1, [("D", 1)], {0: x, 1: y}))
        assert out.open_strata == {0: x - y, 1: y}

    def test_a1(self):
        closed = ClosedStrataData(2, [("E", 1)], {0: uv(2) + uv(), 1: uv() + 1})
        out = open_from_closed(closed)
        assert out.open_strata[0] == uv(2) - 1
        assert out.open_strata == a1().open_strata

    def test_only_ambient(self):
        closed = ClosedStrataData(2, [("D", 2)], {0: e_projective(2)})
        assert open_from_closed(closed).open_strata == {0: e_projective(2)}

    def test_two_crossing_lines(self):
        # P^2 with two lines; they meet in a point
        closed = ClosedStrataData(2, [("L1", 1), ("L2", 1)],
                                  {0: e_projective(2), 1: e_projective(1), 2: e_projective(1), 3: 1})
        out = open_from_closed(closed).open_strata
        assert out == {0: uv() * UV1, 1: uv(), 2: uv(), 3: FracPoly.one()}


class TestStringyE:
    @pytest.mark.parametrize("d", range(1, 13))
    def test_mu_line(self, d):
        a = Fraction(1, d)
        assert stringy_E(mu_line(d)) == RationalExpr(UV1) + RationalExpr(UV1, [a])
        assert stringy_euler(mu_line(d)) == d

    def test_smooth(self):
        data = StrataData(2, [], {0: e_projective(2)})
        assert stringy_E(data) == e_projective(2)
        assert stringy_euler(data) == 3

    def test_a1(self):
        assert stringy_E(a1()) == uv(2) + uv()
        assert stringy_euler(a1()) == 2

    def test_blowup_of_plane_point(self):
        # blow up a point of C^2, exceptional divisor with a = 2
        # E(E°)·(uv-1)/((uv)^2-1) = (uv+1)·(uv-1)/((uv)^2-1) = 1, total (uv)^2
        assert stringy_E(StrataData(2, [("E", 2)], {0: uv(2) - 1, 1: uv() + 1})) == uv(2)

    def test_empty_strata_are_dropped(self):
        data = StrataData(1, [("x", 1)], {0: UV1, 1: 0})
        assert 1 not in data.open_strata


@given(st.lists(st.sampled_from([Fraction(1, 3), Fraction(1, 2), 1, 2, Fraction(5, 2)]), min_size=1, max_size=3),
       st.data())
def test_euler_paths_agree(logs, data):
    strata = {}
    for J in range(1 << len(logs)):
        e = data.draw(fracpolys(max_terms=2))
        if e:
            strata[J] = e
    sd = StrataData(2, [(f"D{i}", a) for i, a in enumerate(logs)], strata)
    assert stringy_E(sd).limit_at_one() == stringy_euler_direct(sd)


@given(st.integers(1, 3), st.data())
def test_open_closed_round_trip(k, data):
    strata = {}
    for J in range(1 << k):
        e = data.draw(fracpolys(max_terms=2))
        if e:
            strata[J] = e
    sd = StrataData(2, [(f"D{i}", 1) for i in range(k)], strata)
    assert open_from_closed(closed_from_open(sd)).open_strata == sd.open_strata
