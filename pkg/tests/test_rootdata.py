from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hnstrata import rootdata as rd
from hnstrata.errors import ParseError, ShapeError


def cw(*xs):
    return tuple(F(x) for x in xs)


small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def vec_and_levi(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    v = tuple(draw(st.lists(small, min_size=n, max_size=n)))
    M = draw(st.sampled_from(rd.compositions(n)))
    return v, M


def test_levi_shapes():
    assert rd.levi_G(3) == (3,)
    assert rd.levi_T(3) == (1, 1, 1)
    assert rd.compositions(3)[0] == (3,)
    assert len(rd.compositions(4)) == 8
    with pytest.raises(ShapeError):
        rd.levi((2, 2), 3)


def test_dominance_examples():
    assert rd.dominance_leq(cw(2, 2, 1), cw(3, 1, 1))
    assert not rd.dominance_leq(cw(3, 1, 1), cw(2, 2, 1))
    assert not rd.dominance_leq(cw(1, 1, 1), cw(3, 1, 0))  # sums differ
    # blockwise: (1 | 3, 1) against (1 | 2, 2)
    assert rd.dominance_leq(cw(1, 2, 2), cw(1, 3, 1), (1, 2))
    assert not rd.dominance_leq(cw(2, 2, 1), cw(1, 3, 1), (1, 2))


def test_orbits_and_pairings():
    assert rd.weyl_orbit(cw(1, 0, 0)) == tuple(sorted(
        {cw(1, 0, 0), cw(0, 1, 0), cw(0, 0, 1)}, reverse=True))
    assert rd.orbit_size(cw(2, 1, 1, 0)) == 12
    assert rd.rho(3) == cw(1, 0, -1)
    assert rd.half_sum((1, 2)) == cw(0, F(1, 2), F(-1, 2))
    assert rd.pair(cw(3, 1, 1), rd.rho(3)) == 2
    assert rd.av_levi((1, 2), cw(3, 2, 0)) == cw(3, 1, 1)
    assert rd.minus_w0(cw(3, 1, 0)) == cw(0, -1, -3)
    assert rd.is_minuscule(cw(1, 1, 0)) and not rd.is_minuscule(cw(2, 0, 0))


def test_group_parse():
    assert rd.GL.parse("gl4").n == 4
    for bad in ("SL3", "GL", "GL0", "GLx"):
        with pytest.raises(ParseError):
            rd.GL.parse(bad)


@given(vec_and_levi())
def test_av_levi_idempotent_and_sum_preserving(data):
    v, M = data
    a = rd.av_levi(M, v)
    assert rd.av_levi(M, a) == a
    assert rd.block_sums(a, M) == rd.block_sums(v, M)


@given(vec_and_levi(max_n=4))
def test_dominance_is_a_partial_order_on_the_orbit(data):
    v, M = data
    orbit = [w for w in rd.weyl_orbit(v) if rd.is_dominant(w, M)]
    for a in orbit:
        assert rd.dominance_leq(a, a, M)
        for b in orbit:
            if rd.dominance_leq(a, b, M) and rd.dominance_leq(b, a, M):
                assert a == b
            for c in orbit:
                if rd.dominance_leq(a, b, M) and rd.dominance_leq(b, c, M):
                    assert rd.dominance_leq(a, c, M)


@given(vec_and_levi())
def test_orbit_members_are_below_the_dominant_representative(data):
    v, _ = data
    dom = rd.dominant_rep(v)
    assert rd.is_dominant(dom)
    assert len(rd.weyl_orbit(v)) == rd.orbit_size(v)
    for w in rd.weyl_orbit(v):
        assert rd.dominant_rep(w) == dom


@given(vec_and_levi())
def test_centering_and_opposite(data):
    v, _ = data
    assert sum(rd.centered(v)) == 0
    assert rd.minus_w0(rd.minus_w0(v)) == v
    assert rd.is_dominant(rd.minus_w0(rd.dominant_rep(v)))
