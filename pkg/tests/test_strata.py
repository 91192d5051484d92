from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hnstrata import rootdata as rd
from hnstrata import strata as S
from hnstrata import weights as wt
from hnstrata.errors import EmptyStratum, KappaMismatch, NotMinuscule, ShapeError
from hnstrata.kottwitz import basic_class, g_class, g_classes, make_class

MU = (F(3), F(1), F(1))
B = g_class(["5/2", "5/2", 0])


def cw(*xs):
    return tuple(F(x) for x in xs)


def test_weak_admissibility():
    assert not S.wa_nonempty(MU, B)
    assert S.wa_nonempty(cw(1, 0), basic_class(2, 0))
    assert S.wa_nonempty(cw(1, 1, 0, 0), basic_class(4, 0))


def test_worked_example_verdicts_and_witnesses():
    half = g_class(["1/2", "1/2", -1])
    assert S.stratum_nonempty(MU, B, half) == "yes"
    ws = S.stratum_witnesses(MU, B, half)
    assert any(w.b_M == make_class((1, 2), [[0], ["5/2", "5/2"]]) and w.lam == cw(1, 3, 1)
               for w in ws)
    top = g_class(["3/2", "3/2", -3])
    assert S.stratum_nonempty(MU, B, top) == "yes"
    assert any(w.lam == cw(3, 1, 1) for w in S.stratum_witnesses(MU, B, top))
    assert S.stratum_nonempty(MU, B, g_class([2, -1, -1])) == "no"
    assert S.stratum_nonempty(MU, B, basic_class(3, 0)) == "no"


def test_classical_points():
    assert S.has_classical_points(MU, B, g_class(["1/2", "1/2", -1]))
    assert not S.has_classical_points(MU, B, g_class([1, 1, -2]))
    assert S.has_classical_points(MU, B, g_class(["3/2", "3/2", -3]))


def test_kappa_mismatch():
    wrong = basic_class(3, 1)
    assert S.stratum_nonempty(MU, B, wrong) == "no"
    with pytest.raises(KappaMismatch):
        S.stratum_nonempty(MU, B, wrong, strict=True)


def test_fiber_dim_examples():
    assert S.fiber_dim(cw(1, 1, 0, 0), cw(1, 1, 0, 0), (2, 2)) == 0
    assert S.fiber_dim(cw(1, 1, 0, 0), cw(1, 0, 1, 0), (2, 2)) == 1
    assert S.fiber_dim(MU, cw(1, 3, 1), (1, 2)) == 2


def test_dimension_examples():
    mu, b = cw(1, 1, 0, 0), basic_class(4, 0)
    assert S.stratum_dim(mu, b, basic_class(4, -2)) == 4
    assert S.stratum_dim(mu, b, g_class([0, 0, -1, -1])) == 0
    assert S.stratum_dim(cw(1, 0), basic_class(2, 0), g_class([0, -1])) == 0
    forms = S.dimension_forms(mu, b, g_class([0, 0, -1, -1]))
    assert forms.via_levi == forms.via_opposite == forms.via_basic == 0
    with pytest.raises(NotMinuscule):
        S.stratum_dim(MU, B, g_class(["1/2", "1/2", -1]))
    with pytest.raises(EmptyStratum):
        S.stratum_dim(cw(1, 0), basic_class(2, 0), g_class([1, -2]))


def test_enumerate_worked_example():
    rep = S.enumerate_strata(MU, B)
    got = {r.b_prime.nu: (r.nonempty, r.classical) for r in rep.strata}
    assert got == {cw(F(1, 2), F(1, 2), -1): ("yes", True),
                   cw(1, 1, -2): ("yes", False),
                   cw(F(3, 2), F(3, 2), -3): ("yes", True)}
    assert any("[0,0,0]" in note and "partial sum 2: 2/3 < 5/3" in note for note in rep.notes)
    js = rep.to_json()
    assert js["kappa_b"] == 5 and len(js["strata"]) == 3


def test_enumerate_small_groups():
    rep = S.enumerate_strata(cw(1, 0), basic_class(2, 0))
    assert {r.b_prime.nu: r.dimension for r in rep.strata} == {
        cw(F(-1, 2), F(-1, 2)): 1, cw(0, -1): 0}
    rep = S.enumerate_strata(cw(1, 1, 0, 0), basic_class(4, 0))
    dims = {r.b_prime.nu: r.dimension for r in rep.strata}
    assert dims[tuple(F(-1, 2) for _ in range(4))] == 4
    assert dims[cw(0, 0, -1, -1)] == 0
    assert sorted(dims.values(), reverse=True) == [4, 2, 2, 1, 0]


def test_input_checks():
    with pytest.raises(ShapeError):
        S.enumerate_strata(cw(1, 0, 0), basic_class(2, 0))
    with pytest.raises(ShapeError):
        S.enumerate_strata(cw(0, 1), basic_class(2, 0))


def brute_strata(mu, b):
    """Every G-class with the right kappa inside the a priori slope box, kept if not 'no'."""
    kappa = b.kappa_total - int(sum(mu))
    lo, hi = min(b.nu) - max(mu), max(b.nu) - min(mu)
    n = len(mu)
    return {c.nu: S.stratum_nonempty(mu, b, c) for c in g_classes(n, lo, hi)
            if c.kappa_total == kappa and S.stratum_nonempty(mu, b, c) != "no"}


@st.composite
def small_case(draw):
    n = draw(st.integers(1, 3))
    mu = tuple(sorted(draw(st.lists(st.integers(-1, 2), min_size=n, max_size=n)), reverse=True))
    b = draw(st.sampled_from(g_classes(n, -1, 2, max_denominator=3)))
    return cw(*mu), b


@settings(max_examples=60, deadline=None)
@given(small_case())
def test_enumeration_matches_exhaustive_search(case):
    mu, b = case
    rep = S.enumerate_strata(mu, b)
    assert {r.b_prime.nu: r.nonempty for r in rep.strata} == brute_strata(mu, b)
    for r in rep.strata:
        assert r.b_prime.kappa_total == b.kappa_total - sum(mu)
        if r.nonempty == "yes":
            assert any(w.certified for w in r.witnesses)
        if r.classical:
            assert r.nonempty == "yes"
    assert any(r.b_prime.is_basic() for r in rep.strata) == S.wa_nonempty(mu, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 4), st.integers(-1, 0), st.integers(-4, 4))
def test_minuscule_dimensions(n, k, a, kappa):
    k = min(k, n)
    mu = cw(*([a + 1] * k + [a] * (n - k)))
    b = basic_class(n, kappa)
    rep = S.enumerate_strata(mu, b)
    for r in rep.strata:
        forms = S.dimension_forms(mu, b, r.b_prime)
        assert forms.value == r.dimension >= 0
        assert r.classical
        if r.b_prime.is_basic():
            assert r.dimension == rd.pair(mu, tuple(2 * x for x in rd.rho(n)))


@settings(max_examples=60, deadline=None)
@given(small_case())
def test_upper_only_witnesses_never_occur(case):
    # a witness lam lies below a maximal member of its theta-fiber, which is again a witness
    mu, b = case
    for r in S.enumerate_strata(mu, b).strata:
        assert r.nonempty != "unknown"
        M = r.levi
        lower = wt.s_m_mu(mu, M).lower
        for w in r.witnesses:
            assert any(wt.theta(x, M) == wt.theta(w.lam, M) and rd.dominance_leq(w.lam, x, M)
                       for x in lower)
