import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from hnstrata import dvr
from hnstrata import laurent as lp
from hnstrata.errors import ParseError
from hnstrata.laurent import Laurent, parse


def minors_divisors(g):
    """Determinantal-divisor oracle for the elementary divisors."""
    n = len(g)
    v = [0]
    for k in range(1, n + 1):
        v.append(min(m.val for R in combinations(range(n), k) for C in combinations(range(n), k)
                     for m in (lp.minor(g, R, C),) if not m.is_zero()))
    return tuple(sorted(v[k] - v[k - 1] for k in range(1, n + 1)))


def projection_sum(g, rows):
    if not rows:
        return 0
    return min(m.val for C in combinations(range(len(g)), len(rows))
               for m in (lp.minor(g, rows, C),) if not m.is_zero())


def random_matrix(rng, n, E):
    while True:
        g = lp.as_matrix([[Laurent(rng.randint(-E, E),
                                   [rng.randint(-2, 2) for _ in range(rng.randint(0, 2))])
                           for _ in range(n)] for _ in range(n)])
        if not lp.det(g).is_zero():
            return g


def test_parse_and_print():
    assert parse("t^-1") == Laurent.monomial(-1)
    assert parse("2t") == Laurent.monomial(1, 2)
    assert parse("-t^-2 - 1") == Laurent(-2, [-1, 0, -1])
    assert parse("1/2*t^3 + 3") == Laurent(0, [3, 0, 0, F(1, 2)])
    assert parse("0").is_zero()
    for p in ("-2*t^-1 + 2", "t^-3", "-t", "5/3*t^2 - t"):
        assert parse(parse(p).to_str()) == parse(p)
    for bad in ("t^", "x", "2**t", "", "t^1.5"):
        with pytest.raises(ParseError):
            parse(bad)


laurents = st.builds(Laurent, st.integers(-4, 4),
                     st.lists(st.fractions(-3, 3, max_denominator=2), max_size=3))


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()
    if not b.is_zero():
        assert (a * b).exact_div(b) == a
        if not a.is_zero():
            assert (a * b).valuation() == a.valuation() + b.valuation()


def test_det_and_adjugate():
    g = lp.as_matrix([["t^-1", "0"], ["1", "1"]])
    assert lp.det(g) == Laurent.monomial(-1)
    prod = lp.mat_mul(g, lp.adjugate(g))
    assert prod == lp.scalar_mul(lp.det(g), lp.identity(2))


def test_divisor_examples():
    assert dvr.elementary_divisors(lp.as_matrix([["t^2", "0"], ["0", "t^-1"]])) == (-1, 2)
    assert dvr.elementary_divisors(lp.as_matrix([["1", "1"], ["t", "0"]])) == (0, 1)
    assert dvr.elementary_divisors(lp.identity(3)) == (0, 0, 0)


def test_rectangular_generators():
    # an extra generator t^-1 e1 enlarges the lattice
    g = lp.as_matrix([["1", "0"], ["0", "1"]])
    aug = tuple(tuple(row) + (e,) for row, e in zip(g, (Laurent.monomial(-1), Laurent())))
    assert dvr.smith(dvr.integral_form(aug)).divisors == (-1, 0)


@pytest.mark.parametrize("seed", range(4))
def test_elimination_matches_minors(seed):
    rng = random.Random(f"dvr/{seed}")
    for _ in range(25):
        n = rng.randint(1, 4)
        g = random_matrix(rng, n, 3)
        assert dvr.elementary_divisors(g) == minors_divisors(g)
        table = dvr.subset_table(g)
        d = lp.det(g).val
        for S in range(1 << n):
            inside = [i for i in range(n) if S >> i & 1]
            outside = [i for i in range(n) if not S >> i & 1]
            assert table.intersection[S] == d - projection_sum(g, outside)
            assert table.projection[S] == projection_sum(g, inside)
            if inside:
                L = dvr.intersection_lattice(g, inside)
                assert sum(dvr.elementary_divisors(L)) == table.intersection[S]


def test_precision_doubling():
    g = lp.as_matrix([["1", "0"], ["0", "t^9"]])
    sd = dvr.smith(dvr.integral_form(g), start_precision=1)
    assert sd.divisors == (0, 9) and sd.precision >= 10
