import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hnstrata import isocengine as ie
from hnstrata import laurent as lp
from hnstrata.errors import RepeatedSlopes, ShapeError, SingularMatrix, ZeroVector
from hnstrata.filtspace import RFiltration
from hnstrata.kottwitz import basic_class, g_class
from hnstrata.laurent import Laurent
from hnstrata.linalg import Subspace
from hnstrata.suites import random_constant_matrix, random_lattice

G = ie.LatticePresentation([["t^-1", "0"], ["1", "1"]])


def iso(slopes, lattice):
    return ie.NormedIsocrystal(tuple(slopes), lattice)


def test_lattice_construction():
    with pytest.raises(SingularMatrix):
        ie.LatticePresentation([["1", "t"], ["1", "t"]])
    assert ie.LatticePresentation.standard(2) == ie.LatticePresentation([["1", "t"], ["0", "1"]])
    assert ie.LatticePresentation.diagonal([1, 0]) != ie.LatticePresentation.standard(2)


def test_divisors_and_relative_position():
    assert ie.elementary_divisors(ie.LatticePresentation.diagonal([2, -1])) == (-1, 2)
    assert ie.elementary_divisors(G) == (-1, 0)
    assert ie.relative_position(ie.LatticePresentation.diagonal([-3, -1, -1])) == (3, 1, 1)
    assert ie.relative_position(ie.LatticePresentation.standard(3)) == (0, 0, 0)
    assert ie.relative_position(G) == (1, 0)


def test_gauge_examples():
    std = ie.LatticePresentation.standard(2)
    assert ie.gauge_valuation(std, ["1", "0"]) == 0
    assert ie.gauge_valuation(std, ["t^3", "0"]) == 3
    assert ie.gauge_valuation(G, ["1", "0"]) == 1
    with pytest.raises(ZeroVector):
        ie.gauge_valuation(G, ["0", "0"])
    with pytest.raises(ShapeError):
        ie.gauge_valuation(G, ["1"])


def test_nu_examples():
    std = ie.LatticePresentation.standard(2)
    assert ie.nu_distance(std, ie.LatticePresentation.diagonal([-1, 2])) == -1
    assert ie.nu_distance(G, G) == 0


def test_sub_degree_examples():
    D = iso((0, 2), ie.LatticePresentation.standard(2))
    assert [ie.sub_degree(D, S) for S in ([0], [1], [0, 1])] == [0, -2, -2]
    E = iso((0, 1), G)
    assert ie.lattice_degrees(E) == [0, 1, -1, 0]
    assert ie.degree(E) == -sum(ie.elementary_divisors(G)) - 1


def test_hn_examples():
    hn = ie.hn_filtration(iso((0, 2), ie.LatticePresentation.standard(2)))
    assert hn.chain_sets() == [[1], [1, 2]] and hn.v == (0, -2)
    assert ie.hn_class(iso((0, 2), ie.LatticePresentation.standard(2))) == g_class([2, 0])
    hn = ie.hn_filtration(iso((0, 1), G))
    assert hn.chain_sets() == [[1], [1, 2]] and hn.v == (1, -1)
    semi = ie.hn_filtration(iso((1, 0), ie.LatticePresentation.diagonal([0, 1])))
    assert len(semi.chain) == 1 and semi.v == (-1, -1)
    assert ie.hn_class(iso((1, 0), ie.LatticePresentation.diagonal([0, 1]))) == basic_class(2, 2)
    with pytest.raises(RepeatedSlopes):
        ie.hn_filtration(iso((0, 0), G))


def test_constructions():
    D = ie.tensor(iso((0, 1), ie.LatticePresentation.standard(2)),
                  iso((0, 5), ie.LatticePresentation.standard(2)))
    assert D.slopes == (0, 5, 1, 6)
    assert D.lattice == ie.LatticePresentation.standard(4)
    dual = ie.dual_lattice(ie.LatticePresentation.diagonal([2, -1]))
    assert ie.elementary_divisors(dual) == (-2, 1)


def test_residue_examples():
    assert ie.residue_filtration(ie.LatticePresentation.diagonal([-2, 0, -1])) == \
        RFiltration.coordinate([2, 0, 1])
    f = ie.residue_filtration(G)
    assert f.jumps == (1, 0) and f.spaces[0] == Subspace.span([(1, 0)], 2)
    assert ie.residue_filtration(ie.LatticePresentation.standard(3)) == RFiltration.trivial(3)


def test_filtered_examples():
    D = ie.FilteredIsocrystal((0, 2), RFiltration.trivial(2))
    assert ie.filtered_hn(D).v == (0, -2)
    with pytest.raises(RepeatedSlopes):
        ie.filtered_hn(ie.FilteredIsocrystal((0, 0), RFiltration.coordinate([1, 0])))


def test_classical_lattice_examples():
    assert ie.classical_lattice([[1, 0], [0, 1]], [2, -1]) == ie.LatticePresentation.diagonal([-2, 1])
    g = ie.classical_lattice([[0, 1], [1, 0]], [1, 0])
    assert ie.elementary_divisors(g) == (-1, 0)
    with pytest.raises(ShapeError):
        ie.classical_lattice([[Laurent.monomial(1), 0], [0, 1]], [0, 0])


def test_json_round_trip():
    D = iso((0, 1), G)
    assert ie.NormedIsocrystal.from_json(D.to_json()).lattice == G
    with pytest.raises(ShapeError):
        ie.NormedIsocrystal.from_json({"n": 3, "matrix": [["1"]], "slopes": [0]})
    with pytest.raises(ShapeError):
        ie.NormedIsocrystal.from_json({"matrix": [["1"]], "slopes": [0.5]})


def hull_slopes(n, deg):
    """Upper concave hull of the best degree at each rank, expanded to a slope vector."""
    best = [max(deg[m] for m in range(1 << n) if bin(m).count("1") == r) for r in range(n + 1)]
    pts, r = [(0, best[0])], 0
    while r < n:
        s, nxt = max((F(best[k] - best[r], k - r), k) for k in range(r + 1, n + 1))
        pts.append((nxt, best[nxt]))
        r = nxt
    out = []
    for (r0, y0), (r1, y1) in zip(pts, pts[1:]):
        out += [F(y1 - y0, r1 - r0)] * (r1 - r0)
    return tuple(out)


lattice_seeds = st.integers(0, 10**6)


@settings(max_examples=60, deadline=None)
@given(lattice_seeds)
def test_engine_against_oracles(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    g = random_lattice(rng, n, 3)
    D = iso(rng.sample(range(-3, 4), n), g)
    assert ie.elementary_divisors(g) == ie.elementary_divisors_by_minors(g)
    for S in range(1 << n):
        assert ie.sub_degree(D, S) == ie.sub_degree_by_minors(D, S)
    hn = ie.hn_filtration(D)
    assert hn.v == hull_slopes(n, ie.lattice_degrees(D))
    v = [Laurent(rng.randint(-3, 3), [rng.choice((1, -1))]) for _ in range(n)]
    assert ie.gauge_valuation(g, v) == ie.gauge_valuation_by_smith(g, v)
    assert ie.nu_distance(g, ie.LatticePresentation.standard(n)) == g.det_valuation


def apply(x, f):
    """x . f for a constant matrix x acting on column vectors."""
    n = f.n
    act = lambda v: tuple(sum(x[i][j] * v[j] for j in range(n)) for i in range(n))  # noqa: E731
    return RFiltration(n, f.jumps, tuple(Subspace.span([act(v) for v in s.basis], n)
                                         for s in f.spaces))


@settings(max_examples=40, deadline=None)
@given(lattice_seeds, st.integers(-2, 2))
def test_residue_filtration_transformations(seed, k):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    g = random_lattice(rng, n, 2)
    f = ie.residue_filtration(g)
    # translation: t^k Xi shifts every jump by -k
    shifted = ie.LatticePresentation(lp.scalar_mul(Laurent.monomial(k), g.matrix))
    assert ie.residue_filtration(shifted) == RFiltration(n, tuple(a - k for a in f.jumps), f.spaces)
    # constant change of coordinates moves the filtration along
    x = random_constant_matrix(rng, n)
    moved = ie.LatticePresentation(lp.mat_mul(lp.as_matrix(x), g.matrix))
    assert ie.residue_filtration(moved) == apply(x, f)
    # a change of basis inside the lattice changes nothing
    h = lp.mat_mul(lp.as_matrix(random_constant_matrix(rng, n)),
                   lp.as_matrix([[Laurent.monomial(1) if j > i else (1 if i == j else 0)
                                  for j in range(n)] for i in range(n)]))
    assert ie.residue_filtration(ie.LatticePresentation(lp.mat_mul(g.matrix, h))) == f


@settings(max_examples=40, deadline=None)
@given(lattice_seeds)
def test_duality(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    D = iso(rng.sample(range(-3, 4), n), random_lattice(rng, n, 2))
    dual = ie.dual(D)
    assert ie.relative_position(dual.lattice) == tuple(-x for x in
                                                       reversed(ie.relative_position(D.lattice)))
    assert ie.dual_lattice(dual.lattice) == D.lattice
    assert ie.hn_filtration(dual).v == tuple(-x for x in reversed(ie.hn_filtration(D).v))
