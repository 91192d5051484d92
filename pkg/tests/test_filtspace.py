from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hnstrata import filtspace as fs
from hnstrata.errors import ShapeError
from hnstrata.linalg import QQ, Subspace, prime_field, rank, rref, unit_vectors
from hnstrata.filtspace import RFiltration


def line(v):
    return Subspace.span([v], len(v))


def two_step(L, n=2):
    return RFiltration.build(n, [(1, L), (0, Subspace.full(n))])


# ----- linear algebra -----

def test_rref_is_fully_reduced():
    # stale-row regression: every pivot column must be a unit column
    rows = rref([(-2, 2, -1), (2, -2, -1), (-2, 0, -1)], 3)
    assert rows == tuple(tuple(F(int(i == j)) for j in range(3)) for i in range(3))
    a = Subspace.span([(1, 2, 3), (0, 1, 1)], 3)
    b = Subspace.span([(1, 3, 4), (1, 1, 2)], 3)
    assert a == b


def test_subspace_operations():
    e1, e2, e3 = unit_vectors(3)
    u = Subspace.span([e1, e2], 3)
    w = Subspace.span([e2, e3], 3)
    assert (u & w) == Subspace.span([e2], 3)
    assert (u + w).dim == 3
    assert Subspace.span([e1], 3) <= u and not (w <= u)
    assert u.restrict([1, 2]) == Subspace.span([(1, 0)], 2)
    with pytest.raises(ShapeError):
        u + Subspace.full(2)


def test_prime_field_rank():
    gf2 = prime_field(2)
    rows = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
    assert rank(rows, 3, gf2) == 2
    assert rank(rows, 3, QQ) == 3


vectors = st.lists(st.integers(-2, 2), min_size=3, max_size=3).map(tuple)


@settings(max_examples=100, deadline=None)
@given(st.lists(vectors, max_size=3), st.lists(vectors, max_size=3))
def test_dimension_formula(us, ws):
    u, w = Subspace.span(us, 3), Subspace.span(ws, 3)
    assert (u + w).dim + (u & w).dim == u.dim + w.dim
    assert (u & w) <= u and (u & w) <= w


# ----- filtrations -----

def test_pairing_examples():
    L, L2 = line((1, 0)), line((0, 1))
    assert fs.pairing(two_step(L), two_step(L)) == 1
    assert fs.pairing(two_step(L), two_step(L2)) == 0
    assert fs.distance_squared(two_step(L), two_step(L2)) == 2
    assert fs.distance_squared(two_step(L), two_step(L)) == 0
    f = RFiltration.coordinate([3, -1, F(1, 2)])
    assert fs.pairing(f, f) == F(9) + 1 + F(1, 4)


def test_common_basis_transverse_lines():
    L, L2 = line((1, 1)), line((1, -1))
    basis, wf, wg = fs.common_basis(two_step(L), two_step(L2))
    assert {(tuple(b), a, c) for b, a, c in zip(basis, wf, wg)} == {
        ((F(1), F(1)), F(1), F(0)), ((F(1), F(-1)), F(0), F(1))}


def test_degree_examples():
    assert RFiltration.trivial(3).degree() == 0
    assert two_step(line((1, 0))).degree() == 1


def test_tensor_example():
    f = RFiltration.coordinate([1, 0])
    g = RFiltration.coordinate([10, 0])
    t = fs.tensor(f, g)
    assert t.jumps == (F(11), F(10), F(1), F(0))
    assert t.graded_dims() == {F(11): 1, F(10): 1, F(1): 1, F(0): 1}


def test_sum_of_transverse_lines():
    s = fs.filtration_sum(two_step(line((1, 0))), two_step(line((0, 1))))
    assert s.graded_dims() == {F(1): 2}


def test_validation():
    with pytest.raises(ShapeError):
        RFiltration(2, (F(1),), (line((1, 0)),))
    with pytest.raises(ValueError):
        fs.scale(0, RFiltration.trivial(2))


weights = st.lists(st.fractions(-3, 3, max_denominator=2), min_size=3, max_size=3)
bases = st.lists(vectors, min_size=3, max_size=3).filter(lambda b: rank(b, 3) == 3)


@st.composite
def filtrations(draw):
    return RFiltration.from_basis(draw(bases), draw(weights))


@settings(max_examples=60, deadline=None)
@given(filtrations(), filtrations())
def test_common_apartment_computes_the_pairing(f, g):
    basis, wf, wg = fs.common_basis(f, g)
    assert fs.pairing(f, g) == sum(a * b for a, b in zip(wf, wg))
    assert fs.pairing(f, g) == fs.pairing(g, f)
    assert fs.distance_squared(f, g) == sum((a - b) ** 2 for a, b in zip(wf, wg))


@settings(max_examples=40, deadline=None)
@given(filtrations(), filtrations(), filtrations())
def test_triangle_inequality(f, g, h):
    assert fs.distance(f, h) <= fs.distance(f, g) + fs.distance(g, h) + 1e-9


@settings(max_examples=60, deadline=None)
@given(bases, weights, weights, st.fractions(F(1, 3), 3, max_denominator=3))
def test_apartment_sum_and_scaling(basis, a, b, c):
    fa = RFiltration.from_basis(basis, a)
    fb = RFiltration.from_basis(basis, b)
    assert fs.filtration_sum(fa, fb) == RFiltration.from_basis(basis, [x + y for x, y in zip(a, b)])
    assert fs.scale(c, fa) == RFiltration.from_basis(basis, [c * x for x in a])
    assert fa.norm_squared() == sum(x * x for x in a)


@settings(max_examples=40, deadline=None)
@given(filtrations(), weights)
def test_dsum_and_tensor_weights(f, w):
    g = RFiltration.coordinate(w[:2])
    assert sorted(fs.dsum(f, g).weights()) == sorted(f.weights() + g.weights())
    assert sorted(fs.tensor(f, g).weights()) == sorted(x + y for x in f.weights()
                                                         for y in g.weights())
