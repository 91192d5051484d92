"""Normed isocrystals over K = k((t)) with slope-diagonal Frobenius and a gauge norm.

The isocrystal is Q^n with pairwise distinct integer slopes on the
coordinate lines, so its subisocrystals are the coordinate spans W_S.  The
norm is the gauge norm of a lattice Xi = g k[[t]]^n.  Coordinate subsets are
0-based bitmasks internally; reports print them 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from . import dvr
from . import laurent as lp
from . import rootdata as rd
from .errors import RepeatedSlopes, ShapeError, SingularMatrix, ZeroVector
from .filtspace import RFiltration, chain_filtration, restrict_to_coordinates
from .kottwitz import IsocrystalClass, hn_index
from .laurent import Laurent, Matrix
from .linalg import Subspace
from .rational import fmt_vec, q

Mask = int


def mask_of(S: Iterable[int]) -> Mask:
    m = 0
    for i in S:
        m |= 1 << i
    return m


def members(mask: Mask, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if mask >> i & 1)


def popcount(mask: Mask) -> int:
    return bin(mask).count("1")


class LatticePresentation:
    """The lattice spanned over k[[t]] by the columns of an invertible Laurent matrix."""

    def __init__(self, matrix: Sequence[Sequence], var: str = "t") -> None:
        self.matrix: Matrix = lp.as_matrix(matrix, var)
        self.var = var
        if self.det.is_zero():
            raise SingularMatrix("lattice matrix is singular")

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def standard(cls, n: int) -> "LatticePresentation":
        return cls(lp.identity(n))

    @classmethod
    def diagonal(cls, exps: Sequence[int]) -> "LatticePresentation":
        return cls(lp.diag_monomials(exps))

    @cached_property
    def det(self) -> Laurent:
        return lp.det(self.matrix)

    @property
    def det_valuation(self) -> int:
        return self.det.valuation()

    @cached_property
    def smith(self) -> dvr.SmithData:
        return dvr.smith(dvr.integral_form(self.matrix))

    @cached_property
    def subsets(self) -> dvr.SubsetTable:
        return dvr.subset_table(self.matrix)

    def to_json(self) -> dict:
        return {"n": self.n, "var": self.var,
                "matrix": lp.matrix_to_strings(self.matrix, self.var)}

    def __eq__(self, other: object) -> bool:
        """Equality as lattices: mutual containment of generators."""
        if not isinstance(other, LatticePresentation):
            return NotImplemented
        if self.n != other.n or self.det_valuation != other.det_valuation:
            return False
        return all(gauge_valuation(self, col) >= 0 for col in lp.transpose(other.matrix))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"LatticePresentation({lp.matrix_to_strings(self.matrix, self.var)})"


def elementary_divisors(g: LatticePresentation) -> tuple[int, ...]:
    """Weakly increasing d_i with Xi = U diag(t^d) k[[t]]^n, U in GL_n(k[[t]])."""
    return g.smith.divisors


def elementary_divisors_by_minors(g: LatticePresentation) -> tuple[int, ...]:
    """Determinantal divisors: d_k = v_k - v_{k-1}, v_k the least valuation of k x k minors."""
    n = g.n
    v = [0]
    for k in range(1, n + 1):
        vals = [m.val for R in combinations(range(n), k) for C in combinations(range(n), k)
                for m in (lp.minor(g.matrix, R, C),) if not m.is_zero()]
        v.append(min(vals))
    return tuple(sorted(v[k] - v[k - 1] for k in range(1, n + 1)))


def relative_position(g: LatticePresentation) -> rd.Coweight:
    """Dominant mu with Xi in the orbit of mu(t)^-1 k[[t]]^n."""
    return tuple(sorted((Fraction(-d) for d in elementary_divisors(g)), reverse=True))


def gauge_valuation(g: LatticePresentation, v: Sequence) -> int:
    """max m with v in t^m Xi, from g^-1 v by Cramer's rule."""
    vec = tuple(e if isinstance(e, Laurent) else lp.parse(e, g.var) if isinstance(e, str)
                else lp._lift(e) for e in v)
    if len(vec) != g.n:
        raise ShapeError("vector length does not match the lattice rank")
    if all(e.is_zero() for e in vec):
        raise ZeroVector("gauge norm of the zero vector")
    vals = []
    for i in range(g.n):
        replaced = [list(row) for row in g.matrix]
        for r in range(g.n):
            replaced[r][i] = vec[r]
        d = lp.det(replaced)
        if not d.is_zero():
            vals.append(d.val)
    return min(vals) - g.det_valuation


def gauge_valuation_by_smith(g: LatticePresentation, v: Sequence[Laurent]) -> int:
    """Oracle: v in t^m Xi iff adjoining t^-m v leaves the divisor sum unchanged."""
    if all(e.is_zero() for e in v):
        raise ZeroVector("gauge norm of the zero vector")
    total = sum(elementary_divisors(g))

    def inside(m: int) -> bool:
        aug = tuple(tuple(row) + (v[i].shift(-m),) for i, row in enumerate(g.matrix))
        return sum(dvr.smith(dvr.integral_form(aug)).divisors) == total

    # valuations of g^-1 v are bounded by entry and divisor ranges
    lo = min(e.val for e in v if not e.is_zero()) - max(elementary_divisors(g))
    m = lo
    assert inside(m)
    while inside(m + 1):
        m += 1
    return m


def nu_distance(a: LatticePresentation, b: LatticePresentation) -> int:
    """nu(alpha_a, alpha_b), computed from an adapted basis and from determinants."""
    via_basis = nu_distance_adapted(a, b)
    via_det = a.det_valuation - b.det_valuation
    assert via_basis == via_det, f"nu paths disagree: {via_basis} != {via_det}"
    return via_det


def nu_distance_adapted(a: LatticePresentation, b: LatticePresentation) -> int:
    """-(sum of the divisors of a^-1 b), with a^-1 = adj(a) / det(a)."""
    if a.n != b.n:
        raise ShapeError("lattices of different rank")
    rel = lp.mat_mul(lp.adjugate(a.matrix), b.matrix)
    divs = dvr.smith(dvr.integral_form(rel)).divisors
    return -sum(d - a.det_valuation for d in divs)


def _distinct(slopes: Sequence[int]) -> bool:
    return len(set(slopes)) == len(slopes)


@dataclass(frozen=True, eq=False)
class NormedIsocrystal:
    slopes: tuple[int, ...]
    lattice: LatticePresentation

    def __post_init__(self) -> None:
        object.__setattr__(self, "slopes", tuple(int(s) for s in self.slopes))
        if len(self.slopes) != self.lattice.n:
            raise ShapeError("one slope per coordinate")

    @property
    def n(self) -> int:
        return len(self.slopes)

    @property
    def dim(self) -> int:
        """v(det phi): the total slope."""
        return sum(self.slopes)

    @property
    def multiplicity_free(self) -> bool:
        return _distinct(self.slopes)

    def to_json(self) -> dict:
        out = self.lattice.to_json()
        out["slopes"] = list(self.slopes)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "NormedIsocrystal":
        try:
            var = obj.get("var", "t")
            lattice = LatticePresentation(obj["matrix"], var)
            slopes = tuple(obj["slopes"])
            if "n" in obj and int(obj["n"]) != lattice.n:
                raise ShapeError("declared n does not match the matrix")
        except (KeyError, TypeError) as exc:
            raise ShapeError(f"malformed lattice JSON: {exc}") from exc
        if any(isinstance(s, bool) or not isinstance(s, int) for s in slopes):
            raise ShapeError("slopes must be integers")
        return cls(slopes, lattice)


def _subset_list(S: Iterable[int] | Mask) -> Mask:
    return S if isinstance(S, int) else mask_of(S)


def sub_degree(D: NormedIsocrystal, S: Iterable[int] | Mask) -> int:
    """deg of W_S with the induced norm: -(divisor sum of Xi & W_S) - sum of slopes on S."""
    mask = _subset_list(S)
    if not mask:
        return 0
    slopes = sum(D.slopes[i] for i in members(mask, D.n))
    return -D.lattice.subsets.inter(mask) - slopes


def sub_degree_by_minors(D: NormedIsocrystal, S: Iterable[int] | Mask) -> int:
    """Oracle through the exact sequence Xi & W_S -> Xi -> projection to the other coordinates."""
    mask = _subset_list(S)
    if not mask:
        return 0
    n = D.n
    rest = [i for i in range(n) if not mask >> i & 1]
    proj = 0
    if rest:
        proj = min(m.val for C in combinations(range(n), len(rest))
                   for m in (lp.minor(D.lattice.matrix, rest, C),) if not m.is_zero())
    inter = D.lattice.det_valuation - proj
    return -inter - sum(D.slopes[i] for i in members(mask, n))


def degree(D: NormedIsocrystal) -> int:
    return sub_degree(D, (1 << D.n) - 1)


def lattice_degrees(D: NormedIsocrystal) -> list[int]:
    return [sub_degree(D, m) for m in range(1 << D.n)]


@dataclass(frozen=True)
class HNResult:
    """HN chain of coordinate subsets (bitmasks) and the slope vector v, decreasing."""

    n: int
    chain: tuple[Mask, ...]
    slopes: tuple[Fraction, ...]
    v: tuple[Fraction, ...]

    def chain_sets(self, one_based: bool = True) -> list[list[int]]:
        shift = 1 if one_based else 0
        return [[i + shift for i in members(m, self.n)] for m in self.chain]

    def filtration(self) -> RFiltration:
        """The HN filtration on Q^n: V^{s_i} = W_{chain[i]}."""
        spaces = [Subspace.coordinate(members(m, self.n), self.n) for m in self.chain]
        return chain_filtration(self.n, spaces, self.slopes)

    def to_json(self) -> dict:
        return {"chain": self.chain_sets(), "slopes": fmt_vec(self.slopes), "v": fmt_vec(self.v)}


def hn_from_degrees(n: int, deg: Sequence[int | Fraction]) -> HNResult:
    """Greedy HN over coordinate subsets from a degree table indexed by bitmask.

    Each step takes the superset T of the current B maximizing
    (deg T - deg B) / (|T| - |B|); among maximizers the largest T, which must be unique.
    """
    full = (1 << n) - 1
    B = 0
    chain, slopes, v = [], [], []
    while B != full:
        free = full ^ B
        best: Optional[Fraction] = None
        best_sets: list[Mask] = []
        sub = free
        while sub:
            T = B | sub
            s = Fraction(deg[T] - deg[B], popcount(sub))
            if best is None or s > best:
                best, best_sets = s, [T]
            elif s == best:
                best_sets.append(T)
            sub = (sub - 1) & free
        size = max(popcount(T) for T in best_sets)
        top = [T for T in best_sets if popcount(T) == size]
        assert len(top) == 1, "maximal destabilizing subobject is not unique"
        T = top[0]
        chain.append(T)
        slopes.append(best)
        v.extend([best] * (popcount(T) - popcount(B)))
        B = T
    assert all(a > b for a, b in zip(slopes, slopes[1:])), "HN slopes not decreasing"
    assert sum(v) == deg[full] - deg[0]
    return HNResult(n, tuple(chain), tuple(slopes), tuple(v))


def _require_distinct(slopes: Sequence[int]) -> None:
    if not _distinct(slopes):
        raise RepeatedSlopes(f"slopes {list(slopes)} are not pairwise distinct")


def hn_filtration(D: NormedIsocrystal) -> HNResult:
    _require_distinct(D.slopes)
    return hn_from_degrees(D.n, lattice_degrees(D))


def hn_class(D: NormedIsocrystal) -> IsocrystalClass:
    hn = hn_filtration(D)
    return hn_index(hn.v, D.dim, relative_position(D.lattice))


def tensor(D1: NormedIsocrystal, D2: NormedIsocrystal) -> NormedIsocrystal:
    """Slopes s_i + t_j and the Kronecker lattice, coordinate (i, j) at i * n2 + j.

    The result is returned even when slopes repeat; HN on it then raises RepeatedSlopes.
    """
    slopes = tuple(a + b for a in D1.slopes for b in D2.slopes)
    return NormedIsocrystal(slopes, LatticePresentation(lp.kron(D1.lattice.matrix,
                                                                D2.lattice.matrix)))


def dsum(D1: NormedIsocrystal, D2: NormedIsocrystal) -> NormedIsocrystal:
    return NormedIsocrystal(D1.slopes + D2.slopes,
                            LatticePresentation(lp.block_diag(D1.lattice.matrix,
                                                              D2.lattice.matrix)))


def dual_lattice(g: LatticePresentation) -> LatticePresentation:
    """Inverse transpose, up to the unit part of det: t^-v(det) adj(g)^T."""
    adj_t = lp.transpose(lp.adjugate(g.matrix))
    return LatticePresentation(lp.scalar_mul(Laurent.monomial(-g.det_valuation), adj_t), g.var)


def dual(D: NormedIsocrystal) -> NormedIsocrystal:
    return NormedIsocrystal(tuple(-s for s in D.slopes), dual_lattice(D.lattice))


def residue_filtration(g: LatticePresentation) -> RFiltration:
    """F^i = ((t^i Xi) & Xi_0 + t Xi_0) / t Xi_0, spanned by residues of an adapted basis."""
    sd = g.smith
    basis = list(sd.residues)
    weights = [-v for _, v in sd.pivots]
    f = RFiltration.from_basis(basis, weights)
    assert tuple(sorted(f.weights(), reverse=True)) == relative_position(g)
    return f


@dataclass(frozen=True)
class FilteredIsocrystal:
    slopes: tuple[int, ...]
    filtration: RFiltration

    def __post_init__(self) -> None:
        object.__setattr__(self, "slopes", tuple(int(s) for s in self.slopes))
        if len(self.slopes) != self.filtration.n:
            raise ShapeError("one slope per coordinate")

    @property
    def n(self) -> int:
        return len(self.slopes)


def filtered_sub_degree(D: FilteredIsocrystal, S: Iterable[int] | Mask) -> Fraction:
    """deg(Fil restricted to W_S) - sum of slopes on S."""
    mask = _subset_list(S)
    if not mask:
        return Fraction(0)
    coords = members(mask, D.n)
    return restrict_to_coordinates(D.filtration, coords).degree() - sum(D.slopes[i] for i in coords)


def filtered_degrees(D: FilteredIsocrystal) -> list[Fraction]:
    return [filtered_sub_degree(D, m) for m in range(1 << D.n)]


def filtered_hn(D: FilteredIsocrystal) -> HNResult:
    _require_distinct(D.slopes)
    return hn_from_degrees(D.n, filtered_degrees(D))


def filtered_hn_class(D: FilteredIsocrystal, mu: Sequence[Fraction]) -> IsocrystalClass:
    return hn_index(filtered_hn(D).v, sum(D.slopes), mu)


def residue_isocrystal(D: NormedIsocrystal) -> FilteredIsocrystal:
    return FilteredIsocrystal(D.slopes, residue_filtration(D.lattice))


def classical_lattice(x: Sequence[Sequence], mu: Sequence[int]) -> LatticePresentation:
    """x * diag(t^-mu) * k[[t]]^n for a constant invertible x."""
    xm = tuple(tuple(lp.Laurent.const(q(e)) if not isinstance(e, Laurent) else e for e in row)
               for row in x)
    if any(not e.is_zero() and (e.val != 0 or len(e.coeffs) != 1) for row in xm for e in row):
        raise ShapeError("x must have constant entries")
    if lp.det(xm).is_zero():
        raise SingularMatrix("x is singular")
    return LatticePresentation(lp.mat_mul(xm, lp.diag_monomials([-int(m) for m in mu])))


def coordinate_mask(space: Subspace) -> Mask:
    """Bitmask of a coordinate subspace; raises if the subspace is not coordinate."""
    mask = 0
    for row in space.basis:
        nz = [i for i, x in enumerate(row) if x]
        if len(nz) != 1:
            raise ShapeError("not a coordinate subspace")
        mask |= 1 << nz[0]
    return mask


def degree_map(deg: Sequence[int | Fraction]) -> Callable[[Subspace], Fraction]:
    """Degree of coordinate subspaces, for filtspace.energy."""
    return lambda space: Fraction(deg[coordinate_mask(space)])
