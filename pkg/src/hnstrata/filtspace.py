"""Separated exhaustive decreasing R-filtrations of k^n with rational jumps.

A filtration is stored by its jumps a_1 > ... > a_k and the nested spaces
V^{a_1} < ... < V^{a_k} = V; every graded piece gr^{a_i} is non-zero.
V^a is V^{a_i} for the smallest jump a_i >= a, and 0 above a_1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import ShapeError
from .linalg import QQ, Field, Subspace, kron_vec, unit_vectors
from .rational import RationalLike, fmt, q


@dataclass(frozen=True)
class RFiltration:
    n: int
    jumps: tuple[Fraction, ...]
    spaces: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        if len(self.jumps) != len(self.spaces):
            raise ShapeError("one space per jump")
        if any(a <= b for a, b in zip(self.jumps, self.jumps[1:])):
            raise ShapeError("jumps must be strictly decreasing")
        prev = 0
        for s in self.spaces:
            if s.n != self.n:
                raise ShapeError("space in the wrong ambient dimension")
            if s.dim <= prev:
                raise ShapeError("graded pieces must be non-zero")
            prev = s.dim
        for small, big in zip(self.spaces, self.spaces[1:]):
            assert small <= big, "flag is not nested"
        if self.n and (not self.spaces or self.spaces[-1].dim != self.n):
            raise ShapeError("filtration is not exhaustive")

    @property
    def field(self) -> Field:
        return self.spaces[0].field if self.spaces else QQ

    @classmethod
    def build(cls, n: int, steps: Iterable[tuple[RationalLike, Subspace]]) -> "RFiltration":
        """Normalize (jump, V^jump) pairs: sort, merge equal spaces, drop empty pieces."""
        pairs = sorted(((q(a), s) for a, s in steps), key=lambda p: p[0], reverse=True)
        jumps: list[Fraction] = []
        spaces: list[Subspace] = []
        for a, s in pairs:
            if jumps and jumps[-1] == a:
                s = s + spaces.pop()
                jumps.pop()
            if s.dim == (spaces[-1].dim if spaces else 0):
                # V^a equals the previous step, so a carries no graded piece
                continue
            jumps.append(a)
            spaces.append(s)
        return cls(n, tuple(jumps), tuple(spaces))

    @classmethod
    def trivial(cls, n: int, jump: RationalLike = 0, field: Field = QQ) -> "RFiltration":
        return cls.build(n, [(jump, Subspace.full(n, field))])

    @classmethod
    def from_basis(cls, basis: Sequence[Sequence], weights: Sequence[RationalLike],
                   field: Field = QQ) -> "RFiltration":
        """The split filtration f_alpha: V^a spanned by basis vectors of weight >= a."""
        n = len(basis)
        w = [q(x) for x in weights]
        if len(w) != n:
            raise ShapeError("one weight per basis vector")
        steps = [(a, Subspace.span([basis[i] for i in range(n) if w[i] >= a], n, field))
                 for a in set(w)]
        return cls.build(n, steps)

    @classmethod
    def coordinate(cls, weights: Sequence[RationalLike], field: Field = QQ) -> "RFiltration":
        return cls.from_basis(unit_vectors(len(weights), field), weights, field)

    def at(self, a: RationalLike) -> Subspace:
        a = q(a)
        candidates = [s for j, s in zip(self.jumps, self.spaces) if j >= a]
        return candidates[-1] if candidates else Subspace.zero(self.n, self.field)

    def above(self, a: RationalLike) -> Subspace:
        """V^{>a}."""
        a = q(a)
        candidates = [s for j, s in zip(self.jumps, self.spaces) if j > a]
        return candidates[-1] if candidates else Subspace.zero(self.n, self.field)

    def graded_dims(self) -> dict[Fraction, int]:
        out, prev = {}, 0
        for a, s in zip(self.jumps, self.spaces):
            out[a] = s.dim - prev
            prev = s.dim
        return out

    def weights(self) -> tuple[Fraction, ...]:
        """Jumps with multiplicity, decreasing."""
        return tuple(a for a, d in self.graded_dims().items() for _ in range(d))

    def norm_squared(self) -> Fraction:
        return sum((a * a * d for a, d in self.graded_dims().items()), Fraction(0))

    def degree(self) -> Fraction:
        return sum((a * d for a, d in self.graded_dims().items()), Fraction(0))

    def to_json(self) -> dict:
        return {"n": self.n, "jumps": [fmt(a) for a in self.jumps],
                "dims": [s.dim for s in self.spaces],
                "spaces": [[[fmt(Fraction(x)) if isinstance(x, (int, Fraction)) else str(x)
                             for x in row] for row in s.basis] for s in self.spaces]}


def _same_ambient(f: RFiltration, g: RFiltration) -> None:
    if f.n != g.n:
        raise ShapeError(f"ambient dimensions differ: {f.n} != {g.n}")


def _bigraded_dims(f: RFiltration, g: RFiltration) -> dict[tuple[Fraction, Fraction], int]:
    """dim gr_f^s gr_g^t V by inclusion-exclusion on h(s,t) = dim(F^s & G^t)."""
    _same_ambient(f, g)
    cache: dict[tuple[int, int], int] = {}

    def h(i: int, j: int) -> int:
        # index -1 stands for the zero space above the first jump
        if i < 0 or j < 0:
            return 0
        if (i, j) not in cache:
            cache[(i, j)] = (f.spaces[i] & g.spaces[j]).dim
        return cache[(i, j)]

    out = {}
    for i, s in enumerate(f.jumps):
        for j, t in enumerate(g.jumps):
            d = h(i, j) - h(i - 1, j) - h(i, j - 1) + h(i - 1, j - 1)
            if d:
                out[(s, t)] = d
    assert sum(out.values()) == f.n
    return out


def pairing(f: RFiltration, g: RFiltration) -> Fraction:
    """<f, g> = sum of s * t * dim gr_f^s gr_g^t."""
    return sum((s * t * d for (s, t), d in _bigraded_dims(f, g).items()), Fraction(0))


def distance_squared(f: RFiltration, g: RFiltration) -> Fraction:
    return f.norm_squared() + g.norm_squared() - 2 * pairing(f, g)


def distance(f: RFiltration, g: RFiltration) -> float:
    d2 = distance_squared(f, g)
    assert d2 >= 0, "negative squared distance"
    return math.sqrt(d2)


def common_basis(f: RFiltration, g: RFiltration) -> tuple[tuple, tuple[Fraction, ...], tuple[Fraction, ...]]:
    """A basis splitting both filtrations, with the weights of f and of g on it."""
    _same_ambient(f, g)
    basis: list[tuple] = []
    wf: list[Fraction] = []
    wg: list[Fraction] = []
    for i, s in enumerate(f.jumps):
        for j, t in enumerate(g.jumps):
            top = f.spaces[i] & g.spaces[j]
            lower = Subspace.zero(f.n, f.field)
            if i > 0:
                lower = lower + (f.spaces[i - 1] & g.spaces[j])
            if j > 0:
                lower = lower + (f.spaces[i] & g.spaces[j - 1])
            for v in lower.complement_in(top):
                basis.append(v)
                wf.append(s)
                wg.append(t)
    if len(basis) != f.n:
        raise AssertionError("common splitting has the wrong size")
    assert RFiltration.from_basis(basis, wf, f.field) == f
    assert RFiltration.from_basis(basis, wg, f.field) == g
    return tuple(basis), tuple(wf), tuple(wg)


def filtration_sum(f: RFiltration, g: RFiltration) -> RFiltration:
    """V^a = sum over s + t >= a of F^s & G^t."""
    _same_ambient(f, g)
    targets = sorted({s + t for s in f.jumps for t in g.jumps}, reverse=True)
    steps = []
    for a in targets:
        space = Subspace.zero(f.n, f.field)
        for s, fs in zip(f.jumps, f.spaces):
            for t, gt in zip(g.jumps, g.spaces):
                if s + t >= a:
                    space = space + (fs & gt)
        steps.append((a, space))
    return RFiltration.build(f.n, steps)


def scale(c: RationalLike, f: RFiltration) -> RFiltration:
    c = q(c)
    if c <= 0:
        raise ValueError("scaling factor must be positive")
    return RFiltration(f.n, tuple(c * a for a in f.jumps), f.spaces)


def dsum(f: RFiltration, g: RFiltration) -> RFiltration:
    n = f.n + g.n
    zf = (f.field.zero(),) * g.n
    zg = (f.field.zero(),) * f.n
    steps = []
    for a in set(f.jumps) | set(g.jumps):
        rows = [tuple(b) + zf for b in f.at(a).basis] + [zg + tuple(b) for b in g.at(a).basis]
        steps.append((a, Subspace.span(rows, n, f.field)))
    return RFiltration.build(n, steps)


def tensor(f: RFiltration, g: RFiltration) -> RFiltration:
    """V^a = sum over s + t >= a of F^s (x) G^t, coordinates indexed i * g.n + j."""
    n = f.n * g.n
    targets = sorted({s + t for s in f.jumps for t in g.jumps}, reverse=True)
    steps = []
    for a in targets:
        rows = []
        for s, fs in zip(f.jumps, f.spaces):
            for t, gt in zip(g.jumps, g.spaces):
                if s + t >= a:
                    rows.extend(kron_vec(u, w) for u in fs.basis for w in gt.basis)
        steps.append((a, Subspace.span(rows, n, f.field)))
    return RFiltration.build(n, steps)


def restrict_to_coordinates(f: RFiltration, coords: Sequence[int]) -> RFiltration:
    """Induced filtration on the span of the given coordinate vectors."""
    coords = sorted(coords)
    return RFiltration.build(len(coords), [(a, s.restrict(coords)) for a, s in zip(f.jumps, f.spaces)])


def alpha_pairing(f: RFiltration, degmap: Callable[[Subspace], Fraction]) -> Fraction:
    """<alpha, f> = sum of a * (deg V^a - deg V^{>a}) for a degree function on subspaces."""
    total = Fraction(0)
    prev = Fraction(0)
    for a, s in zip(f.jumps, f.spaces):
        d = Fraction(degmap(s))
        total += a * (d - prev)
        prev = d
    return total


def energy(f: RFiltration, degmap: Callable[[Subspace], Fraction]) -> Fraction:
    """|f|^2 - 2 <alpha, f>."""
    return f.norm_squared() - 2 * alpha_pairing(f, degmap)


def chain_filtration(n: int, chain: Sequence[Subspace],
                     jumps: Sequence[RationalLike]) -> RFiltration:
    """Filtration with V^{jumps[i]} = chain[i] (chain increasing, jumps decreasing)."""
    return RFiltration.build(n, list(zip(jumps, chain)))
