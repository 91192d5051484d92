"""Exact subspace arithmetic over a field (rationals by default, or GF(p)).

A subspace of k^n is stored by its reduced row echelon basis, which makes
equality of subspaces equality of tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .errors import ShapeError


class GF:
    """Element of the prime field Z/pZ."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int) -> None:
        self.p = p
        self.v = v % p

    def _coerce(self, other: Any) -> "GF":
        if isinstance(other, GF):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return other
        if isinstance(other, Fraction):
            return GF(other.numerator, self.p) / GF(other.denominator, self.p)
        return GF(int(other), self.p)

    def __add__(self, o): return GF(self.v + self._coerce(o).v, self.p)
    __radd__ = __add__

    def __sub__(self, o): return GF(self.v - self._coerce(o).v, self.p)

    def __rsub__(self, o): return GF(self._coerce(o).v - self.v, self.p)

    def __mul__(self, o): return GF(self.v * self._coerce(o).v, self.p)
    __rmul__ = __mul__

    def __neg__(self): return GF(-self.v, self.p)

    def __truediv__(self, o):
        o = self._coerce(o)
        if o.v == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return GF(self.v * pow(o.v, -1, self.p), self.p)

    def __rtruediv__(self, o): return self._coerce(o) / self

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, GF)):
            return self.v == self._coerce(o).v
        return NotImplemented

    def __hash__(self): return hash((self.v, self.p))

    def __bool__(self): return self.v != 0

    def __repr__(self): return f"GF({self.v},{self.p})"


@dataclass(frozen=True)
class Field:
    """Coercion into a concrete exact field."""

    name: str
    coerce: Callable[[Any], Any] = dc_field(compare=False, hash=False)

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)


QQ = Field("QQ", lambda x: x if isinstance(x, Fraction) else Fraction(x))


def prime_field(p: int) -> Field:
    return Field(f"GF({p})", lambda x: x if isinstance(x, GF) else GF(0, p)._coerce(x))


def rref(rows: Iterable[Sequence], n: int, field: Field = QQ) -> tuple[tuple, ...]:
    """Reduced row echelon form, zero rows dropped."""
    mat = [[field.coerce(x) for x in r] for r in rows]
    if any(len(r) != n for r in mat):
        raise ShapeError("row of wrong length")
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        # move the pivot row into position rank
        r = rank
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                c = mat[i][col]
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[r])]
        rank += 1
        if rank == len(mat):
            break
    return tuple(tuple(r) for r in mat[:rank])


@dataclass(frozen=True)
class Subspace:
    n: int
    basis: tuple[tuple, ...]
    field: Field = QQ

    @classmethod
    def span(cls, vectors: Iterable[Sequence], n: int, field: Field = QQ) -> "Subspace":
        return cls(n, rref(vectors, n, field), field)

    @classmethod
    def zero(cls, n: int, field: Field = QQ) -> "Subspace":
        return cls(n, (), field)

    @classmethod
    def full(cls, n: int, field: Field = QQ) -> "Subspace":
        return cls.span(unit_vectors(n, field), n, field)

    @classmethod
    def coordinate(cls, S: Iterable[int], n: int, field: Field = QQ) -> "Subspace":
        e = unit_vectors(n, field)
        return cls.span([e[i] for i in sorted(S)], n, field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace") -> None:
        if self.n != other.n:
            raise ShapeError(f"ambient dimensions differ: {self.n} != {other.n}")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.n, self.field)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection by the Zassenhaus algorithm."""
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.n, self.field)
        n = self.n
        zero = (self.field.zero(),) * n
        rows = [tuple(b) + tuple(b) for b in self.basis] + [tuple(b) + zero for b in other.basis]
        red = rref(rows, 2 * n, self.field)
        inter = [r[n:] for r in red if not any(r[:n])]
        return Subspace.span(inter, n, self.field)

    def contains(self, v: Sequence) -> bool:
        return Subspace.span(self.basis + (tuple(v),), self.n, self.field).dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def complement_in(self, big: "Subspace") -> tuple[tuple, ...]:
        """Vectors of big's basis extending self to a basis of big (self <= big assumed)."""
        chosen: list[tuple] = []
        cur = self
        for b in big.basis:
            if not cur.contains(b):
                chosen.append(b)
                cur = Subspace.span(cur.basis + (b,), self.n, self.field)
        assert cur.dim == big.dim
        return tuple(chosen)

    def restrict(self, coords: Sequence[int]) -> "Subspace":
        """Intersect with the coordinate span and express in those coordinates."""
        inside = self & Subspace.coordinate(coords, self.n, self.field)
        return Subspace.span([[b[i] for i in coords] for b in inside.basis],
                             len(coords), self.field)


def unit_vectors(n: int, field: Field = QQ) -> list[tuple]:
    z, o = field.zero(), field.one()
    return [tuple(o if j == i else z for j in range(n)) for i in range(n)]


def kron_vec(u: Sequence, w: Sequence) -> tuple:
    """Coordinates of u (x) w with index i * len(w) + j."""
    return tuple(a * b for a in u for b in w)


def rank(rows: Iterable[Sequence], n: int, field: Field = QQ) -> int:
    return len(rref(rows, n, field))

