"""Type-A root datum combinatorics for GL_n and its standard Levi subgroups.

Coweights are tuples of Fractions (coordinates on the diagonal torus).  A
standard Levi subgroup is a composition of n: the tuple of its block sizes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from math import factorial
from typing import Iterable, Iterator, Optional, Protocol, Sequence

from .errors import ParseError, ShapeError
from .rational import RationalLike, q

Coweight = tuple[Fraction, ...]
Levi = tuple[int, ...]


def coweight(values: Iterable[RationalLike]) -> Coweight:
    return tuple(q(x) for x in values)


def levi(blocks: Iterable[int], n: Optional[int] = None) -> Levi:
    out = tuple(int(b) for b in blocks)
    if any(b <= 0 for b in out):
        raise ShapeError(f"Levi blocks must be positive: {out}")
    if n is not None and sum(out) != n:
        raise ShapeError(f"Levi blocks {out} do not sum to {n}")
    return out


def levi_G(n: int) -> Levi:
    return (n,)


def levi_T(n: int) -> Levi:
    return (1,) * n


def compositions(n: int) -> list[Levi]:
    """All standard Levis of GL_n, ordered from G down to T lexicographically."""
    if n == 0:
        return [()]
    out: list[Levi] = []
    for first in range(n, 0, -1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def _check_levi(M: Levi, n: int) -> None:
    if sum(M) != n:
        raise ShapeError(f"Levi {M} does not fit a vector of length {n}")


def split_blocks(v: Sequence[Fraction], M: Levi) -> tuple[tuple[Fraction, ...], ...]:
    _check_levi(M, len(v))
    out = []
    start = 0
    for m in M:
        out.append(tuple(v[start:start + m]))
        start += m
    return tuple(out)


def is_dominant(v: Sequence[Fraction], M: Optional[Levi] = None) -> bool:
    """Weakly decreasing inside each block of M (M=G by default)."""
    M = M if M is not None else levi_G(len(v))
    return all(
        all(b[i] >= b[i + 1] for i in range(len(b) - 1)) for b in split_blocks(v, M)
    )


def dominance_leq(v: Sequence[Fraction], w: Sequence[Fraction], M: Optional[Levi] = None) -> bool:
    """v <=_M w: equal block sums and non-negative partial sums of w - v in every block."""
    if len(v) != len(w):
        raise ShapeError(f"length mismatch {len(v)} != {len(w)}")
    M = M if M is not None else levi_G(len(v))
    for bv, bw in zip(split_blocks(v, M), split_blocks(w, M)):
        partial = 0
        for x, y in zip(bv, bw):
            partial += y - x
            if partial < 0:
                return False
        if partial != 0:
            return False
    return True


def _distinct_permutations(items: list) -> Iterator[tuple]:
    counts = Counter(items)
    keys = sorted(counts, reverse=True)
    n = len(items)
    cur: list = []

    def rec() -> Iterator[tuple]:
        if len(cur) == n:
            yield tuple(cur)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                yield from rec()
                cur.pop()
                counts[k] += 1

    yield from rec()


def weyl_orbit(lam: Sequence[Fraction]) -> tuple[Coweight, ...]:
    """All distinct permutations of lam, in decreasing lexicographic order."""
    return tuple(_distinct_permutations([Fraction(x) for x in lam]))


def orbit_size(lam: Sequence[Fraction]) -> int:
    size = factorial(len(lam))
    for mult in Counter(lam).values():
        size //= factorial(mult)
    return size


def av_levi(M: Levi, v: Sequence[Fraction]) -> Coweight:
    out: list[Fraction] = []
    for block in split_blocks(tuple(Fraction(x) for x in v), M):
        mean = sum(block, Fraction(0)) / len(block)
        out.extend([mean] * len(block))
    return tuple(out)


def half_sum(M: Levi) -> Coweight:
    """rho_M: per block ((m-1)/2, (m-3)/2, ..., -(m-1)/2)."""
    out: list[Fraction] = []
    for m in M:
        out.extend(Fraction(m - 1 - 2 * i, 2) for i in range(m))
    return tuple(out)


def rho(n: int) -> Coweight:
    return half_sum(levi_G(n))


def pair(v: Sequence[Fraction], chi: Sequence[Fraction]) -> Fraction:
    if len(v) != len(chi):
        raise ShapeError(f"length mismatch {len(v)} != {len(chi)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(v, chi)), Fraction(0))


def w0(v: Sequence[Fraction]) -> Coweight:
    return tuple(reversed(tuple(v)))


def minus_w0(v: Sequence[Fraction]) -> Coweight:
    return tuple(-Fraction(x) for x in reversed(tuple(v)))


def add(v: Sequence[Fraction], w: Sequence[Fraction]) -> Coweight:
    if len(v) != len(w):
        raise ShapeError(f"length mismatch {len(v)} != {len(w)}")
    return tuple(Fraction(a) + Fraction(b) for a, b in zip(v, w))


def sub(v: Sequence[Fraction], w: Sequence[Fraction]) -> Coweight:
    return add(v, [-Fraction(x) for x in w])


def centered(v: Sequence[Fraction]) -> Coweight:
    """Subtract the mean: the image in the adjoint coweight space."""
    return sub(v, av_levi(levi_G(len(v)), v))


def dominant_rep(v: Sequence[Fraction]) -> Coweight:
    return tuple(sorted((Fraction(x) for x in v), reverse=True))


def is_minuscule(mu: Sequence[Fraction]) -> bool:
    """Entries lie in {a, a+1} for some integer a."""
    vals = set(Fraction(x) for x in mu)
    if any(x.denominator != 1 for x in vals):
        return False
    return max(vals) - min(vals) <= 1 if vals else True


def block_sums(v: Sequence[Fraction], M: Levi) -> tuple[Fraction, ...]:
    return tuple(sum(b, Fraction(0)) for b in split_blocks(v, M))


def block_bounds(M: Levi) -> list[tuple[int, int]]:
    ends = list(accumulate(M))
    return [(e - m, e) for m, e in zip(M, ends)]


class RootDatum(Protocol):
    """The operations the strata layer needs from a split based root datum."""

    def levis(self) -> list[Levi]: ...

    def dominance_leq(self, v: Sequence[Fraction], w: Sequence[Fraction],
                      M: Optional[Levi] = None) -> bool: ...

    def weyl_orbit(self, lam: Sequence[Fraction]) -> tuple[Coweight, ...]: ...

    def half_sum(self, M: Levi) -> Coweight: ...


@dataclass(frozen=True)
class GL:
    """The split group GL_n; its Levis are again products of GL's."""

    n: int

    def levis(self) -> list[Levi]:
        return compositions(self.n)

    def dominance_leq(self, v, w, M=None) -> bool:
        return dominance_leq(v, w, M)

    def weyl_orbit(self, lam) -> tuple[Coweight, ...]:
        return weyl_orbit(lam)

    def half_sum(self, M: Levi) -> Coweight:
        _check_levi(M, self.n)
        return half_sum(M)

    @classmethod
    def parse(cls, text: str) -> "GL":
        t = text.strip().upper()
        if not t.startswith("GL") or not t[2:].isdigit() or int(t[2:]) <= 0:
            raise ParseError(f"unsupported group {text!r}; expected GLn")
        return cls(int(t[2:]))
