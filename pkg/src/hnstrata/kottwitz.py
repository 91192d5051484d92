"""Elements of B(M) for standard Levis of GL_n, stored as (Newton point, Kottwitz point).

For GL-type groups the Kottwitz invariant of a block is the sum of its
slopes, so a class is determined by its per-block slope multisets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import ceil, floor
from typing import Iterable, Iterator, Optional, Sequence, Union

from . import rootdata as rd
from .errors import InconsistentKappa, IntegralityError, ShapeError
from .rational import RationalLike, fmt_vec, q
from .rootdata import Coweight, Levi


def _block_integral(block: Sequence[Fraction]) -> bool:
    # a slope p/q occurring m times contributes a polygon segment of height p*m/q
    return all(mult % s.denominator == 0 for s, mult in Counter(block).items())


@dataclass(frozen=True, order=True)
class IsocrystalClass:
    levi: Levi
    slopes: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return sum(self.levi)

    @property
    def nu(self) -> Coweight:
        return tuple(s for block in self.slopes for s in block)

    @property
    def kappa(self) -> tuple[int, ...]:
        out = []
        for block in self.slopes:
            total = sum(block, Fraction(0))
            assert total.denominator == 1, "integrality invariant broken"
            out.append(int(total))
        return tuple(out)

    @property
    def kappa_total(self) -> int:
        return sum(self.kappa)

    def is_basic(self) -> bool:
        return all(len(set(block)) <= 1 for block in self.slopes)

    def to_json(self) -> dict:
        return {"levi": list(self.levi), "slopes": [fmt_vec(b) for b in self.slopes]}

    @classmethod
    def from_json(cls, obj: dict) -> "IsocrystalClass":
        try:
            return make_class(obj["levi"], obj["slopes"])
        except (KeyError, TypeError) as exc:
            raise ShapeError(f"malformed class JSON: {obj!r}") from exc

    def __str__(self) -> str:
        inner = " | ".join(",".join(fmt_vec(b)) for b in self.slopes)
        return f"[{inner}]"


def make_class(M: Iterable[int], blocks: Iterable[Iterable[RationalLike]]) -> IsocrystalClass:
    """Validated class over the Levi M; each block is sorted to its dominant form."""
    M = rd.levi(M)
    raw_blocks = [list(b) for b in blocks]
    if len(raw_blocks) != len(M):
        raise ShapeError(f"Levi {M} has {len(M)} blocks, received {len(raw_blocks)}")
    out = []
    for m, raw in zip(M, raw_blocks):
        block = tuple(sorted((q(s) for s in raw), reverse=True))
        if len(block) != m:
            raise ShapeError(f"block of size {m} received {len(block)} slopes")
        if not _block_integral(block):
            raise IntegralityError(
                f"Newton polygon of {fmt_vec(block)} has a non-integral breakpoint")
        out.append(block)
    return IsocrystalClass(M, tuple(out))


def g_class(slopes: Iterable[RationalLike]) -> IsocrystalClass:
    """Class over G = GL_n from a flat slope list."""
    s = list(slopes)
    return make_class((len(s),), [s])


def basic_class(n: int, kappa: int) -> IsocrystalClass:
    return g_class([Fraction(kappa, n)] * n)


def _as_levi_vector(value: Union[int, Sequence[int]], M: Levi) -> tuple[int, ...]:
    if isinstance(value, int):
        if len(M) != 1:
            raise ShapeError("a scalar kappa needs a one-block Levi")
        return (value,)
    out = tuple(int(x) for x in value)
    if len(out) != len(M):
        raise ShapeError(f"kappa {out} does not match Levi {M}")
    return out


def in_kottwitz_set(c: IsocrystalClass, eps: Union[int, Sequence[int]],
                    delta: Sequence[RationalLike]) -> bool:
    """Membership in B(M, eps, delta): kappa(c) = eps and nu(c) <=_M delta."""
    eps_v = _as_levi_vector(eps, c.levi)
    delta_v = rd.coweight(delta)
    if len(delta_v) != c.n:
        raise ShapeError(f"delta has length {len(delta_v)}, class has rank {c.n}")
    return c.kappa == eps_v and rd.dominance_leq(c.nu, delta_v, c.levi)


def _sub_multisets(avail: dict[Fraction, int], size: int) -> Iterator[dict[Fraction, int]]:
    keys = sorted(avail, reverse=True)

    def rec(i: int, left: int, cur: dict[Fraction, int]) -> Iterator[dict[Fraction, int]]:
        if i == len(keys):
            if left == 0:
                yield dict(cur)
            return
        s = keys[i]
        step = s.denominator
        for take in range(min(avail[s], left) // step * step, -1, -step):
            if take:
                cur[s] = take
            yield from rec(i + 1, left - take, cur)
            cur.pop(s, None)

    yield from rec(0, size, {})


def levi_reductions(c: IsocrystalClass, M: Iterable[int]) -> tuple[IsocrystalClass, ...]:
    """All classes in B(M) whose image in B(G) is c (block splits with integral polygons)."""
    M = rd.levi(M)
    if len(c.levi) != 1:
        raise ShapeError("levi_reductions expects a class over G")
    if sum(M) != c.n:
        raise ShapeError(f"Levi {M} does not fit rank {c.n}")
    return _levi_reductions(c, M)


@lru_cache(maxsize=8192)
def _levi_reductions(c: IsocrystalClass, M: Levi) -> tuple[IsocrystalClass, ...]:
    counts = dict(Counter(c.nu))
    results: list[IsocrystalClass] = []

    def rec(j: int, left: dict[Fraction, int], acc: list[tuple[Fraction, ...]]) -> None:
        if j == len(M):
            results.append(IsocrystalClass(M, tuple(acc)))
            return
        for chosen in _sub_multisets(left, M[j]):
            block = tuple(sorted(
                (s for s, k in chosen.items() for _ in range(k)), reverse=True))
            rest = {s: k - chosen.get(s, 0) for s, k in left.items()}
            rest = {s: k for s, k in rest.items() if k}
            rec(j + 1, rest, acc + [block])

    rec(0, counts, [])
    return tuple(sorted(set(results)))


def to_g(c: IsocrystalClass) -> IsocrystalClass:
    """Image in B(G): the union of the block multisets."""
    return g_class(c.nu)


def dual_class(c: IsocrystalClass) -> IsocrystalClass:
    """nu -> -w0 nu, kappa -> -kappa, inside the class's own group M."""
    return IsocrystalClass(
        c.levi, tuple(tuple(-s for s in reversed(b)) for b in c.slopes))


def hn_index(v: Sequence[RationalLike], kappa_b: int, mu: Sequence[RationalLike]) -> IsocrystalClass:
    """The class with nu = -w0 v and kappa = kappa_b - sum(mu)."""
    v = rd.coweight(v)
    if not rd.is_dominant(v):
        raise ShapeError(f"HN vector {fmt_vec(v)} is not dominant")
    nu = rd.minus_w0(v)
    kappa = Fraction(kappa_b) - sum(rd.coweight(mu), Fraction(0))
    if sum(nu, Fraction(0)) != kappa:
        raise InconsistentKappa(
            f"sum of -w0 v is {sum(nu, Fraction(0))} but kappa(b) - sum(mu) = {kappa}")
    return g_class(nu)


def bundle_slope(c: IsocrystalClass) -> Coweight:
    """-Av_M(nu): the slope vector of the associated bundle."""
    return tuple(-x for x in rd.av_levi(c.levi, c.nu))


def newton_points(m: int, total: RationalLike, upper: Optional[Sequence[RationalLike]] = None,
                  slope_bound: Optional[tuple[Fraction, Fraction]] = None) -> list[Coweight]:
    """Dominant Newton points of GL_m with integral polygon and slope sum `total`.

    With `upper`, keep those <= upper in the dominance order; otherwise
    `slope_bound=(lo, hi)` must bound the slopes.  Ordered decreasingly.
    """
    total = q(total)
    if total.denominator != 1:
        return []
    if upper is not None:
        up = rd.coweight(upper)
        if len(up) != m:
            raise ShapeError("upper bound has the wrong length")
        prefix = [Fraction(0)]
        for x in up:
            prefix.append(prefix[-1] + x)
        if prefix[-1] != total:
            return []
        hi, lo = max(up), min(up)
    elif slope_bound is not None:
        lo, hi = q(slope_bound[0]), q(slope_bound[1])
        prefix = None
    else:
        raise ValueError("need an upper bound or a slope bound")

    out: list[Coweight] = []

    def rec(i: int, partial: Fraction, prev: Optional[Fraction], acc: list[Fraction]) -> None:
        if i == m:
            if partial == total:
                out.append(tuple(acc))
            return
        left = m - i
        for length in range(1, left + 1):
            # slopes p/length give integral segment heights
            for p in range(floor(hi * length), ceil(lo * length) - 1, -1):
                s = Fraction(p, length)
                if prev is not None and s >= prev:
                    continue
                end = partial + p
                rest = left - length
                if rest == 0:
                    if end != total:
                        continue
                elif not (lo * rest <= total - end < s * rest):
                    # later slopes are strictly below s and at least lo
                    continue
                if prefix is not None and not all(
                        partial + s * (k + 1) <= prefix[i + k + 1] for k in range(length)):
                    continue
                rec(i + length, end, s, acc + [s] * length)

    rec(0, Fraction(0), None, [])
    return sorted(set(out), reverse=True)


def kottwitz_set(M: Iterable[int], eps: Union[int, Sequence[int]],
                 delta: Sequence[RationalLike]) -> tuple[IsocrystalClass, ...]:
    """Enumerate B(M, eps, delta) blockwise."""
    M = rd.levi(M)
    eps_v = _as_levi_vector(eps, M)
    delta_v = rd.coweight(delta)
    per_block = [newton_points(m, e, d) for m, e, d in
                 zip(M, eps_v, rd.split_blocks(delta_v, M))]
    return tuple(sorted(IsocrystalClass(M, tuple(choice)) for choice in product(*per_block)))


def g_classes(n: int, lo: RationalLike, hi: RationalLike,
              max_denominator: Optional[int] = None) -> tuple[IsocrystalClass, ...]:
    """All G-classes of GL_n with slopes in [lo, hi] (any integral kappa)."""
    lo_q, hi_q = q(lo), q(hi)
    out = []
    k_lo = ceil(lo_q * n)
    k_hi = floor(hi_q * n)
    for kappa in range(k_lo, k_hi + 1):
        for nu in newton_points(n, kappa, slope_bound=(lo_q, hi_q)):
            if max_denominator is None or all(s.denominator <= max_denominator for s in nu):
                out.append(g_class(nu))
    return tuple(sorted(out))
