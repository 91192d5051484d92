"""Combinatorics of M-dominant coweights attached to a Schubert cell.

S_M(mu) is only known to lie between Sigma(mu)_{M-max} and Sigma(mu)_{M-dom},
so `s_m_mu` returns both bounds and certifies exactness where they coincide
or where the answer is forced (mu minuscule, M = T, M = G).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import rootdata as rd
from .errors import ShapeError
from .rootdata import Coweight, Levi


@dataclass(frozen=True)
class SMmuResult:
    lower: tuple[Coweight, ...]
    upper: tuple[Coweight, ...]
    exact: bool

    def __post_init__(self) -> None:
        assert set(self.lower) <= set(self.upper), "lower bound escapes upper bound"
        assert not self.exact or set(self.lower) == set(self.upper)


def _integral_dominant(mu: Sequence[Fraction]) -> Coweight:
    mu = rd.coweight(mu)
    if any(x.denominator != 1 for x in mu):
        raise ShapeError("mu must be integral")
    if not rd.is_dominant(mu):
        raise ShapeError("mu must be dominant")
    return mu


def dominant_below(mu: Sequence[Fraction]) -> tuple[Coweight, ...]:
    """Integral dominant nu <= mu (same sum), decreasing lexicographic order."""
    mu = _integral_dominant(mu)
    n = len(mu)
    prefix = [0]
    for x in mu:
        prefix.append(prefix[-1] + int(x))
    out: list[Coweight] = []

    def rec(i: int, partial: int, prev: int, acc: list[int]) -> None:
        if i == n:
            if partial == prefix[n]:
                out.append(tuple(Fraction(x) for x in acc))
            return
        lo = int(mu[-1])
        for x in range(min(prev, prefix[i + 1] - partial), lo - 1, -1):
            # remaining entries are <= x, so the total must stay reachable
            if partial + x + x * (n - i - 1) < prefix[n]:
                break
            rec(i + 1, partial + x, x, acc + [x])

    if n:
        rec(0, 0, int(mu[0]), [])
    return tuple(out)


def _sorted_set(items) -> tuple[Coweight, ...]:
    return tuple(sorted(set(items), reverse=True))


def sigma_m_dom(mu: Sequence[Fraction], M: Levi) -> tuple[Coweight, ...]:
    """M-dominant lambda whose dominant representative is <= mu."""
    mu = _integral_dominant(mu)
    M = rd.levi(M, len(mu))
    return _sorted_set(
        lam for nu in dominant_below(mu) for lam in rd.weyl_orbit(nu)
        if rd.is_dominant(lam, M))


def theta(lam: Sequence[Fraction], M: Levi) -> tuple[int, ...]:
    """Block sums: the projection to the cocharacters of M^ab."""
    sums = rd.block_sums(rd.coweight(lam), M)
    if any(s.denominator != 1 for s in sums):
        raise ShapeError("theta expects an integral coweight")
    return tuple(int(s) for s in sums)


def sigma_m_max(mu: Sequence[Fraction], M: Levi) -> tuple[Coweight, ...]:
    """The <=_M-maximal members of each theta-fiber of sigma_m_dom."""
    dom = sigma_m_dom(mu, M)
    fibers: dict[tuple[int, ...], list[Coweight]] = {}
    for lam in dom:
        fibers.setdefault(theta(lam, M), []).append(lam)
    out = []
    for members in fibers.values():
        for lam in members:
            if not any(o != lam and rd.dominance_leq(lam, o, M) for o in members):
                out.append(lam)
    return _sorted_set(out)


def s_m_mu(mu: Sequence[Fraction], M: Levi) -> SMmuResult:
    mu = _integral_dominant(mu)
    return _s_m_mu(mu, rd.levi(M, len(mu)))


@lru_cache(maxsize=4096)
def _s_m_mu(mu: Coweight, M: Levi) -> SMmuResult:
    n = len(mu)
    if M == rd.levi_G(n):
        # trivial unipotent radical: the Cartan decomposition pins lambda = mu
        return SMmuResult((mu,), (mu,), True)
    dom = sigma_m_dom(mu, M)
    if rd.is_minuscule(mu) or M == rd.levi_T(n):
        return SMmuResult(dom, dom, True)
    mx = sigma_m_max(mu, M)
    return SMmuResult(mx, dom, set(mx) == set(dom))


def s_m_mu_cl(mu: Sequence[Fraction], M: Levi) -> tuple[Coweight, ...]:
    """Weyl-orbit members of mu that are M-dominant."""
    mu = _integral_dominant(mu)
    return _s_m_mu_cl(mu, rd.levi(M, len(mu)))


@lru_cache(maxsize=4096)
def _s_m_mu_cl(mu: Coweight, M: Levi) -> tuple[Coweight, ...]:
    return _sorted_set(lam for lam in rd.weyl_orbit(mu) if rd.is_dominant(lam, M))
