"""HN-strata of a Schubert cell: indexing, non-emptiness, classical points, dimension.

Every stratum is indexed by a G-class b' with kappa(b') = kappa(b) - sum(mu).
Its Levi M is the centralizer of w0 nu_{b'} (the constancy runs of the
reversed Newton point) and the criterion searches pairs (b_M, lambda) with
b_M a reduction of b to M and lambda in S_M(mu).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from typing import Iterable, Literal, Optional, Sequence

from . import rootdata as rd
from .errors import EmptyStratum, KappaMismatch, NotMinuscule, ShapeError
from .kottwitz import IsocrystalClass, g_class, levi_reductions, make_class
from .rational import fmt, fmt_vec
from .rootdata import Coweight, Levi
from .weights import s_m_mu, s_m_mu_cl, theta

Verdict = Literal["yes", "no", "unknown"]


@dataclass(frozen=True)
class Witness:
    b_M: IsocrystalClass
    lam: Coweight
    certified: bool

    def to_json(self) -> dict:
        return {"b_M": self.b_M.to_json(), "lambda": fmt_vec(self.lam),
                "certified": self.certified}


@dataclass(frozen=True)
class StratumRecord:
    b_prime: IsocrystalClass
    levi: Levi
    witnesses: tuple[Witness, ...]
    nonempty: Verdict
    classical: bool
    dimension: Optional[int] = None

    def __post_init__(self) -> None:
        assert self.nonempty != "yes" or self.witnesses

    def to_json(self) -> dict:
        out = {
            "nu": fmt_vec(self.b_prime.nu),
            "kappa": self.b_prime.kappa_total,
            "levi": list(self.levi),
            "nonempty": self.nonempty,
            "classical": self.classical,
            "witnesses": [w.to_json() for w in self.witnesses],
        }
        if self.dimension is not None:
            out["dimension"] = self.dimension
        return out


@dataclass(frozen=True)
class StrataReport:
    mu: Coweight
    b: IsocrystalClass
    strata: tuple[StratumRecord, ...]
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {"mu": fmt_vec(self.mu), "b": fmt_vec(self.b.nu),
                "kappa_b": self.b.kappa_total,
                "strata": [r.to_json() for r in self.strata],
                "notes": list(self.notes)}


def _check_inputs(mu: Sequence[Fraction], b: IsocrystalClass) -> Coweight:
    mu = rd.coweight(mu)
    if len(b.levi) != 1:
        raise ShapeError("b must be a class over G")
    if len(mu) != b.n:
        raise ShapeError(f"mu has length {len(mu)}, b has rank {b.n}")
    if not rd.is_dominant(mu) or any(x.denominator != 1 for x in mu):
        raise ShapeError("mu must be dominant and integral")
    return mu


def wa_nonempty(mu: Sequence[Fraction], b: IsocrystalClass) -> bool:
    """Weakly admissible locus is non-empty iff centered mu dominates centered nu_b."""
    mu = _check_inputs(mu, b)
    return rd.dominance_leq(rd.centered(b.nu), rd.centered(mu))


def _centered_partials(v: Sequence[Fraction]) -> list[Fraction]:
    out, s = [], Fraction(0)
    for x in rd.centered(v):
        s += x
        out.append(s)
    return out


def hn_levi(b_prime: IsocrystalClass) -> Levi:
    """Centralizer of w0 nu_{b'}: the constancy runs of the reversed Newton point."""
    return tuple(len(list(g)) for _, g in groupby(rd.w0(b_prime.nu)))


def reduction_of_b_prime(b_prime: IsocrystalClass) -> IsocrystalClass:
    """b'_M with nu = w0 nu_{b'} and kappa the block sums (basic in M)."""
    M = hn_levi(b_prime)
    return make_class(M, rd.split_blocks(rd.w0(b_prime.nu), M))


def _kappa_ok(mu: Coweight, b: IsocrystalClass, b_prime: IsocrystalClass, strict: bool) -> bool:
    if len(b_prime.levi) != 1 or b_prime.n != b.n:
        raise ShapeError("b' must be a class over the same G as b")
    expected = b.kappa_total - int(sum(mu))
    if b_prime.kappa_total == expected:
        return True
    if strict:
        raise KappaMismatch(
            f"kappa(b') = {b_prime.kappa_total} but kappa(b) - sum(mu) = {expected}")
    return False


def _witnesses(b: IsocrystalClass, b_prime: IsocrystalClass,
               lams: Iterable[Coweight]) -> list[tuple[IsocrystalClass, Coweight]]:
    M = hn_levi(b_prime)
    bpm = reduction_of_b_prime(b_prime)
    reductions = levi_reductions(b, M)
    out = []
    for lam in lams:
        kappa_target = tuple(t + k for t, k in zip(theta(lam, M), bpm.kappa))
        bound = rd.add(lam, bpm.nu)
        for b_M in reductions:
            if b_M.kappa == kappa_target and rd.dominance_leq(b_M.nu, bound, M):
                out.append((b_M, lam))
    return out


def _hn_from_witness(b_M: IsocrystalClass, lam: Coweight) -> Coweight:
    v = rd.sub(rd.av_levi(b_M.levi, lam), rd.av_levi(b_M.levi, b_M.nu))
    return rd.minus_w0(v)


def stratum_witnesses(mu: Sequence[Fraction], b: IsocrystalClass,
                      b_prime: IsocrystalClass) -> tuple[Witness, ...]:
    """All (b_M, lambda) with lambda in the upper bound for S_M(mu); certified if in the lower."""
    mu = _check_inputs(mu, b)
    if not _kappa_ok(mu, b, b_prime, strict=False):
        return ()
    sm = s_m_mu(mu, hn_levi(b_prime))
    lower = set(sm.lower)
    found = []
    for b_M, lam in _witnesses(b, b_prime, sm.upper):
        assert _hn_from_witness(b_M, lam) == b_prime.nu, "witness does not reproduce nu_{b'}"
        found.append(Witness(b_M, lam, lam in lower))
    return tuple(found)


def stratum_nonempty(mu: Sequence[Fraction], b: IsocrystalClass, b_prime: IsocrystalClass,
                     *, strict: bool = False) -> Verdict:
    """Tri-valued non-emptiness of the stratum indexed by b'.

    A kappa mismatch gives "no", or raises KappaMismatch when strict.
    """
    mu = _check_inputs(mu, b)
    if not _kappa_ok(mu, b, b_prime, strict):
        return "no"
    ws = stratum_witnesses(mu, b, b_prime)
    if any(w.certified for w in ws):
        return "yes"
    return "unknown" if ws else "no"


def has_classical_points(mu: Sequence[Fraction], b: IsocrystalClass,
                         b_prime: IsocrystalClass, *, strict: bool = False) -> bool:
    mu = _check_inputs(mu, b)
    if not _kappa_ok(mu, b, b_prime, strict):
        return False
    return bool(_witnesses(b, b_prime, s_m_mu_cl(mu, hn_levi(b_prime))))


def fiber_dim(mu: Sequence[Fraction], lam: Sequence[Fraction], M: Optional[Levi] = None) -> Fraction:
    """<mu - lambda, rho>; M only fixes the ambient rank check."""
    mu, lam = rd.coweight(mu), rd.coweight(lam)
    if M is not None:
        rd.levi(M, len(mu))
    return rd.pair(rd.sub(mu, lam), rd.rho(len(mu)))


def _minus_w_M0(lam: Coweight, M: Levi) -> Coweight:
    return tuple(x for block in rd.split_blocks(lam, M) for x in rd.minus_w0(block))


@dataclass(frozen=True)
class DimensionForms:
    via_levi: Fraction
    via_opposite: Fraction
    via_basic: Optional[Fraction]
    lam_set: tuple[Coweight, ...]

    @property
    def value(self) -> int:
        assert self.via_levi == self.via_opposite, "dimension forms disagree"
        assert self.via_basic is None or self.via_basic == self.via_levi
        assert self.via_levi.denominator == 1, "dimension is not an integer"
        return int(self.via_levi)

    def to_json(self) -> dict:
        return {"via_levi": fmt(self.via_levi), "via_opposite": fmt(self.via_opposite),
                "via_basic": None if self.via_basic is None else fmt(self.via_basic),
                "lambda": [fmt_vec(lam) for lam in self.lam_set]}


def dimension_forms(mu: Sequence[Fraction], b: IsocrystalClass,
                    b_prime: IsocrystalClass) -> DimensionForms:
    """Evaluate every closed form of the stratum dimension (mu minuscule)."""
    mu = _check_inputs(mu, b)
    if not rd.is_minuscule(mu):
        raise NotMinuscule(f"mu = {fmt_vec(mu)} is not minuscule")
    _kappa_ok(mu, b, b_prime, strict=True)
    M = hn_levi(b_prime)
    lam_set = tuple(sorted({lam for _, lam in _witnesses(b, b_prime, s_m_mu(mu, M).upper)},
                           reverse=True))
    if not lam_set:
        raise EmptyStratum(f"stratum {b_prime} is empty")
    n = len(mu)
    rho = rd.rho(n)
    chi = rd.sub(tuple(2 * x for x in rd.half_sum(M)), rho)
    via_levi = rd.pair(mu, rho) + max(rd.pair(lam, chi) for lam in lam_set)
    via_opposite = max(rd.pair(rd.add(mu, _minus_w_M0(lam, M)), rho) for lam in lam_set)
    via_basic = None
    if b.is_basic():
        rho_M = rd.half_sum(M)
        via_basic = (rd.pair(rd.sub(mu, b_prime.nu), rho)
                     + max(rd.pair(lam, rho_M) for lam in lam_set))
    return DimensionForms(via_levi, via_opposite, via_basic, lam_set)


def stratum_dim(mu: Sequence[Fraction], b: IsocrystalClass, b_prime: IsocrystalClass) -> int:
    return dimension_forms(mu, b, b_prime).value


def _blockwise_wa(lam: Coweight, b_M: IsocrystalClass) -> bool:
    return all(rd.dominance_leq(rd.centered(nb), rd.centered(lb))
               for lb, nb in zip(rd.split_blocks(lam, b_M.levi), b_M.slopes))


def _strictly_decreasing_blocks(v: Coweight, M: Levi) -> bool:
    heads = [block[0] for block in rd.split_blocks(v, M)]
    return all(x > y for x, y in zip(heads, heads[1:]))


def enumerate_strata(mu: Sequence[Fraction], b: IsocrystalClass) -> StrataReport:
    """All HN-strata of the mu-Schubert cell for b, sorted by nu_{b'}."""
    mu = _check_inputs(mu, b)
    n = len(mu)
    kappa = b.kappa_total - int(sum(mu))
    found: dict[Coweight, list[Witness]] = {}
    for M in rd.compositions(n):
        reductions = levi_reductions(b, M)
        if not reductions:
            continue
        sm = s_m_mu(mu, M)
        lower = set(sm.lower)
        for b_M in reductions:
            for lam in sm.upper:
                v = rd.sub(rd.av_levi(M, lam), rd.av_levi(M, b_M.nu))
                if not _strictly_decreasing_blocks(v, M) or not _blockwise_wa(lam, b_M):
                    continue
                nu = rd.minus_w0(v)
                found.setdefault(nu, []).append(Witness(b_M, lam, lam in lower))

    minuscule = rd.is_minuscule(mu)
    records = []
    for nu in sorted(found):
        b_prime = g_class(nu)
        assert b_prime.kappa_total == kappa
        ws = tuple(found[nu])
        verdict: Verdict = "yes" if any(w.certified for w in ws) else "unknown"
        dim = stratum_dim(mu, b, b_prime) if minuscule else None
        records.append(StratumRecord(
            b_prime, hn_levi(b_prime), ws, verdict,
            has_classical_points(mu, b, b_prime), dim))

    notes = []
    basic = tuple(Fraction(kappa, n) for _ in range(n))
    if basic not in found:
        partials = _centered_partials(mu)
        partials_b = _centered_partials(b.nu)
        bad = next(i + 1 for i, (x, y) in enumerate(zip(partials, partials_b)) if x < y)
        notes.append(
            f"basic stratum [{','.join(fmt_vec(basic))}] is empty: centered mu does not "
            f"dominate centered nu_b (partial sum {bad}: {fmt(partials[bad - 1])} < "
            f"{fmt(partials_b[bad - 1])})")
    return StrataReport(mu, b, tuple(records), tuple(notes))
