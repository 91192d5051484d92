"""Seeded property suites over randomly generated and exhaustively enumerated instances.

Every case draws from its own generator seeded by (suite, seed, index), so
results do not depend on scheduling.  HNSTRATA_THREADS caps a process pool.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Iterator, Optional, Sequence

from . import filtspace as fs
from . import isocengine as ie
from . import laurent as lp
from . import rootdata as rd
from . import strata as st
from . import weights as wt
from .kottwitz import (IsocrystalClass, basic_class, dual_class, in_kottwitz_set,
                       kottwitz_set, levi_reductions, make_class, to_g)
from .laurent import Laurent
from .rational import fmt, fmt_vec

SUITES = ("tensor", "dsum", "cocycle", "energy", "bb", "dimension", "kottwitz", "smmu")


@dataclass
class SuiteResult:
    name: str
    seed: Optional[int]
    cases: int
    failures: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.name, "seed": self.seed, "cases": self.cases, "ok": self.ok,
                "failures": self.failures[:20], "failure_count": len(self.failures),
                "details": self.details}


def case_rng(suite: str, seed: int, index: int) -> random.Random:
    return random.Random(f"{suite}/{seed}/{index}")


def threads() -> int:
    try:
        return max(1, int(os.environ.get("HNSTRATA_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, args: Sequence) -> list:
    workers = min(threads(), len(args)) if args else 1
    if workers <= 1:
        return [fn(a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, args, chunksize=max(1, len(args) // (4 * workers))))


# ----- random instances -----

def random_laurent(rng: random.Random, E: int, max_terms: int = 2) -> Laurent:
    out = Laurent()
    for _ in range(rng.randint(0, max_terms)):
        out = out + Laurent.monomial(rng.randint(-E, E), rng.choice((-2, -1, 1, 2)))
    return out


def random_lattice(rng: random.Random, n: int, E: int) -> ie.LatticePresentation:
    while True:
        m = tuple(tuple(random_laurent(rng, E) for _ in range(n)) for _ in range(n))
        if not lp.det(m).is_zero():
            return ie.LatticePresentation(m)


def random_constant_matrix(rng: random.Random, n: int) -> tuple:
    while True:
        x = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if not lp.det(lp.as_matrix(x)).is_zero():
            return tuple(tuple(r) for r in x)


def tensor_case(seed: int, i: int) -> tuple[ie.NormedIsocrystal, ie.NormedIsocrystal]:
    rng = case_rng("tensor", seed, i)
    n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
    s1 = rng.sample((0, 1, 2, 3), n1)
    s2 = rng.sample((0, 10, 20, 30), n2)
    return (ie.NormedIsocrystal(tuple(s1), random_lattice(rng, n1, 1)),
            ie.NormedIsocrystal(tuple(s2), random_lattice(rng, n2, 1)))


def dsum_case(seed: int, i: int) -> tuple[ie.NormedIsocrystal, ie.NormedIsocrystal]:
    rng = case_rng("dsum", seed, i)
    n1, n2 = rng.randint(1, 3), rng.randint(1, 3)
    slopes = rng.sample(range(-4, 5), n1 + n2)
    return (ie.NormedIsocrystal(tuple(slopes[:n1]), random_lattice(rng, n1, 2)),
            ie.NormedIsocrystal(tuple(slopes[n1:]), random_lattice(rng, n2, 2)))


def _fail(i: int, message: str, **extra) -> dict:
    out = {"case": i, "message": message}
    out.update(extra)
    return out


# ----- tensor and direct sum -----

def _tensor_one(args: tuple[int, int]) -> Optional[dict]:
    seed, i = args
    D1, D2 = tensor_case(seed, i)
    T = ie.tensor(D1, D2)
    h1, h2, ht = ie.hn_filtration(D1), ie.hn_filtration(D2), ie.hn_filtration(T)
    expected = fs.tensor(h1.filtration(), h2.filtration())
    got = ht.filtration()
    if got != expected or got.graded_dims() != expected.graded_dims():
        return _fail(i, "HN of tensor differs from tensor of HN",
                     got=got.to_json(), expected=expected.to_json(),
                     d1=D1.to_json(), d2=D2.to_json())
    return None


def run_tensor(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("tensor", seed, cases)
    res.failures = [f for f in _map(_tensor_one, [(seed, i) for i in range(cases)]) if f]
    return res


def _dsum_one(args: tuple[int, int]) -> Optional[dict]:
    seed, i = args
    D1, D2 = dsum_case(seed, i)
    S = ie.dsum(D1, D2)
    h1, h2, hs = ie.hn_filtration(D1), ie.hn_filtration(D2), ie.hn_filtration(S)
    expected = fs.dsum(h1.filtration(), h2.filtration())
    if hs.filtration() != expected:
        return _fail(i, "HN of direct sum differs from direct sum of HN",
                     d1=D1.to_json(), d2=D2.to_json())
    if hs.v != tuple(sorted(h1.v + h2.v, reverse=True)):
        return _fail(i, "HN vector of direct sum is not the merged vector")
    return None


def run_dsum(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("dsum", seed, cases)
    res.failures = [f for f in _map(_dsum_one, [(seed, i) for i in range(cases)]) if f]
    return res


# ----- nu cocycle -----

def _cocycle_one(args: tuple[int, int]) -> Optional[dict]:
    seed, i = args
    rng = case_rng("cocycle", seed, i)
    n = rng.randint(1, 4)
    A, B, C = (random_lattice(rng, n, 4) for _ in range(3))
    ab = ie.nu_distance_adapted(A, B)
    bc = ie.nu_distance_adapted(B, C)
    ac = ie.nu_distance_adapted(A, C)
    ba = ie.nu_distance_adapted(B, A)
    dets = [A.det_valuation - B.det_valuation, B.det_valuation - C.det_valuation,
            A.det_valuation - C.det_valuation]
    if [ab, bc, ac] != dets:
        return _fail(i, "adapted-basis and determinant paths disagree",
                     adapted=[ab, bc, ac], determinant=dets)
    if ac != ab + bc:
        return _fail(i, "cocycle identity fails")
    if ba != -ab or ie.nu_distance_adapted(A, A) != 0:
        return _fail(i, "nu is not antisymmetric")
    return None


def run_cocycle(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("cocycle", seed, cases)
    res.failures = [f for f in _map(_cocycle_one, [(seed, i) for i in range(cases)]) if f]
    return res


# ----- energy -----

def hn_polygon(hn: ie.HNResult, deg_full: Fraction | int) -> Callable[[int], Fraction]:
    """The concave HN polygon as a function of rank."""
    pts = [(0, Fraction(0))]
    total = Fraction(0)
    prev = 0
    for T, s in zip(hn.chain, hn.slopes):
        r = ie.popcount(T)
        total += s * (r - prev)
        pts.append((r, total))
        prev = r

    def P(r: int) -> Fraction:
        for (r0, y0), (r1, y1) in zip(pts, pts[1:]):
            if r0 <= r <= r1:
                return y0 + (y1 - y0) * Fraction(r - r0, r1 - r0)
        raise ValueError("rank out of range")
    assert pts[-1][1] == deg_full
    return P


def isotonic_energy(pieces: Sequence[tuple[int, Fraction]]) -> tuple[Fraction, list[int]]:
    """min of sum(d a^2 - 2 delta a) over non-increasing a, by pooling adjacent violators.

    Returns the minimum and the cumulative piece counts at the pooled jumps.
    """
    stack: list[list] = []  # [rank, degree, pieces]
    for d, delta in pieces:
        stack.append([d, Fraction(delta), 1])
        while len(stack) >= 2 and (Fraction(stack[-2][1], stack[-2][0])
                                   <= Fraction(stack[-1][1], stack[-1][0])):
            d2, e2, c2 = stack.pop()
            stack[-1][0] += d2
            stack[-1][1] += e2
            stack[-1][2] += c2
    value = -sum((e * e / d for d, e, _ in stack), Fraction(0))
    cuts, acc = [], 0
    for _, _, c in stack:
        acc += c
        cuts.append(acc)
    return value, cuts


def ordered_partitions(mask: int) -> Iterator[list[int]]:
    """Chains of coordinate subsets from 0 to mask, as lists of block masks."""
    if not mask:
        yield []
        return
    sub = mask
    while sub:
        for rest in ordered_partitions(mask ^ sub):
            yield [sub] + rest
        sub = (sub - 1) & mask


def _random_filtration(rng: random.Random, n: int) -> tuple[list[int], list[Fraction]]:
    order = list(range(n))
    rng.shuffle(order)
    k = rng.randint(1, n)
    cuts = sorted(rng.sample(range(1, n), k - 1)) + [n]
    chain, prev = [], 0
    acc = 0
    for c in cuts:
        for i in order[prev:c]:
            acc |= 1 << i
        chain.append(acc)
        prev = c
    jumps = sorted({Fraction(rng.randint(-30, 30), rng.randint(1, 3)) for _ in range(4 * k)},
                   reverse=True)
    while len(jumps) < k:
        jumps.append(jumps[-1] - 1)
    picks = sorted(rng.sample(jumps, k), reverse=True)
    return chain, picks


def energy_check(D: ie.NormedIsocrystal, rng: random.Random, samples: int = 10) -> list[str]:
    """Problems found when testing the HN filtration as the unique energy minimizer."""
    n = D.n
    full = (1 << n) - 1
    deg = ie.lattice_degrees(D)
    hn = ie.hn_from_degrees(n, deg)
    F = hn.filtration()
    dmap = ie.degree_map(deg)
    problems = []
    e_hn = fs.energy(F, dmap)
    if e_hn != -sum((x * x for x in hn.v), Fraction(0)):
        problems.append("energy of HN is not -|v|^2")

    # polygon certificate: deg W_S <= P(|S|), with equality at HN ranks only on the HN member
    P = hn_polygon(hn, deg[full])
    breakpoints = {ie.popcount(T): T for T in hn.chain}
    for m in range(1, full + 1):
        r = ie.popcount(m)
        if deg[m] > P(r):
            problems.append(f"subset {m:b} lies above the HN polygon")
        elif deg[m] == P(r) and r in breakpoints and m != breakpoints[r]:
            problems.append(f"subset {m:b} ties the HN member at rank {r}")

    def gap_ok(f: fs.RFiltration) -> bool:
        e_f = fs.energy(f, dmap)
        gap = (f.degree() - deg[full]) ** 2 / n
        return e_hn <= e_f - gap and (e_f > e_hn or f == F)

    # every chain, minimized over its closed cone of weights (exhaustive for small rank)
    if n <= 4:
        for blocks in ordered_partitions(full):
            acc, chain, pieces = 0, [], []
            for b in blocks:
                pieces.append((ie.popcount(b), Fraction(deg[acc | b] - deg[acc])))
                acc |= b
                chain.append(acc)
            value, cuts = isotonic_energy(pieces)
            pooled = tuple(chain[c - 1] for c in cuts)
            if value < e_hn or (value == e_hn and pooled != hn.chain):
                problems.append(f"chain {[f'{c:b}' for c in chain]} reaches energy {fmt(value)}")

    # translates of HN make the strengthened inequality an equality
    for r in (Fraction(1), Fraction(-1, 2)):
        Fr = fs.RFiltration(n, tuple(a + r for a in F.jumps), F.spaces)
        if fs.energy(Fr, dmap) - (Fr.degree() - deg[full]) ** 2 / n != e_hn:
            problems.append("translate of HN does not attain the strengthened bound")

    for _ in range(samples):
        chain, jumps = _random_filtration(rng, n)
        spaces = [fs.Subspace.coordinate(ie.members(m, n), n) for m in chain]
        f = fs.chain_filtration(n, spaces, jumps)
        if not gap_ok(f):
            problems.append(f"strengthened inequality fails for chain {chain}")
    return problems


def _energy_one(args: tuple[str, int, int]) -> Optional[dict]:
    kind, seed, i = args
    D1, D2 = tensor_case(seed, i) if kind == "tensor" else dsum_case(seed, i)
    D = ie.tensor(D1, D2) if kind == "tensor" else ie.dsum(D1, D2)
    rng = case_rng("energy-" + kind, seed, i)
    problems = []
    for part in (D1, D2, D):
        problems += energy_check(part, rng)
    if problems:
        return _fail(i, "; ".join(problems[:3]), family=kind)
    return None


def run_energy(seed: int, cases: int) -> SuiteResult:
    """Energy checks on every instance of the tensor and direct-sum suites."""
    res = SuiteResult("energy", seed, cases)
    args = [(k, seed, i) for k in ("tensor", "dsum") for i in range(cases)]
    res.failures = [f for f in _map(_energy_one, args) if f]
    res.details = {"instances": len(args) * 3}
    return res


# ----- lattice HN against filtered HN -----

def bb_compare(D: ie.NormedIsocrystal) -> tuple[IsocrystalClass, IsocrystalClass]:
    mu = ie.relative_position(D.lattice)
    lat = ie.hn_class(D)
    fil = ie.filtered_hn_class(ie.residue_isocrystal(D), mu)
    return lat, fil


def degree_gaps(D: ie.NormedIsocrystal) -> list[tuple[int, int, Fraction]]:
    """Subsets where the lattice degree differs from the residue-filtration degree."""
    lat = ie.lattice_degrees(D)
    fil = ie.filtered_degrees(ie.residue_isocrystal(D))
    return [(m, lat[m], fil[m]) for m in range(1 << D.n) if lat[m] != fil[m]]


def _bb_one(args: tuple[int, int]) -> Optional[dict]:
    seed, i = args
    rng = case_rng("bb", seed, i)
    n = rng.randint(1, 3)
    slopes = tuple(rng.sample(range(-3, 4), n))
    D = ie.NormedIsocrystal(slopes, random_lattice(rng, n, 3))
    lat, fil = bb_compare(D)
    if not rd.dominance_leq(lat.nu, fil.nu):
        return _fail(i, "lattice HN class is not below the filtered HN class",
                     lattice=D.to_json(), lat=fmt_vec(lat.nu), fil=fmt_vec(fil.nu))
    if any(l_ > f_ for _, l_, f_ in degree_gaps(D)):
        return _fail(i, "lattice sub-degree exceeds the filtration sub-degree")
    # classical lattices: the two HN filtrations coincide
    x = random_constant_matrix(rng, n)
    mu = sorted((rng.randint(-2, 2) for _ in range(n)), reverse=True)
    C = ie.NormedIsocrystal(slopes, ie.classical_lattice(x, mu))
    h_lat = ie.hn_filtration(C)
    h_fil = ie.filtered_hn(ie.residue_isocrystal(C))
    if h_lat != h_fil or degree_gaps(C):
        return _fail(i, "classical lattice: lattice and filtered HN differ")
    expected = fs.RFiltration.from_basis([tuple(x[r][c] for r in range(n)) for c in range(n)], mu)
    if ie.residue_filtration(C.lattice) != expected:
        return _fail(i, "residue filtration of a classical lattice is not x applied to the flag")
    return None


def strict_gap_search(seed: int, budget: int = 10_000) -> Optional[dict]:
    """First instance (n = 3, exponents |e| <= 3) with a subset whose lattice degree
    is strictly below its residue-filtration degree."""
    for i in range(budget):
        rng = case_rng("strict-gap", seed, i)
        slopes = tuple(rng.sample(range(-3, 4), 3))
        D = ie.NormedIsocrystal(slopes, random_lattice(rng, 3, 3))
        gaps = [(m, a, b) for m, a, b in degree_gaps(D) if a < b]
        if gaps:
            m, a, b = gaps[0]
            return {"seed": seed, "index": i, "instance": D.to_json(),
                    "subset": [j + 1 for j in ie.members(m, 3)],
                    "lattice_degree": a, "filtration_degree": fmt(b)}
    return None


def run_bb(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("bb", seed, cases)
    res.failures = [f for f in _map(_bb_one, [(seed, i) for i in range(cases)]) if f]
    hit = strict_gap_search(seed)
    if hit is None:
        res.failures.append({"case": None, "message": "no strict degree gap found"})
    res.details = {"strict_gap": hit}
    return res


# ----- dimension of strata -----

def minuscule_grid(max_n: int = 5) -> list[tuple[rd.Coweight, IsocrystalClass]]:
    out = []
    for n in range(1, max_n + 1):
        for a in (-1, 0, 1):
            for k in range(n + 1):
                mu = (Fraction(a + 1),) * k + (Fraction(a),) * (n - k)
                for kappa in range(-2 * n, 2 * n + 1):
                    out.append((mu, basic_class(n, kappa)))
    return out


def _dimension_one(args: tuple[rd.Coweight, IsocrystalClass]) -> list[dict]:
    mu, b = args
    fails = []
    report = st.enumerate_strata(mu, b)
    rho2 = tuple(2 * x for x in rd.rho(len(mu)))
    tag = {"mu": fmt_vec(mu), "b": fmt_vec(b.nu)}
    for rec in report.strata:
        if rec.nonempty != "yes":
            fails.append(dict(tag, message="minuscule verdict is not certified"))
            continue
        forms = st.dimension_forms(mu, b, rec.b_prime)
        if forms.via_levi != forms.via_opposite or (
                forms.via_basic is not None and forms.via_basic != forms.via_levi):
            fails.append(dict(tag, message="dimension forms disagree", nu=fmt_vec(rec.b_prime.nu)))
        elif forms.via_levi.denominator != 1 or forms.via_levi < 0:
            fails.append(dict(tag, message="dimension is not a non-negative integer"))
        if rec.b_prime.is_basic() and rec.dimension != rd.pair(mu, rho2):
            fails.append(dict(tag, message="basic stratum is not of full dimension"))
        if not rec.classical:
            fails.append(dict(tag, message="minuscule stratum without classical points"))
        if st.stratum_nonempty(mu, b, rec.b_prime) != "yes":
            fails.append(dict(tag, message="enumeration disagrees with the criterion"))
        if rec.b_prime.kappa_total != b.kappa_total - sum(mu):
            fails.append(dict(tag, message="kappa bookkeeping broken"))
    basic_present = any(r.b_prime.is_basic() for r in report.strata)
    if basic_present != st.wa_nonempty(mu, b):
        fails.append(dict(tag, message="basic stratum presence disagrees with weak admissibility"))
    return fails


def run_dimension(seed: Optional[int] = None, cases: Optional[int] = None,
                  max_n: int = 5) -> SuiteResult:
    grid = minuscule_grid(max_n)
    res = SuiteResult("dimension", seed, len(grid))
    for fails in _map(_dimension_one, grid):
        res.failures.extend(fails)
    # the GL4 anchor values
    mu = tuple(Fraction(x) for x in (1, 1, 0, 0))
    rep = st.enumerate_strata(mu, basic_class(4, 0))
    dims = {tuple(r.b_prime.nu): r.dimension for r in rep.strata}
    anchor = {"basic": dims.get(tuple(Fraction(-1, 2) for _ in range(4))),
              "0,0,-1,-1": dims.get(tuple(Fraction(x) for x in (0, 0, -1, -1)))}
    if anchor != {"basic": 4, "0,0,-1,-1": 0}:
        res.failures.append({"case": "GL4", "message": f"anchor dimensions {anchor}"})
    res.details = {"GL4_mu_1100_b_1": {",".join(fmt_vec(k)): v for k, v in sorted(dims.items())}}
    return res


# ----- Kottwitz sets and reductions -----

def dominant_grid(n: int, lo: int, hi: int) -> list[rd.Coweight]:
    return [tuple(Fraction(x) for x in sorted(c, reverse=True))
            for c in combinations_with_replacement(range(lo, hi + 1), n)]


def brute_reductions(c: IsocrystalClass, M: rd.Levi) -> set[IsocrystalClass]:
    out = set()
    for perm in rd.weyl_orbit(c.nu):
        blocks = rd.split_blocks(perm, M)
        try:
            out.add(make_class(M, blocks))
        except ValueError:
            continue
    return out


def _kottwitz_n(n: int) -> tuple[int, list[dict], dict]:
    from .kottwitz import g_classes
    fails: list[dict] = []
    classes = g_classes(n, -2, 2, max_denominator=4)
    mus = dominant_grid(n, -3, 3)
    checked = 0
    for b in classes:
        for M in rd.compositions(n):
            reds = levi_reductions(b, M)
            if any(to_g(r) != b for r in reds) or set(reds) != brute_reductions(b, M):
                fails.append({"b": fmt_vec(b.nu), "levi": list(M), "message": "reduction fiber"})
        if dual_class(dual_class(b)) != b:
            fails.append({"b": fmt_vec(b.nu), "message": "dual is not an involution"})
        for mu in mus:
            kappa = b.kappa_total - int(sum(mu))
            basic = basic_class(n, kappa)
            verdict = st.stratum_nonempty(mu, b, basic)
            wa = st.wa_nonempty(mu, b)
            checked += 1
            if verdict == "unknown" or (verdict == "yes") != wa:
                fails.append({"mu": fmt_vec(mu), "b": fmt_vec(b.nu),
                              "message": f"basic verdict {verdict} but wa {wa}"})
    # duality on generalized Kottwitz sets
    for kappa in range(-n, n + 1):
        for delta in dominant_grid(n, -2, 2):
            if sum(delta) != kappa:
                continue
            left = {dual_class(c) for c in kottwitz_set((n,), kappa, delta)}
            right = set(kottwitz_set((n,), -kappa, rd.minus_w0(delta)))
            if left != right or not all(in_kottwitz_set(c, -kappa, rd.minus_w0(delta))
                                        for c in left):
                fails.append({"delta": fmt_vec(delta), "message": "duality on B(G, eps, delta)"})
    return checked, fails, {"classes": len(classes), "mu": len(mus)}


def run_kottwitz(seed: Optional[int] = None, cases: Optional[int] = None,
                 max_n: int = 4) -> SuiteResult:
    res = SuiteResult("kottwitz", seed, 0)
    for n, (checked, fails, info) in zip(range(1, max_n + 1),
                                         _map(_kottwitz_n, list(range(1, max_n + 1)))):
        res.cases += checked
        res.failures.extend(fails)
        res.details[f"GL{n}"] = info
    return res


# ----- S_M(mu) certification -----

def smmu_grid(max_n: int = 5) -> list[tuple[rd.Coweight, rd.Levi]]:
    """Dominant mu with last entry 0 (the sets are translation equivariant) and bounded spread."""
    out = []
    for n in range(1, max_n + 1):
        spread = 6 if n <= 3 else 4 if n == 4 else 3
        for mu in dominant_grid(n, 0, spread):
            if mu[-1] != 0:
                continue
            for M in rd.compositions(n):
                out.append((mu, M))
    return out


def _smmu_one(args: tuple[rd.Coweight, rd.Levi]) -> list[dict]:
    mu, M = args
    n = len(mu)
    fails = []
    tag = {"mu": fmt_vec(mu), "levi": list(M)}
    dom = wt.sigma_m_dom(mu, M)
    mx = wt.sigma_m_max(mu, M)
    if not set(mx) <= set(dom):
        fails.append(dict(tag, message="max set escapes dom set"))
    if (rd.is_minuscule(mu) or M == rd.levi_T(n)) and set(mx) != set(dom):
        fails.append(dict(tag, message="bounds differ where they must agree"))
    total = sum(mu)
    if any(sum(lam) != total for lam in dom):
        fails.append(dict(tag, message="member with the wrong kappa"))
    if any(not rd.dominance_leq(rd.dominant_rep(rd.av_levi(M, lam)), mu) for lam in dom):
        fails.append(dict(tag, message="M-average of a member is not below mu"))
    res = wt.s_m_mu(mu, M)
    if res.exact and set(res.lower) != set(res.upper):
        fails.append(dict(tag, message="exact flag with different bounds"))
    if not set(wt.s_m_mu_cl(mu, M)) <= set(res.upper):
        fails.append(dict(tag, message="classical set escapes the upper bound"))
    return fails


def run_smmu(seed: Optional[int] = None, cases: Optional[int] = None,
             max_n: int = 5) -> SuiteResult:
    grid = smmu_grid(max_n)
    res = SuiteResult("smmu", seed, len(grid))
    for fails in _map(_smmu_one, grid):
        res.failures.extend(fails)
    return res


RUNNERS: dict[str, Callable[..., SuiteResult]] = {
    "tensor": run_tensor, "dsum": run_dsum, "cocycle": run_cocycle, "energy": run_energy,
    "bb": run_bb, "dimension": run_dimension, "kottwitz": run_kottwitz, "smmu": run_smmu,
}

DEFAULT_CASES = {"tensor": 200, "dsum": 200, "cocycle": 200, "energy": 200, "bb": 500}


def run_suite(name: str, seed: int = 0, cases: Optional[int] = None) -> SuiteResult:
    runner = RUNNERS[name]
    if name in DEFAULT_CASES:
        return runner(seed, cases if cases is not None else DEFAULT_CASES[name])
    return runner(seed, cases)
