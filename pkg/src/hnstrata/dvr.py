"""Lattice invariants over k[[t]] by elimination in the truncated ring Z[t]/t^M.

A Laurent matrix g is first brought to integral form: every column is
scaled by a rational unit and the whole matrix by t^-m (m the least entry
valuation), so the entries lie in Z[t] and the smallest elementary divisor
is 0.  Elementary divisors d < M survive reduction mod t^M unchanged, and
min-valuation pivoting with the fraction-free column operation

    col_k <- (a / t^v) col_k - (b / t^v) col_j

is exact in the quotient ring (a / t^v is a unit there).  Once the largest
divisor d_max is known, every lattice derived from g by intersection or
projection along coordinates has divisors in [0, d_max], so M = d_max + 1
computes all of them exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Optional, Sequence

from .errors import SingularMatrix
from .laurent import Laurent, Matrix

Poly = list[int]


def _val(a: Poly) -> Optional[int]:
    for i, c in enumerate(a):
        if c:
            return i
    return None


def _mul(a: Poly, b: Poly, M: int) -> Poly:
    out = [0] * M
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), M - i)):
                y = b[j]
                if y:
                    out[i + j] += x * y
    return out


def _unit_part(a: Poly, v: int, M: int) -> Poly:
    return a[v:] + [0] * v if len(a) == M else (a[v:] + [0] * M)[:M]


def _combine(a2: Poly, x: Poly, b2: Poly, y: Poly, M: int) -> Poly:
    """a2 * x - b2 * y mod t^M."""
    p = _mul(a2, x, M)
    r = _mul(b2, y, M)
    return [s - u for s, u in zip(p, r)]


def _normalize_column(col: list[Poly], rows: Sequence[int]) -> None:
    g = 0
    for i in rows:
        for c in col[i]:
            if c:
                g = gcd(g, c)
                if g == 1:
                    return
    if g > 1:
        for i in rows:
            col[i] = [c // g for c in col[i]]


@dataclass(frozen=True)
class IntegralForm:
    """g = t^shift * A * diag(unit scalars) with A over Z[t] (n rows); A stored by columns."""

    n: int
    shift: int
    columns: tuple[tuple[tuple[int, ...], ...], ...]

    def truncated(self, M: int) -> list[list[Poly]]:
        return [[(list(e) + [0] * M)[:M] for e in col] for col in self.columns]


def integral_form(g: Matrix) -> IntegralForm:
    """Integral form of an n x c matrix (c >= n columns generating a lattice)."""
    n = len(g)
    vals = [e.val for row in g for e in row if not e.is_zero()]
    if not vals:
        raise SingularMatrix("zero matrix")
    m = min(vals)
    cols = []
    for j in range(len(g[0])):
        scale = reduce(lcm, (g[i][j].content_denominator() for i in range(n)), 1)
        col = []
        for i in range(n):
            e = g[i][j]
            if e.is_zero():
                col.append(())
                continue
            poly = [0] * (e.top - m + 1)
            for k, c in enumerate(e.coeffs):
                v = c * scale
                assert v.denominator == 1
                poly[e.val - m + k] = int(v)
            col.append(tuple(poly))
        cols.append(tuple(col))
    return IntegralForm(n, m, tuple(cols))


@dataclass(frozen=True)
class SmithData:
    """Pivot rows with their valuations (shift included) and residues of the left factor."""

    pivots: tuple[tuple[int, int], ...]
    residues: tuple[tuple[Fraction, ...], ...]
    precision: int

    @property
    def divisors(self) -> tuple[int, ...]:
        return tuple(sorted(v for _, v in self.pivots))


def _smith_truncated(cols: list[list[Poly]], n: int, M: int) -> Optional[tuple[list, list]]:
    rows_left = list(range(n))
    cols_left = list(range(len(cols)))
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pivots = []
    while rows_left:
        best = None
        for j in cols_left:
            col = cols[j]
            for r in rows_left:
                v = _val(col[r])
                if v is not None and (best is None or v < best[0]):
                    best = (v, r, j)
                    if v == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            return None
        v, r, j = best
        pcol = cols[j]
        a = pcol[r]
        a2 = _unit_part(a, v, M)
        others = [i for i in rows_left if i != r]
        for k in cols_left:
            if k == j:
                continue
            col = cols[k]
            b = col[r]
            if _val(b) is None:
                continue
            b2 = _unit_part(b, v, M)
            for i in others:
                col[i] = _combine(a2, col[i], b2, pcol[i], M)
            col[r] = [0] * M
            _normalize_column(col, others)
        # row operations row_i -= (c_i / a) row_r leave the other columns untouched
        lead = Fraction(a[v])
        mult = {i: Fraction(pcol[i][v]) / lead for i in others if pcol[i][v]}
        if mult:
            for x in range(n):
                P[x][r] += sum((m * P[x][i] for i, m in mult.items()), Fraction(0))
        pivots.append((r, v))
        rows_left.remove(r)
        cols_left.remove(j)
    residues = [tuple(P[x][r] for x in range(n)) for r, _ in pivots]
    return pivots, residues


def smith(form: IntegralForm, start_precision: int = 4) -> SmithData:
    """Elementary divisors and left-factor residues, doubling the precision until exact."""
    M = max(start_precision, 1)
    while True:
        result = _smith_truncated(form.truncated(M), form.n, M)
        if result is not None:
            pivots, residues = result
            if len(pivots) == form.n:
                return SmithData(tuple((r, v + form.shift) for r, v in pivots),
                                 tuple(residues), M)
        M *= 2
        if M > 1 << 16:
            raise SingularMatrix("matrix appears singular")


def elementary_divisors(g: Matrix) -> tuple[int, ...]:
    return smith(integral_form(g)).divisors


def _eliminate_row(cols: list[list[Poly]], i: int, live: Sequence[int], M: int
                   ) -> tuple[int, list[list[Poly]]]:
    """Pivot on row i; returns the pivot valuation and the other columns with row i cleared."""
    best = None
    for j, col in enumerate(cols):
        v = _val(col[i])
        if v is not None and (best is None or v < best[0]):
            best = (v, j)
            if v == 0:
                break
    if best is None:
        raise AssertionError("projection lost rank: truncation precision too small")
    v, j = best
    pcol = cols[j]
    a2 = _unit_part(pcol[i], v, M)
    out = []
    for k, col in enumerate(cols):
        if k == j:
            continue
        b = col[i]
        if _val(b) is None:
            out.append(col)
            continue
        b2 = _unit_part(b, v, M)
        new = list(col)
        for r in live:
            new[r] = _combine(a2, col[r], b2, pcol[r], M)
        new[i] = [0] * M
        _normalize_column(new, live)
        out.append(new)
    return v, out


@dataclass(frozen=True)
class SubsetTable:
    """sum of elementary divisors of Xi & W_S for every coordinate subset S (bitmask)."""

    n: int
    intersection: tuple[int, ...]
    projection: tuple[int, ...]

    def inter(self, mask: int) -> int:
        return self.intersection[mask]


def subset_table(g: Matrix) -> SubsetTable:
    form = integral_form(g)
    sd = smith(form)
    n = form.n
    d_norm = [v - form.shift for _, v in sd.pivots]
    M = max(d_norm) + 1
    total = sum(d_norm)
    full = (1 << n) - 1
    sigma = [0] * (1 << n)

    def dfs(i: int, cols: list[list[Poly]], s: int, elim: int) -> None:
        if i == n:
            sigma[elim] = s
            return
        dfs(i + 1, cols, s, elim)
        v, rest = _eliminate_row(cols, i, range(i + 1, n), M)
        dfs(i + 1, rest, s + v, elim | (1 << i))

    dfs(0, form.truncated(M), 0, 0)
    inter = []
    proj = []
    for S in range(1 << n):
        size = bin(S).count("1")
        comp = full ^ S
        inter.append(total - sigma[comp] + form.shift * size)
        proj.append(sigma[S] + form.shift * size)
    return SubsetTable(n, tuple(inter), tuple(proj))


def intersection_lattice(g: Matrix, S: Sequence[int]) -> Matrix:
    """Generators of Xi & W_S in the coordinates S, read from the columns left after
    eliminating the rows outside S (exact because the divisors are below the precision)."""
    form = integral_form(g)
    sd = smith(form)
    n = form.n
    M = max(v - form.shift for _, v in sd.pivots) + 1
    S = sorted(S)
    outside = [i for i in range(n) if i not in S]
    cols = form.truncated(M)
    for idx, i in enumerate(outside):
        live = [r for r in range(n) if r not in outside[:idx + 1]]
        _, cols = _eliminate_row(cols, i, live, M)
    assert len(cols) == len(S)
    return tuple(tuple(Laurent(form.shift, cols[j][i]) for j in range(len(S))) for i in S)
