"""Laurent polynomials over Q in one variable, and small matrices of them."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import ParseError, ShapeError, SingularMatrix
from .rational import fmt, q


class Laurent:
    """sum of c_i t^(val + i); normalized so both end coefficients are non-zero."""

    __slots__ = ("val", "coeffs")

    def __init__(self, val: int = 0, coeffs: Iterable = ()) -> None:
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        self.coeffs = tuple(cs[lo:hi])
        self.val = val + lo if self.coeffs else 0

    @classmethod
    def const(cls, c) -> "Laurent":
        return cls(0, (q(c) if not isinstance(c, Fraction) else c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Laurent":
        return cls(k, (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("valuation of zero")
        return self.val

    @property
    def top(self) -> int:
        return self.val + len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        i = k - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Laurent") -> "Laurent":
        other = _lift(other)
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.val, other.val)
        hi = max(self.top, other.top)
        return Laurent(lo, [self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)])

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent(self.val, [-c for c in self.coeffs])

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Laurent":
        return _lift(other) - self

    def __mul__(self, other: "Laurent") -> "Laurent":
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Laurent()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Laurent(self.val + other.val, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Laurent":
        return Laurent(self.val + k, self.coeffs) if self.coeffs else self

    def exact_div(self, other: "Laurent") -> "Laurent":
        """Quotient in Q[t, 1/t]; raises if other does not divide self."""
        other = _lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self.coeffs:
            return Laurent()
        num = list(self.coeffs)
        den = other.coeffs
        if len(num) < len(den):
            raise ArithmeticError("inexact Laurent division")
        quot = [Fraction(0)] * (len(num) - len(den) + 1)
        lead = den[-1]
        for i in range(len(quot) - 1, -1, -1):
            c = num[i + len(den) - 1] / lead
            quot[i] = c
            if c:
                for j, d in enumerate(den):
                    num[i + j] -= c * d
        if any(num):
            raise ArithmeticError("inexact Laurent division")
        return Laurent(self.val - other.val, quot)

    def content_denominator(self) -> int:
        return reduce(lcm, (c.denominator for c in self.coeffs), 1)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.val, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.val + i
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = fmt(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{fmt(a)}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Laurent({self.to_str()!r})"

    def __str__(self) -> str:
        return self.to_str()


def _lift(x) -> Laurent:
    if isinstance(x, Laurent):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Laurent.const(Fraction(x))
    raise TypeError(f"cannot use {x!r} as a Laurent polynomial")


ZERO = Laurent()
ONE = Laurent.const(1)

_TERM = re.compile(r"^(?:(?P<c>\d+(?:/\d+)?)\*?)?(?:(?P<var>[A-Za-z]\w*)(?:\^(?P<k>-?\d+))?)?$")


def parse(text: str, var: str = "t") -> Laurent:
    """Parse sums of terms "c*t^k" (c rational, k integer; "t^-1", "2", "-t" allowed)."""
    if not isinstance(text, str):
        if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
            return Laurent.const(text)
        raise ParseError(f"not a Laurent polynomial: {text!r}")
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty Laurent polynomial")
    terms, start = [], 0
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "^*":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    total = Laurent()
    for term in terms:
        sign = 1
        while term[:1] in ("+", "-"):
            sign = -sign if term[0] == "-" else sign
            term = term[1:]
        m = _TERM.match(term)
        if not term or not m or (m.group("c") is None and m.group("var") is None):
            raise ParseError(f"malformed term {term!r} in {text!r}")
        if m.group("var") is not None and m.group("var") != var:
            raise ParseError(f"unknown variable {m.group('var')!r}, expected {var!r}")
        c = Fraction(m.group("c")) if m.group("c") else Fraction(1)
        if m.group("var") is None:
            k = 0
        else:
            k = int(m.group("k")) if m.group("k") is not None else 1
        total = total + Laurent(k, (sign * c,))
    return total


Matrix = tuple[tuple[Laurent, ...], ...]


def as_matrix(rows: Sequence[Sequence], var: str = "t") -> Matrix:
    out = tuple(tuple(e if isinstance(e, Laurent) else parse(e, var) if isinstance(e, str)
                      else _lift(e) for e in row) for row in rows)
    if not out or any(len(r) != len(out) for r in out):
        raise ShapeError("expected a non-empty square matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def diag_monomials(exps: Sequence[int]) -> Matrix:
    n = len(exps)
    return tuple(tuple(Laurent.monomial(exps[i]) if i == j else ZERO for j in range(n))
                 for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ShapeError("inner dimensions differ")
    bt = transpose(b)
    return tuple(tuple(reduce(lambda s, p: s + p, (x * y for x, y in zip(row, col)), ZERO)
                       for col in bt) for row in a)


def mat_vec(a: Matrix, v: Sequence[Laurent]) -> tuple[Laurent, ...]:
    return tuple(reduce(lambda s, p: s + p, (x * y for x, y in zip(row, v)), ZERO) for row in a)


def scalar_mul(c: Laurent, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row and column (i, j) map to i * len(b) + j."""
    return tuple(tuple(x * y for x in ra for y in rb) for ra in a for rb in b)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b)
    rows = [tuple(a[i]) + (ZERO,) * m for i in range(n)]
    rows += [(ZERO,) * n + tuple(b[i]) for i in range(m)]
    return tuple(rows)


def det(a: Sequence[Sequence[Laurent]]) -> Laurent:
    """Fraction-free Bareiss elimination over the domain Q[t, 1/t]."""
    n = len(a)
    if n == 0:
        return ONE
    m = [list(r) for r in a]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def minor(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Laurent:
    return det([[a[i][j] for j in cols] for i in rows])


def adjugate(a: Matrix) -> Matrix:
    n = len(a)
    if n == 1:
        return ((ONE,),)
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows = [r for r in range(n) if r != j]
            cols = [c for c in range(n) if c != i]
            c = minor(a, rows, cols)
            out[i][j] = -c if (i + j) % 2 else c
    return tuple(tuple(r) for r in out)


def det_valuation(a: Matrix) -> int:
    d = det(a)
    if d.is_zero():
        raise SingularMatrix("matrix is singular")
    return d.valuation()


def min_valuation(entries: Iterable[Laurent]) -> Optional[int]:
    vals = [e.val for e in entries if e.coeffs]
    return min(vals) if vals else None


def matrix_to_strings(a: Matrix, var: str = "t") -> list[list[str]]:
    return [[e.to_str(var) for e in row] for row in a]
