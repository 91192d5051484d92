"""Parsing and formatting of exact rationals ("p/q" strings)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import ParseError

RationalLike = Union[int, Fraction, str]


def q(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction; floats are refused."""
    if isinstance(x, bool):
        raise ParseError(f"not a rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {x!r}") from exc
    raise ParseError(f"not a rational: {x!r}")


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vec(v: Iterable[Fraction]) -> list[str]:
    return [fmt(Fraction(x)) for x in v]


def parse_vec(text: str) -> tuple[Fraction, ...]:
    """Parse a comma separated list such as "5/2,5/2,0"."""
    parts = [p for p in text.replace(" ", "").split(",")]
    if not parts or any(p == "" for p in parts):
        raise ParseError(f"malformed vector: {text!r}")
    return tuple(q(p) for p in parts)
