"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HNStrataError(Exception):
    """Base class for all package errors."""


class ShapeError(HNStrataError, ValueError):
    """Vectors or classes of incompatible lengths or Levi shapes."""


class IntegralityError(HNStrataError, ValueError):
    """A Newton polygon has a non-integral breakpoint."""


class InconsistentKappa(HNStrataError, ValueError):
    """The slope sum of a candidate HN class disagrees with its Kottwitz invariant."""


class KappaMismatch(HNStrataError, ValueError):
    """kappa(b') differs from kappa(b) minus the sum of mu."""


class NotMinuscule(HNStrataError, ValueError):
    pass


class EmptyStratum(HNStrataError, ValueError):
    pass


class SingularMatrix(HNStrataError, ValueError):
    pass


class ZeroVector(HNStrataError, ValueError):
    pass


class RepeatedSlopes(HNStrataError, ValueError):
    """HN over coordinate subsets needs pairwise distinct isocrystal slopes."""


class ParseError(HNStrataError, ValueError):
    pass
