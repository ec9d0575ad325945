"""Numerical invariants of surfaces and curves, with adjunction enforced.

A surface enters only through the triple (c2, K^2, Kodaira dimension);
the derived quantity a = 3*c2 - K^2 drives all the bounds.  A curve
enters through (g, p_a, C^2, K.C); construction rejects data violating
adjunction C^2 + K.C = 2*p_a - 2 or the singularity bound delta >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InconsistentInputError, InvalidClassError, UndefinedRatioError

__all__ = [
    "KodairaDimension",
    "SurfaceInvariants",
    "CurveNumerics",
    "a_invariant",
    "pa_from_adjunction",
    "beta",
    "epsilon_excess",
]


class KodairaDimension(Enum):
    MINUS_INFINITY = "-inf"
    ZERO = "0"
    ONE = "1"
    TWO = "2"

    @classmethod
    def parse(cls, text: str) -> "KodairaDimension":
        aliases = {"-inf": cls.MINUS_INFINITY, "-infinity": cls.MINUS_INFINITY,
                   "0": cls.ZERO, "1": cls.ONE, "2": cls.TWO}
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise InvalidClassError(f"unknown Kodaira dimension {text!r}") from None


def pa_from_adjunction(C2: int, kC: int) -> int:
    """Arithmetic genus (C^2 + K.C)/2 + 1; rejects odd C^2 + K.C."""
    if (C2 + kC) % 2:
        raise InvalidClassError(
            f"C^2 + K.C = {C2 + kC} is odd: no divisor class on a smooth "
            "surface has these intersection numbers")
    return (C2 + kC) // 2 + 1


@dataclass(frozen=True)
class SurfaceInvariants:
    """Topological Euler number c2, canonical self-intersection K^2,
    and the (user-supplied, never computed) Kodaira dimension."""

    c2: int
    K2: int
    kodaira: KodairaDimension

    def __post_init__(self):
        if self.kodaira is not KodairaDimension.MINUS_INFINITY and self.a < 0:
            raise InconsistentInputError(
                f"a = 3*c2 - K^2 = {self.a} < 0 is impossible for "
                "non-negative Kodaira dimension")

    @property
    def a(self) -> int:
        return 3 * self.c2 - self.K2


def a_invariant(s: SurfaceInvariants) -> int:
    """The surface invariant a = 3*c2 - K^2."""
    return 3 * s.c2 - s.K2


@dataclass(frozen=True)
class CurveNumerics:
    """Geometric genus g, arithmetic genus p_a, self-intersection C^2
    and canonical degree K.C of a curve on a smooth surface."""

    g: int
    pa: int
    C2: int
    kC: int

    def __post_init__(self):
        if self.g < 0:
            raise InvalidClassError(f"geometric genus {self.g} < 0")
        if self.C2 + self.kC != 2 * self.pa - 2:
            raise InvalidClassError(
                f"adjunction violated: C^2 + K.C = {self.C2 + self.kC} "
                f"but 2*p_a - 2 = {2 * self.pa - 2}")
        if self.pa < self.g:
            raise InvalidClassError(
                f"delta = p_a - g = {self.pa - self.g} < 0")

    @classmethod
    def from_adjunction(cls, g: int, C2: int, kC: int) -> "CurveNumerics":
        """Construct with p_a derived from adjunction."""
        return cls(g=g, pa=pa_from_adjunction(C2, kC), C2=C2, kC=kC)

    @property
    def delta(self) -> int:
        return self.pa - self.g

    @property
    def beta(self) -> Fraction:
        if self.g == 1:
            raise UndefinedRatioError("beta = K.C/(g-1) is undefined at g = 1")
        return Fraction(self.kC, self.g - 1)

    @property
    def x_ratio(self) -> Fraction:
        if self.C2 == 0:
            raise UndefinedRatioError("x = delta/C^2 is undefined at C^2 = 0")
        return Fraction(self.delta, self.C2)


def beta(c: CurveNumerics) -> Fraction:
    """The ratio K.C/(g-1); undefined at g = 1."""
    return c.beta


def epsilon_excess(c: CurveNumerics) -> Fraction:
    """beta - 3, the excess over the critical slope; needs g > 1.

    May be <= 0; callers that require a strictly positive excess must
    check the returned value themselves.
    """
    if c.g <= 1:
        raise UndefinedRatioError("epsilon = beta - 3 needs g > 1")
    return c.beta - 3
