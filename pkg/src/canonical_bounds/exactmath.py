"""Exact arithmetic for rationals and quadratic surds.

Every bound value in this package is either rational or of the form
``r + s*sqrt(t)`` with r, s rational and t a non-negative integer.  This
module provides that value type together with exact comparison, exact
floor and high-precision decimal rendering, so that every inequality is
decided without floating point.

Rationals are plain ``fractions.Fraction`` (arbitrary precision, lowest
terms, positive denominator), re-exported here as ``Rational``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import IntEnum
from fractions import Fraction

from .errors import DomainError, MixedRadicalError

Rational = Fraction

__all__ = [
    "Ordering",
    "QuadSurd",
    "Rational",
    "cmp",
    "floor",
    "approx_str",
]


class Ordering(IntEnum):
    """Result of an exact three-way comparison."""

    LT = -1
    EQ = 0
    GT = 1


def _sign(q: Fraction | int) -> int:
    return (q > 0) - (q < 0)


def _split_square(t: int) -> tuple[int, int]:
    """Factor ``t = f*f * core`` with ``core`` squarefree.

    Trial division runs only up to the cube root of the remaining
    cofactor; whatever survives has at most two prime factors, hence is
    a perfect square or already squarefree.
    """
    if t < 0:
        raise DomainError("cannot extract square factors of a negative integer")
    if t in (0, 1):
        return 1, t
    f = 1
    core = 1
    p = 2
    while p * p * p <= t:
        if t % p == 0:
            e = 0
            while t % p == 0:
                t //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                core *= p
        p += 1 if p == 2 else 2
    root = math.isqrt(t)
    if root * root == t:
        f *= root
    else:
        core *= t
    return f, core


@dataclass(frozen=True, eq=False)
class QuadSurd:
    """The real number ``r + s*sqrt(t)``, kept in canonical form.

    After construction either ``s == 0 and t == 0`` (a rational value)
    or ``t`` is squarefree and greater than 1.  Perfect-square factors
    of the radicand are folded into ``s`` at construction, so structural
    equality of the fields coincides with equality of the real values.
    Instances are immutable and safe to share between threads.
    """

    r: Fraction
    s: Fraction = Fraction(0)
    t: int = 0

    def __post_init__(self):
        r = Fraction(self.r)
        s = Fraction(self.s)
        t = self.t
        if t != int(t):
            raise DomainError(f"radicand must be an integer, got {t!r}")
        t = int(t)
        if t < 0:
            raise DomainError(f"negative radicand {t}")
        if s == 0 or t == 0:
            s, t = Fraction(0), 0
        else:
            root = math.isqrt(t)
            if root * root == t:
                r, s, t = r + s * root, Fraction(0), 0
            else:
                f, core = _split_square(t)
                s, t = s * f, core
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, value: Fraction | int) -> "QuadSurd":
        return cls(Fraction(value))

    @classmethod
    def sqrt(cls, t: int) -> "QuadSurd":
        """Exact square root of a non-negative integer."""
        return cls(Fraction(0), Fraction(1), t)

    @classmethod
    def sqrt_rational(cls, value: Fraction | int) -> "QuadSurd":
        """Exact square root of a non-negative rational p/q, as sqrt(p*q)/q."""
        value = Fraction(value)
        if value < 0:
            raise DomainError(f"square root of negative rational {value}")
        return cls(Fraction(0), Fraction(1, value.denominator),
                   value.numerator * value.denominator)

    # -- predicates ---------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.s == 0

    @property
    def rational_value(self) -> Fraction:
        if self.s != 0:
            raise DomainError(f"{self} is irrational")
        return self.r

    def sign(self) -> int:
        """Exact sign, decided by the squaring rule (never numerically)."""
        if self.s == 0:
            return _sign(self.r)
        if self.r == 0:
            return _sign(self.s)
        sr, ss = _sign(self.r), _sign(self.s)
        if sr == ss:
            return sr
        # opposite signs: value sign follows the part with larger square
        left = self.r * self.r
        right = self.s * self.s * self.t
        if left == right:        # unreachable once t is squarefree > 1
            return 0
        return sr if left > right else ss

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "QuadSurd | None":
        if isinstance(value, QuadSurd):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadSurd(Fraction(value))
        return None

    def _combined_t(self, other: "QuadSurd") -> int:
        if self.s != 0 and other.s != 0 and self.t != other.t:
            raise MixedRadicalError(
                f"unsupported exact combination of sqrt({self.t}) and sqrt({other.t})")
        return self.t if self.s != 0 else other.t

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = self._combined_t(other)
        return QuadSurd(self.r + other.r, self.s + other.s, t)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.r, -self.s, self.t)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.s == 0:
            return QuadSurd(self.r * other.r, self.r * other.s, other.t)
        if other.s == 0:
            return QuadSurd(self.r * other.r, self.s * other.r, self.t)
        if self.t != other.t:
            raise MixedRadicalError(
                f"unsupported exact product of sqrt({self.t}) and sqrt({other.t})")
        return QuadSurd(self.r * other.r + self.s * other.s * self.t,
                        self.r * other.s + self.s * other.r, self.t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QuadSurd):
            if not other.is_rational:
                return NotImplemented
            other = other.rational_value
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a surd by zero")
        inv = Fraction(1, 1) / Fraction(other)
        return QuadSurd(self.r * inv, self.s * inv, self.t)

    # -- comparison ---------------------------------------------------

    def cmp(self, other) -> Ordering:
        """Exact three-way comparison against a surd, rational or integer."""
        coerced = self._coerce(other)
        if coerced is None:
            raise TypeError(f"cannot compare QuadSurd with {type(other).__name__}")
        return Ordering((self - coerced).sign())

    def __eq__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return (self.r, self.s, self.t) == (coerced.r, coerced.s, coerced.t)

    def __hash__(self):
        if self.s == 0:
            return hash(self.r)
        return hash((self.r, self.s, self.t))

    def __lt__(self, other):
        return self.cmp(other) is Ordering.LT

    def __le__(self, other):
        return self.cmp(other) is not Ordering.GT

    def __gt__(self, other):
        return self.cmp(other) is Ordering.GT

    def __ge__(self, other):
        return self.cmp(other) is not Ordering.LT

    def __bool__(self):
        return self.sign() != 0

    # -- rounding and rendering ----------------------------------------

    def __floor__(self) -> int:
        """Greatest integer <= value, via integer square-root bracketing."""
        if self.s == 0:
            return math.floor(self.r)
        num, den = self.s.numerator, self.s.denominator
        # floor(|s|*sqrt(t)) == isqrt(floor(s^2 * t)) exactly
        w = math.isqrt((num * num * self.t) // (den * den))
        base = math.floor(self.r) + (w if num > 0 else -w - 1)
        while (self - (base + 1)).sign() >= 0:
            base += 1
        while (self - base).sign() < 0:
            base -= 1
        return base

    def __float__(self) -> float:
        return float(self.r) + float(self.s) * math.sqrt(self.t)

    def to_decimal(self, digits: int = 50) -> Decimal:
        """Decimal approximation correct to ``digits`` significant digits."""
        with localcontext() as ctx:
            ctx.prec = digits + 10
            value = (Decimal(self.r.numerator) / Decimal(self.r.denominator)
                     + Decimal(self.s.numerator) / Decimal(self.s.denominator)
                     * Decimal(self.t).sqrt())
            ctx.prec = digits
            return +value

    def to_json(self) -> dict:
        """Wire form: exact fields plus a 12-significant-digit decimal."""
        return {
            "r": str(self.r),
            "s": str(self.s),
            "t": self.t,
            "approx": approx_str(self),
        }

    def __str__(self):
        if self.s == 0:
            return str(self.r)
        mag = abs(self.s)
        radical = f"sqrt({self.t})" if mag == 1 else f"{mag}*sqrt({self.t})"
        if self.r == 0:
            return radical if self.s > 0 else f"-{radical}"
        glue = "+" if self.s > 0 else "-"
        return f"{self.r} {glue} {radical}"


def cmp(x, y) -> Ordering:
    """Exact ordering of two values (QuadSurd, Fraction or int)."""
    coerced = QuadSurd._coerce(x)
    if coerced is None:
        raise TypeError(f"cannot compare {type(x).__name__} exactly")
    return coerced.cmp(y)


def floor(value) -> int:
    """Exact floor of a QuadSurd, Fraction or int."""
    if isinstance(value, QuadSurd):
        return math.floor(value)
    return math.floor(Fraction(value))


def approx_str(value, significant: int = 12) -> str:
    """Decimal string with the given number of significant digits."""
    if isinstance(value, QuadSurd):
        dec = value.to_decimal(significant + 8)
    else:
        frac = Fraction(value)
        with localcontext() as ctx:
            ctx.prec = significant + 8
            dec = Decimal(frac.numerator) / Decimal(frac.denominator)
    with localcontext() as ctx:
        ctx.prec = significant
        return str(+dec)
