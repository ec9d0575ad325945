"""Exact decision procedures for the canonical-degree inequalities.

Three families live here:

* the Miyaoka-type predicates ``m1_value`` / ``m1_holds_for_all_alpha``,
  ``m1bis_value`` and ``m2_holds`` for curves on surfaces with
  non-negative Kodaira dimension;
* the negative-curve bounds: the quadratic ``bound_polynomial`` whose
  largest root ``max_k_negative`` caps the canonical degree, the slope
  bound ``beta_bound``, the genus bound ``genus_bound_from_epsilon`` and
  the additive constant ``b_epsilon``;
* the positive-curve bounds ``positive_curve_bounds`` with their
  quadratic minimizer ``alpha0`` and the ratio gap ``delta_ratio_gap``.

The Miyaoka predicates take raw integers (C2, kC, g): the quadratics
they evaluate do not involve the arithmetic genus, and several useful
probe inputs are intentionally not adjunction-consistent.  Interface
layers that do demand consistency validate through
``curvedata.CurveNumerics`` first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .curvedata import CurveNumerics, SurfaceInvariants
from .errors import DomainError, ImpossibleConfigurationError
from .exactmath import QuadSurd

__all__ = [
    "FormulaId",
    "BoundReport",
    "BetaBound",
    "PositiveCurveBounds",
    "m1_value",
    "m1_holds_for_all_alpha",
    "m1bis_value",
    "m2_holds",
    "bound_polynomial",
    "max_k_negative",
    "beta_bound",
    "genus_bound_from_epsilon",
    "b_epsilon",
    "alpha0",
    "positive_curve_bounds",
    "delta_ratio_gap",
    "negative_curve_reports",
    "positive_curve_reports",
]


class FormulaId(Enum):
    """Identifies which closed-form bound a report carries."""

    K_MAX_NEGATIVE = "K_MAX_NEGATIVE"
    BETA_BOUND = "BETA_BOUND"
    GENUS_BOUND = "GENUS_BOUND"
    B_EPSILON = "B_EPSILON"
    POS_GENUS_BOUND = "POS_GENUS_BOUND"
    POS_K_BOUND_PRINTED = "POS_K_BOUND_PRINTED"
    POS_K_BOUND_DERIVED = "POS_K_BOUND_DERIVED"
    POS_K_BOUND_OFFSET = "POS_K_BOUND_OFFSET"


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound: exact value, its floor, and the input echo."""

    formula_id: FormulaId
    bound: QuadSurd
    bound_floor: int
    g: int | None = None
    a: int | None = None
    eps: Fraction | None = None
    beta: Fraction | None = None
    x0: Fraction | None = None
    linear: Fraction | None = None   # companion linear bound (BETA_BOUND only)

    @classmethod
    def build(cls, formula_id: FormulaId, bound, **inputs) -> "BoundReport":
        if not isinstance(bound, QuadSurd):
            bound = QuadSurd(Fraction(bound))
        return cls(formula_id=formula_id, bound=bound,
                   bound_floor=math.floor(bound), **inputs)


# ---------------------------------------------------------------------------
# Miyaoka predicates
# ---------------------------------------------------------------------------

def m1_value(C2: int, kC: int, g: int, a: int, alpha) -> Fraction:
    """alpha^2*(C^2 + 3k - 6g + 6) - 4*alpha*(k - 3g + 3) + 2a."""
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise DomainError(f"alpha = {alpha} outside [0, 1]")
    lead = C2 + 3 * kC - 6 * g + 6
    lin = kC - 3 * g + 3
    return alpha * alpha * lead - 4 * alpha * lin + 2 * a


def m1_holds_for_all_alpha(C2: int, kC: int, g: int, a: int) -> bool:
    """True iff m1_value >= 0 on all of [0, 1].

    Decided exactly from the endpoints plus, when the quadratic opens
    upward with its vertex inside (0, 1), the vertex value.  Never by
    sampling.
    """
    lead = C2 + 3 * kC - 6 * g + 6
    lin4 = 4 * (kC - 3 * g + 3)
    if 2 * a < 0:                       # value at alpha = 0
        return False
    if lead - lin4 + 2 * a < 0:         # value at alpha = 1
        return False
    if lead > 0:
        vertex = Fraction(lin4, 2 * lead)
        # 4*lead*q(vertex) = 8*a*lead - lin4^2
        if 0 < vertex < 1 and 8 * a * lead - lin4 * lin4 < 0:
            return False
    return True


def m1bis_value(C2: int, kC: int, g: int, a: int) -> int:
    """2*(k - 3g + 3)^2 - a*(C^2 + 3k - 6g + 6).

    Non-positive for every qualifying curve (not rational-smooth, with
    k > 3(g-1)) on a surface of non-negative Kodaira dimension; a
    positive value certifies that no such curve exists.
    """
    if kC <= 3 * (g - 1):
        raise DomainError(
            f"k = {kC} <= 3(g-1) = {3 * (g - 1)}: the quadratic bound "
            "applies only beyond the critical slope")
    lin = kC - 3 * g + 3
    return 2 * lin * lin - a * (C2 + 3 * kC - 6 * g + 6)


def m2_holds(C2: int, kC: int, g: int, s: SurfaceInvariants) -> bool:
    """The two-sided inequality for surfaces with K^2 > 0.

    After clearing the positive denominator K^2:

        (c2 - K^2)*k^2 + ((4(g-1)+a)*k - 2(g-1)(3(g-1)+a))*K^2
            >= (c2 - K^2/3)*(k^2 - C^2*K^2) >= 0
    """
    if s.K2 <= 0:
        raise DomainError(f"K^2 = {s.K2} <= 0: predicate needs K^2 > 0")
    a = s.a
    gg = g - 1
    left = (s.c2 - s.K2) * kC * kC + ((4 * gg + a) * kC
                                      - 2 * gg * (3 * gg + a)) * s.K2
    middle = (s.c2 - Fraction(s.K2, 3)) * (kC * kC - C2 * s.K2)
    return left >= middle >= 0


# ---------------------------------------------------------------------------
# Negative-curve bounds
# ---------------------------------------------------------------------------

def bound_polynomial(k: int, g: int, a: int) -> int:
    """The quadratic 2*(k - 3(g-1))^2 - a*(3k - 6(g-1)).

    Its non-positivity characterises the canonical degrees a negative
    non-rational curve can have; ``max_k_negative`` returns its largest
    root.
    """
    gg = g - 1
    return 2 * (k - 3 * gg) ** 2 - a * (3 * k - 6 * gg)


def max_k_negative(g: int, a: int) -> QuadSurd:
    """Largest admissible canonical degree for a negative curve:

        3(g-1) + (3/4)a + (1/4)*sqrt(9a^2 + 24a(g-1))

    For a = 0 this is exactly 3(g-1).  Raises when the configuration
    admits no such curve at all (a = 0 with g = 0, or a negative
    discriminant, which happens only for g = 0 with 0 < a < 8/3).
    """
    if g < 0 or a < 0:
        raise DomainError(f"need g >= 0 and a >= 0, got g={g}, a={a}")
    if a == 0 and g == 0:
        raise ImpossibleConfigurationError(
            "a = 0 admits no negative rational curves: the bound "
            "polynomial is positive everywhere")
    if a == 0:
        return QuadSurd(Fraction(3 * (g - 1)))
    disc = 9 * a * a + 24 * a * (g - 1)
    if disc < 0:
        raise ImpossibleConfigurationError(
            f"discriminant 9a^2 + 24a(g-1) = {disc} < 0: the bound "
            "polynomial is positive everywhere, no such curve exists")
    return QuadSurd(Fraction(3 * (g - 1)) + Fraction(3, 4) * a,
                    Fraction(1, 4), disc)


class BetaBound(NamedTuple):
    exact: QuadSurd
    linear: Fraction


def beta_bound(a: int) -> BetaBound:
    """Slope bound for g > 1: exact 3 + (3/4)a + (1/4)*sqrt(9a^2+24a),
    together with the weaker linear form 4 + (3/2)a.  The exact value
    never exceeds the linear one."""
    if a < 0:
        raise DomainError(f"need a >= 0, got {a}")
    linear = Fraction(4) + Fraction(3, 2) * a
    if a == 0:
        return BetaBound(QuadSurd(Fraction(3)), linear)
    exact = QuadSurd(Fraction(3) + Fraction(3, 4) * a, Fraction(1, 4),
                     9 * a * a + 24 * a)
    return BetaBound(exact, linear)


def genus_bound_from_epsilon(eps, a: int) -> Fraction:
    """Genus cap 1 + 3a(eps+1)/(2*eps^2) for curves of slope 3 + eps."""
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError(f"need eps > 0, got {eps}")
    if a < 0:
        raise DomainError(f"need a >= 0, got {a}")
    return 1 + Fraction(3 * a, 2) * (eps + 1) / (eps * eps)


def b_epsilon(eps, a: int) -> Fraction:
    """Additive constant B(eps) making k <= (3+eps)(g-1) + B(eps).

    The closed form maximises (1/4)*sqrt(9a^2 + 24at) - eps*t over real
    t >= 0 and adds (3/4)a: for 0 < eps <= 1 the maximum sits at
    t = 3a(1-eps^2)/(8 eps^2), giving (3/4)a + 3a(1+eps^2)/(8 eps);
    for eps > 1 it sits at t = 0, giving (3/2)a.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError(f"need eps > 0, got {eps}")
    if a < 0:
        raise DomainError(f"need a >= 0, got {a}")
    if eps <= 1:
        return Fraction(3, 4) * a + Fraction(3 * a, 8) * (1 + eps * eps) / eps
    return Fraction(3, 2) * a


# ---------------------------------------------------------------------------
# Positive-curve bounds
# ---------------------------------------------------------------------------

def alpha0(beta, delta: int, C2: int) -> Fraction:
    """Interior minimizer (beta-3)(2*delta-C^2) / ((beta-2)(3*delta-C^2))
    of the Miyaoka quadratic for a positive curve; lies in (0, 1)."""
    beta = Fraction(beta)
    if beta <= 3:
        raise DomainError(f"need beta > 3, got {beta}")
    if C2 <= 0:
        raise DomainError(f"need C^2 > 0, got {C2}")
    if 2 * delta - C2 <= 0:
        raise DomainError(f"need 2*delta - C^2 > 0, got {2 * delta - C2}")
    return ((beta - 3) * (2 * delta - C2)) / ((beta - 2) * (3 * delta - C2))


class PositiveCurveBounds(NamedTuple):
    g_bound: Fraction
    k_bound_printed: Fraction
    k_bound_derived: Fraction
    k_bound_offset: Fraction


def positive_curve_bounds(beta, x0, a: int) -> PositiveCurveBounds:
    """Bounds for curves with C^2 > 0, slope beta > 3 and delta/C^2 > x0.

    With R = (3*x0 - 1)/(2*x0 - 1):

    * ``g_bound``          g  <= a(beta-2)/(beta-3)^2 * R + 1
    * ``k_bound_printed``  k  <= a(beta-2)/(beta(beta-3)^2) * R, the
      bound exactly as printed at the source of this formula family;
    * ``k_bound_derived``  beta*(g_bound - 1), the value the genus bound
      implies through k = beta(g-1) — larger than the printed one by a
      factor beta^2.  Both are reported; callers choose.
    * ``k_bound_offset``   k <= 2(g-1) + offset with
      offset = a(beta-2)^2/(beta-3)^2 * R.
    """
    beta = Fraction(beta)
    x0 = Fraction(x0)
    if beta <= 3:
        raise DomainError(f"need beta > 3, got {beta}")
    if x0 <= Fraction(1, 2):
        raise DomainError(f"need x0 > 1/2, got {x0}")
    if a < 0:
        raise DomainError(f"need a >= 0, got {a}")
    ratio = (3 * x0 - 1) / (2 * x0 - 1)
    square = (beta - 3) ** 2
    g_bound = a * (beta - 2) / square * ratio + 1
    k_printed = a * (beta - 2) / (beta * square) * ratio
    k_derived = beta * (g_bound - 1)
    k_offset = a * (beta - 2) ** 2 / square * ratio
    return PositiveCurveBounds(g_bound, k_printed, k_derived, k_offset)


def delta_ratio_gap(c: CurveNumerics) -> Fraction:
    """delta/C^2 - 1/2 for a positive curve with g > 1.

    Equals (1 + eps)(g-1)/(2 C^2) with eps = beta - 3, hence is
    non-negative whenever eps >= -1.
    """
    if c.C2 <= 0:
        raise DomainError(f"need C^2 > 0, got {c.C2}")
    if c.g <= 1:
        raise DomainError(f"need g > 1, got {c.g}")
    return Fraction(c.delta, c.C2) - Fraction(1, 2)


# ---------------------------------------------------------------------------
# Report assembly (consumed by the command-line layer)
# ---------------------------------------------------------------------------

def negative_curve_reports(g: int, a: int, eps=None) -> list[BoundReport]:
    """Evaluate every negative-curve bound that applies to (g, a, eps)."""
    eps = None if eps is None else Fraction(eps)
    reports = [
        BoundReport.build(FormulaId.K_MAX_NEGATIVE, max_k_negative(g, a),
                          g=g, a=a),
    ]
    exact, linear = beta_bound(a)
    reports.append(BoundReport.build(FormulaId.BETA_BOUND, exact,
                                     a=a, linear=linear))
    if eps is not None:
        reports.append(BoundReport.build(
            FormulaId.GENUS_BOUND, genus_bound_from_epsilon(eps, a),
            a=a, eps=eps))
        reports.append(BoundReport.build(
            FormulaId.B_EPSILON, b_epsilon(eps, a), a=a, eps=eps))
    return reports


def positive_curve_reports(beta, x0, a: int) -> list[BoundReport]:
    """Evaluate the positive-curve bounds at (beta, x0, a)."""
    beta = Fraction(beta)
    x0 = Fraction(x0)
    bounds = positive_curve_bounds(beta, x0, a)
    common = {"a": a, "beta": beta, "x0": x0}
    return [
        BoundReport.build(FormulaId.POS_GENUS_BOUND, bounds.g_bound, **common),
        BoundReport.build(FormulaId.POS_K_BOUND_PRINTED,
                          bounds.k_bound_printed, **common),
        BoundReport.build(FormulaId.POS_K_BOUND_DERIVED,
                          bounds.k_bound_derived, **common),
        BoundReport.build(FormulaId.POS_K_BOUND_OFFSET,
                          bounds.k_bound_offset, **common),
    ]
