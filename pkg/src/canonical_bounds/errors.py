"""Exception types shared across the package."""

from __future__ import annotations


class CanonicalBoundsError(Exception):
    """Base class for every error raised by this library."""


class DomainError(CanonicalBoundsError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class MixedRadicalError(CanonicalBoundsError, ValueError):
    """Exact comparison of two incommensurable radicals was requested.

    Comparing r1 + s1*sqrt(t1) with r2 + s2*sqrt(t2) for distinct
    squarefree t1 != t2 (both s nonzero) is deliberately unsupported:
    no decision made by this library needs it, and failing loudly beats
    a silent fallback to approximation.
    """


class InvalidClassError(CanonicalBoundsError, ValueError):
    """Numerical curve data violates adjunction or another class invariant."""


class UndefinedRatioError(CanonicalBoundsError, ValueError):
    """A requested ratio (beta, delta/C^2) is undefined for this input."""


class ImpossibleConfigurationError(CanonicalBoundsError, ValueError):
    """The input combination cannot occur for the curves in question."""


class InconsistentInputError(CanonicalBoundsError, ValueError):
    """Mutually inconsistent invariants were supplied."""


class BudgetExceededError(CanonicalBoundsError, RuntimeError):
    """An enumeration would exceed its candidate budget.

    Carries the offending candidate count, the budget, and whatever
    results were already produced (``partial_results``, possibly empty),
    flagged by ``partial = True``.
    """

    def __init__(self, message: str, *, candidates: int, budget: int,
                 partial_results=()):
        super().__init__(message)
        self.candidates = candidates
        self.budget = budget
        self.partial_results = list(partial_results)
        self.partial = True
