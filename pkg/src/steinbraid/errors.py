"""
Exception types raised by steinbraid.

Verification failures are report data, not exceptions. The classes here cover
malformed input, misuse of the API and the two internal guards (handle-reduction
budget, structure-constant solving).
"""

from typing import Optional


class SteinbraidError(Exception):
    """Base class for every error raised by this package."""


class BraidSyntaxError(SteinbraidError, ValueError):
    """A braid word could not be tokenized."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class GeneratorIndexError(SteinbraidError, ValueError):
    """A generator index is outside 1..n-1 for the strand count."""


class StrandMismatchError(SteinbraidError, ValueError):
    """Two braid words on different strand counts were combined."""


class RingMismatchError(SteinbraidError, ValueError):
    """Two matrices over different rings were combined."""


class NotSymplecticError(SteinbraidError, ValueError):
    """A matrix that is not symplectic was used where one is required."""


class UnassignedRootError(SteinbraidError, KeyError):
    """An assignment has no image for a root."""


class StepBudgetExceeded(SteinbraidError, RuntimeError):
    """Handle reduction ran past its elementary step budget."""

    def __init__(self, budget: int, steps: int):
        self.budget = budget
        self.steps = steps
        super().__init__(f"handle reduction exceeded its budget of {budget} steps ({steps} used)")


class StructureConstantError(SteinbraidError, RuntimeError):
    """No unique set of commutator structure constants fits the matrices."""


class ConfigError(SteinbraidError, ValueError):
    """An invalid run configuration value."""
