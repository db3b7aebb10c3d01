"""Exception types shared across the package."""


class QesError(Exception):
    """Base class for all package errors."""


class DomainError(QesError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ConstraintError(QesError):
    """A quasi-exact-solvability coupling constraint is not satisfied."""


class SolverError(QesError):
    """A numerical solve failed (no bracket, recurrence blow-up, ...)."""


class CutoffError(SolverError):
    """The radial grid cutoff is demonstrably too small for the requested state."""
