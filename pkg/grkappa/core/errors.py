"""Exception types raised by the grkappa core."""


class GrkappaError(Exception):
    """Base class for all grkappa errors."""


class DomainError(GrkappaError, ValueError):
    """Input outside the domain of an operation (bad partition, wrong e, ...)."""


class InexactDivisionError(GrkappaError, ArithmeticError):
    """A division that has to be exact in Z[q, q^-1] left a remainder."""


class InconsistentInputError(GrkappaError):
    """A decomposition step received data that admits no valid solution."""


class VerificationFailure(GrkappaError):
    """An independent cross-check disagreed."""
