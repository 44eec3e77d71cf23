"""Exception hierarchy shared by the library and the command line."""


class MultihilbError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(MultihilbError, ValueError):
    """Input that cannot be parsed or violates a structural invariant."""


class DomainError(MultihilbError, ValueError):
    """Well-formed input outside an operation's mathematical domain.

    Examples: asking for Betti numbers of a non-ACM set, lifting a
    non-artinian staircase, peeling a set with a single fiber.
    """


class InconsistencyError(MultihilbError, RuntimeError):
    """Two independent computations that must agree did not.

    This never signals bad input; it means a bug in either the rank
    oracle or a closed-form formula.
    """
