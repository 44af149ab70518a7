"""Exception hierarchy shared by every module."""


class JackdError(Exception):
    """Base class for all library errors."""


class DomainError(JackdError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SizeError(JackdError, ValueError):
    """A configured size cap was exceeded."""


class SingularParameterError(JackdError, ArithmeticError):
    """The Jack parameter makes the deformed inner product degenerate."""


class ConsistencyError(JackdError, ArithmeticError):
    """An internal exactness check failed; this indicates a bug."""
