"""Exception hierarchy shared across the package."""


class AlphaPermError(Exception):
    """Base class for all package-specific errors."""


class ScalarFormatError(AlphaPermError, ValueError):
    """A scalar token does not parse under the requested field."""


class MatrixFormatError(AlphaPermError, ValueError):
    """A matrix file or text block is malformed."""


class MixedModeError(AlphaPermError, TypeError):
    """Exact and floating scalars were combined without an explicit conversion."""


class DomainError(AlphaPermError, ValueError):
    """An input is well-formed but outside an operation's domain.

    Examples: hafnian of an odd dimension, doubling a non-symmetric matrix,
    alpha-determinant at alpha = 0.
    """


class CapacityError(AlphaPermError):
    """A requested computation exceeds the configured size cap."""
