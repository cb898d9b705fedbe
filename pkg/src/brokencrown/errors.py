"""Exception types shared across the package."""


class BrokenCrownError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(BrokenCrownError):
    """A construction parameter is out of range or inconsistent."""


class MissingArc(BrokenCrownError):
    """An arc scheduled for removal is not present in the graph."""


class NotContractible(BrokenCrownError):
    """The requested vertex pair does not satisfy the smoothing preconditions."""


class MalformedCycle(BrokenCrownError):
    """A vertex sequence is not a Hamiltonian cycle of a vertex-split image."""


class PropertyViolation(BrokenCrownError):
    """An enumerated cycle breaks the single-entry/single-exit hub property."""


class ParseError(BrokenCrownError):
    """Instance text is malformed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimensionMismatch(ParseError):
    """Declared vertex or edge counts disagree with the file body."""
