"""Exception types shared across the package."""


class GraphSpliceError(Exception):
    """Base class for all graphsplice errors."""


class InvalidGraphError(GraphSpliceError):
    """Malformed graph value: loop, endpoint out of range, negative order."""


class InvalidOrderingError(GraphSpliceError):
    """Ordering is not a bijection over the source vertex labels."""


class InvalidRuleError(GraphSpliceError):
    """Cutting rule malformed or out of range for the target graph."""


class NotApplicableError(GraphSpliceError):
    """Splicing rule rejected: fragment hanging counts do not line up."""


class JoinError(GraphSpliceError):
    """Fragments cannot be joined: length or half-vertex mismatch."""


class CapExceededError(GraphSpliceError):
    """Requested work is above an explicit size cap."""


class SystemDefinitionError(GraphSpliceError):
    """Splicing system or closure configuration is invalid."""


class ParseError(GraphSpliceError):
    """Text input could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
