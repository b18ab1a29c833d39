class ResolveError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ResolveError, ValueError):
    pass


class ParseError(ResolveError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MembershipError(ResolveError, ValueError):
    pass


class StabilityError(ResolveError, ValueError):
    """The ideal failed the exchange condition, or a decomposition was not unique."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class StructuralError(ResolveError, RuntimeError):
    """A combinatorial identity that should hold for stable ideals failed."""
