"""Exception hierarchy shared by the library and the CLI."""


class BeliefError(Exception):
    """Base class for every error raised by beliefkit."""


class ValidationError(BeliefError, ValueError):
    """Malformed input: bad labels, mixed frames, negative masses."""


class NormalizationError(ValidationError):
    """Masses do not sum to one within tolerance."""


class ParseError(ValidationError):
    """A bba document could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(BeliefError, ValueError):
    """A measure or transform is undefined for the given bba."""


class TotalConflictError(DomainError):
    """Dempster normalization is impossible because the conflict is total."""
