"""Exception types shared across the package."""


class SplitcapError(Exception):
    """Base class for all package errors."""


class EmptyTextError(SplitcapError):
    """Raised when a caption is empty after normalization."""


class FillArityError(SplitcapError):
    """Raised when the number of fills does not match the placeholder count."""


class ConfigError(SplitcapError):
    """Raised for invalid configuration values."""


class ParseError(SplitcapError):
    """Raised for malformed input files; carries the offending line/offset."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.line = line


class ShapeError(SplitcapError):
    """Raised when tensor shapes do not match a network contract."""


class DomainError(SplitcapError):
    """Raised for out-of-domain numeric arguments (e.g. non-positive scales)."""


class PseudoRejectError(SplitcapError):
    """Raised when no eligible region exists for some placeholder."""


class ConstraintUnsatError(SplitcapError):
    """Raised when constrained decoding cannot satisfy all constraints."""
