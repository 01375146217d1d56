"""Shared exception types."""


class ValidationError(ValueError):
    """Malformed input data; the message names the offending id."""


class CertificateError(ValidationError):
    """A certificate (walk table, naturality data, ...) has the wrong shape."""


class PreconditionError(ValueError):
    """An operation's stated precondition does not hold."""


class SizeLimitError(ValueError):
    """An enumeration would exceed the configured cap."""


class UnsupportedConfigurationError(ValueError):
    """The requested configuration is outside the engine's scope."""
