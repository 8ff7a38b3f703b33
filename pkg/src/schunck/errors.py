class SchunckError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SchunckError, ValueError):
    """Malformed input, failed validation, or a violated precondition."""


class ValidationError(InputError):
    """An algebra, group or module failed an identity check at load time."""


class ResourceCapError(SchunckError, RuntimeError):
    """An exhaustive search would exceed the configured size cap."""

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


class BoundedSearchError(SchunckError, RuntimeError):
    """A witness search gave up at its depth bound. Never a counterexample."""
