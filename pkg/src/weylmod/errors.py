class WeylmodError(Exception):
    """Base class for domain errors raised by this package."""


class InvalidInputError(WeylmodError, ValueError):
    """A root system type, weight, prime or quotient is malformed."""


class ResourceLimitError(WeylmodError):
    """An enumeration would exceed its configured cap."""


class ClassificationError(WeylmodError):
    """The classifier failed to find a reducibility witness where one must exist."""
