"""Exception types shared across the package.

All inherit from ValueError so callers that only care about "bad input"
can catch one base class.
"""


class RollsimError(ValueError):
    """Base class for package errors."""


class DomainError(RollsimError):
    """Numeric argument outside its mathematical domain."""


class ConfigError(RollsimError):
    """Inconsistent or invalid configuration."""


class InputError(RollsimError):
    """Malformed data passed to an operation."""


class StateError(RollsimError):
    """Object is not in the state the operation requires."""


class SchemaError(RollsimError):
    """On-disk file violates the documented format."""
