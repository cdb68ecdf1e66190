"""Exception hierarchy shared by every dawnsp module."""


class DawnError(Exception):
    """Base class for all dawnsp errors."""


class GraphFormatError(DawnError, ValueError):
    """Input file is not in the expected textual or binary layout."""


class UnsupportedFormatError(GraphFormatError):
    """Recognised format variant that this package does not handle."""


class GraphBoundsError(DawnError, IndexError):
    """A node id lies outside ``[0, n)``."""


class ConfigurationError(DawnError, ValueError):
    """Inconsistent solver or harness configuration."""


class CapacityError(DawnError, MemoryError):
    """Requested output would exceed the configured size limit."""


class DomainError(DawnError, ValueError):
    """Argument outside the mathematical domain of an operation."""
