"""Exception hierarchy shared by the library and the CLI."""


class CoprimeAPError(Exception):
    """Base class for all package errors."""


class DomainError(CoprimeAPError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceError(CoprimeAPError):
    """A request exceeds a configured size or memory limit."""


class ConsistencyError(CoprimeAPError, AssertionError):
    """An internal invariant failed; always an implementation bug."""
