"""Exception hierarchy shared by all modules."""


class HubStateError(Exception):
    """Base class for every error raised by this package."""


class GraphParseError(HubStateError, ValueError):
    """Malformed edge-list text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(HubStateError, ValueError):
    """An argument lies outside the operation's domain (bad vertex, size mismatch, ...)."""


class CapacityError(HubStateError, ValueError):
    """Input exceeds a hard size limit of a dense or exhaustive routine."""


class CoverError(DomainError):
    """A hub set fails to cover every edge of its graph."""

    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"hub set does not cover edge ({edge[0]},{edge[1]})")
