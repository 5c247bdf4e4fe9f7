"""Exception hierarchy shared by every module."""


class GammaConeError(Exception):
    """Base class for all library errors."""


class GraphFormatError(GammaConeError, ValueError):
    """Malformed edge-list document or invalid graph data."""


class GuardExceeded(GammaConeError):
    """An exhaustive enumeration was requested on an instance that is too large."""


class CyclicOrientationError(GammaConeError, ValueError):
    """A counting or order operation received an orientation with a directed cycle."""


class NotBipartiteError(GammaConeError, ValueError):
    """The graph has an odd cycle, so no principal decomposition exists."""


class NotATreeError(GammaConeError, ValueError):
    """The operation is only defined for trees."""


class ConsistencyError(GammaConeError, RuntimeError):
    """An internal cross-check failed. Indicates a bug, never bad input."""


def guard(size, limit, what):
    if size > limit:
        raise GuardExceeded(f"{what}: size {size} exceeds limit {limit}")
