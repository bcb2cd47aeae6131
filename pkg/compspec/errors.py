"""Exception types raised by the toolkit.

Everything derives from ``ValueError`` so callers that validate input the
pydantic way (``except ValueError``) keep working.
"""


class GraphError(ValueError):
    """Malformed graph data: asymmetric adjacency, loops, size overflow."""


class DisconnectedGraphError(GraphError):
    """An operation that needs a connected graph received a disconnected one."""


class Graph6Error(GraphError):
    """Bytes that are not a valid single-byte-header graph6 string."""


class CutError(GraphError):
    """A vertex set that is not a minimum vertex cut of the graph."""


class ParameterError(ValueError):
    """Construction, filter or command parameters violate an invariant."""


class EnumerationLimitError(ValueError):
    """Exhaustive enumeration requested beyond the supported vertex count."""


class QuarticError(ValueError):
    """A quotient quartic without a real spectrum (negative discriminant)."""
