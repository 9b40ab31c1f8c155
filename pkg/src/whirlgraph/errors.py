"""Exception types shared across the package."""


class WhirlgraphError(Exception):
    """Base class for every error this package raises on purpose."""


class RangeError(WhirlgraphError):
    """Numeric argument outside its allowed range."""


class FractionError(WhirlgraphError):
    """Malformed fraction label."""


class GraphError(WhirlgraphError):
    """Structurally invalid graph, path, or edge."""


class MatchingError(GraphError):
    """Edge set is not independent."""


class MapError(WhirlgraphError):
    """Vertex map is not total, not injective, or leaves the codomain."""


class CoverageError(WhirlgraphError):
    """Two vertex sets fail to cover the graph exactly."""


class NotAnEdgeError(WhirlgraphError):
    """Pair of labels matches no whirl-edge template."""


class DomainError(WhirlgraphError):
    """Vertex outside the domain an operation requires."""


class OrientationError(WhirlgraphError):
    """Paths do not share oriented endpoints."""


class VertexError(WhirlgraphError):
    """Vertex missing from a graph."""


class InfeasibilityError(WhirlgraphError):
    """Requested path-system size exceeds the attainable maximum."""


class PathSystemError(WhirlgraphError):
    """Path system violates its invariants."""


class PreconditionError(WhirlgraphError):
    """A stated precondition failed; the message names the clause."""


class BudgetExceededError(WhirlgraphError):
    """Exhaustive search ran out of its node-expansion budget."""


class StructureError(WhirlgraphError):
    """A verification that must succeed did not."""
