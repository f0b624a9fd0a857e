"""Exception types raised across the package."""


class EulerMod4Error(Exception):
    """Base class for every error raised by eulermod4."""


# graph construction and codecs
class GraphError(EulerMod4Error, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class NodeOutOfRange(GraphError):
    pass


class Graph6Error(GraphError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass


class OrderTooLarge(Graph6Error):
    pass


class EdgeListError(GraphError):
    pass


# cycle engine
class NotEulerian(EulerMod4Error, ValueError):
    pass


class BudgetExceeded(EulerMod4Error, RuntimeError):
    """An exhaustive enumeration hit its hard cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class CycleBudgetExceeded(BudgetExceeded):
    pass


class DecompositionBudgetExceeded(BudgetExceeded):
    pass


class SameNode(EulerMod4Error, ValueError):
    pass


# classification / structure
class InconsistentCounts(EulerMod4Error, ValueError):
    pass


class Disconnected(EulerMod4Error, ValueError):
    pass


class NotBiconnected(EulerMod4Error, ValueError):
    pass


class PreconditionError(EulerMod4Error, ValueError):
    pass


# constructions
class TooShort(EulerMod4Error, ValueError):
    pass


class BadParameters(EulerMod4Error, ValueError):
    pass


class ClassCheckFailed(EulerMod4Error, RuntimeError):
    pass


class WouldCreateMultiEdge(EulerMod4Error, ValueError):
    pass


class InvalidPlan(EulerMod4Error, ValueError):
    pass


# graceful labelings
class PartialLabeling(EulerMod4Error, ValueError):
    pass
