"""Exception types shared across the package."""


class CaRigidityError(Exception):
    """Base class for all package-specific errors."""


class UniverseMismatchError(CaRigidityError):
    """Two vertex sets do not live over the same universe."""


class EmptyHyperedgeError(CaRigidityError):
    """An empty hyperedge reached an ordering or rigidity entry point."""


class NotAnArcOrderingError(CaRigidityError):
    """An operation requires an arc ordering but the given order is not one."""


class NotAnIntervalOrderingError(CaRigidityError):
    """An operation requires an interval ordering but the given order is not one."""


class TooLargeError(CaRigidityError):
    """The instance exceeds the enumeration cap for a brute-force path."""


class NotCircularArcError(CaRigidityError):
    """The hypergraph admits no arc ordering but the operation requires one."""


class RelationViolatedError(CaRigidityError):
    """Input sets do not satisfy the relation required by a placement step."""


class InconsistentPlacementError(CaRigidityError):
    """No arc placement satisfies the given constraints."""


class NotRealizableError(CaRigidityError):
    """Reconstruction verified post hoc and the order is not geometric for the graph."""


class TooManyUniversalVerticesError(CaRigidityError):
    """Arc reconstruction requires at most one universal vertex."""


class UniversalVertexError(CaRigidityError):
    """Per-vertex arc endpoints are undefined in the presence of a universal vertex."""


class AmbiguousDirectionError(CaRigidityError):
    """Edge direction rule gave no unique answer; a model precondition is violated."""


class PreconditionViolatedError(CaRigidityError):
    """A stated hypothesis of the requested check does not hold."""

    def __init__(self, hypothesis: str, message: str | None = None):
        self.hypothesis = hypothesis
        super().__init__(message or f"precondition violated: {hypothesis}")


class MalformedModelError(CaRigidityError):
    """An intersection model violates its structural invariants."""


class ParseError(CaRigidityError):
    """A document failed to parse; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
