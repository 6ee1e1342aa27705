"""Exception hierarchy shared by every module."""


class StructreeError(Exception):
    """Base class for all library errors."""


class BindingError(StructreeError):
    """A cut was used with a network it does not index."""


class PreconditionError(StructreeError, ValueError):
    """An operation was called outside its domain."""


class VertexLookupError(StructreeError, KeyError):
    """An unknown vertex name or index."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown vertex"


class CapacityGuardError(StructreeError):
    """Exhaustive enumeration would exceed the configured vertex limit."""

    def __init__(self, n_vertices: int, limit: int, what: str = "enumeration"):
        super().__init__(
            f"{what} over {n_vertices} vertices exceeds the vertex limit {limit}"
        )
        self.n_vertices = n_vertices
        self.limit = limit


class NestingViolationError(StructreeError):
    """A family passed as nested contains a crossing pair."""


class InternalConsistencyError(StructreeError):
    """A derived structure failed an internal invariant."""


class ParseError(StructreeError):
    """Malformed network or tree input. ``location`` names the line or field."""

    def __init__(self, message: str, location: str | None = None):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
