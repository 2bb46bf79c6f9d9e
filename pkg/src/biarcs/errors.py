"""Exception hierarchy shared by all modules."""


class BiarcError(ValueError):
    """Base class for all geometry errors raised by this package."""


class DomainError(BiarcError):
    """An input lies outside an operation's domain (zero chord, zero vector...)."""


class ConstructionError(BiarcError):
    """A biarc or spline could not be assembled consistently."""

    def __init__(self, message: str, *, case_id: int | None = None, edge: int | None = None):
        self.case_id = case_id
        self.edge = edge
        prefix = []
        if edge is not None:
            prefix.append(f"edge {edge}")
        if case_id is not None:
            prefix.append(f"case {case_id}")
        if prefix:
            message = f"[{', '.join(prefix)}] {message}"
        super().__init__(message)


class ParseError(BiarcError):
    """An input document is malformed."""


class NotApplicable(Exception):
    """A joint strategy has no admissible solution for the given data.

    This is a signal for the fallback chain, not a failure.
    """
