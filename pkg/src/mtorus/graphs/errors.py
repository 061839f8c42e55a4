"""Exceptions for graph-map primitives and the marked-map file format."""

from mtorus.core.models import ValidationReport


class PathError(ValueError):
    """Raised when a path is not composable or does not live in the expected graph."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        where = f" at step {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class GenusError(ValueError):
    """Raised when a graph cannot be the spine of a once-punctured surface."""


class MarkedMapParseError(ValueError):
    """Raised for malformed marked-map input, with the offending line."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None) -> None:
        self.line = line
        self.source = source
        self.reason = message
        location = source or "<input>"
        if line is not None:
            location = f"{location}:{line}"
        super().__init__(f"{location}: {message}")


class InvalidMarkedMapError(ValueError):
    """Raised when a marked map fails validation before a pipeline run."""

    def __init__(self, report: ValidationReport) -> None:
        self.report = report
        super().__init__(f"invalid marked map: {report}")
