"""Exceptions raised while writing or reading SnapPea triangulation files."""


class SnapPeaError(Exception):
    """Raised when a triangulation has no SnapPea encoding."""


class SnapPeaParseError(Exception):
    """Raised when a SnapPea file does not match the subset this package writes."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
