"""Exceptions raised while reading, realizing or writing T/G documents."""


class TgParseError(Exception):
    """Raised when a T/G document is malformed."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None) -> None:
        self.line = line
        self.source = source
        where = ":".join(str(part) for part in (source, line) if part is not None)
        super().__init__(f"{where}: {message}" if where else message)


class TgRealizeError(Exception):
    """Raised when the gluings of a parsed document do not describe a closed triangulation."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class TgEmitError(Exception):
    """Raised when a triangulation cannot be written as a T/G document."""
