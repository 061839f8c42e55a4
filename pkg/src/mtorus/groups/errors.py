"""Exceptions raised by presentation handling."""


class PresentationError(Exception):
    """Raised when a presentation is malformed or too large for an exhaustive search."""

    def __init__(self, message: str, relator: int | None = None) -> None:
        self.relator = relator
        where = f" (relator {relator})" if relator is not None else ""
        super().__init__(f"{message}{where}")
