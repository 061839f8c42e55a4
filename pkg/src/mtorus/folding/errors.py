"""Exceptions raised while decomposing a marked map into subdivisions and folds."""


class DecompositionError(Exception):
    """Raised when a marked map cannot be decomposed into folds and a homeomorphism."""

    def __init__(self, message: str, stage: int | None = None) -> None:
        self.stage = stage
        where = f" (stage {stage})" if stage is not None else ""
        super().__init__(f"{message}{where}")


class FoldError(Exception):
    """Raised when a subdivision or fold step violates its contract."""

    def __init__(self, message: str, candidate: object | None = None) -> None:
        self.candidate = candidate
        suffix = f": candidate {candidate}" if candidate is not None else ""
        super().__init__(f"{message}{suffix}")
