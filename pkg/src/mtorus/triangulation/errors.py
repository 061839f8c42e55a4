"""Exceptions raised while building or checking a 3-dimensional triangulation."""


class TriangulationError(Exception):
    """Raised when gluing data is inconsistent or a triangulation fails a structural check."""

    def __init__(self, message: str, tetrahedron: int | None = None) -> None:
        self.tetrahedron = tetrahedron
        where = f" (tetrahedron {tetrahedron})" if tetrahedron is not None else ""
        super().__init__(f"{message}{where}")


class PipelineError(Exception):
    """Raised when a stage of build_mapping_torus fails; wraps the stage's own error."""

    def __init__(self, stage: str, original_error: Exception) -> None:
        self.stage = stage
        self.original_error = original_error
        super().__init__(f"{stage} failed: {original_error}")
