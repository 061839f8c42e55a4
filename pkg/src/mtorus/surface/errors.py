"""Exceptions raised while building the torus complex K."""


class SurfaceError(Exception):
    """Raised when an annulus cannot be built or K fails a surface check."""

    def __init__(
        self, message: str, annulus: int | None = None, simplex: int | None = None
    ) -> None:
        self.annulus = annulus
        self.simplex = simplex
        context = []
        if annulus is not None:
            context.append(f"annulus {annulus}")
        if simplex is not None:
            context.append(f"triangle {simplex}")
        where = f" ({', '.join(context)})" if context else ""
        super().__init__(f"{message}{where}")
