"""Writer protocol shared by the triangulation serializers."""

from typing import TYPE_CHECKING, Protocol, runtime_checkable

if TYPE_CHECKING:
    from mtorus.triangulation.models import Triangulation3


@runtime_checkable
class TriangulationWriter(Protocol):
    """Interface for serializers that turn a triangulation into a text artifact."""

    extension: str

    def write(self, triangulation: "Triangulation3", name: str | None = None) -> str:
        """Serialize a closed triangulation. Returns the file contents."""
        ...
