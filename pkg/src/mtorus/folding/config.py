"""Configuration for the fold decomposition."""

from pydantic import BaseModel


class DecompositionConfig(BaseModel):
    """Configuration for decompose."""

    max_folds: int = 10_000
    require_tight: bool = False
