"""Configuration for the mapping-torus pipeline."""

from typing import Literal

from pydantic import BaseModel

from mtorus.folding.config import DecompositionConfig


class PipelineConfig(BaseModel):
    """Configuration for build_mapping_torus.

    ``"full"`` verification additionally walks every edge cycle and compares first homology
    computed three ways: from the triangulation, from K/e and from the graph map.
    """

    verification: Literal["basic", "full"] = "basic"
    decomposition: DecompositionConfig = DecompositionConfig()
