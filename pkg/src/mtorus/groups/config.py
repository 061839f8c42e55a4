"""Configuration for presentation simplification."""

from typing import Self

from pydantic import BaseModel, model_validator


class TietzeConfig(BaseModel):
    """Configuration for tietze_simplify."""

    max_moves: int = 1000


class WhiteheadConfig(BaseModel):
    """Configuration for the Whitehead normal form search.

    ``orbit_cap`` bounds the number of presentations visited among those of minimal length;
    canonical keys range over all signed generator permutations, so ``max_generators`` keeps
    that enumeration small.
    """

    orbit_cap: int = 20_000
    max_generators: int = 4

    @model_validator(mode="after")
    def _check_caps(self) -> Self:
        if self.orbit_cap < 1:
            msg = "orbit_cap must be positive"
            raise ValueError(msg)
        if not 1 <= self.max_generators <= 6:
            msg = "max_generators must lie between 1 and 6"
            raise ValueError(msg)
        return self
