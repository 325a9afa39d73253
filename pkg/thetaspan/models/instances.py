from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator

from thetaspan.models.geometry import Point


class PlacementRecord(BaseModel):
    """How one generated vertex was placed (the chosen reading)"""

    model_config = ConfigDict(frozen=True)

    step: int
    vertex: int
    rule: str
    reading: str = ""


class LowerBoundInstance(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: list[Point]
    source: int
    target: int
    epsilon: float
    expected_ratio: float
    expected_path: list[int] | None = None
    edge_lengths: dict[str, float] = Field(default_factory=dict)
    placements: list[PlacementRecord] = Field(default_factory=list)
    tolerance: float = 0.0

    @field_validator("epsilon")
    @classmethod
    def validate_epsilon(cls, v):
        if not v > 0:
            raise ValueError("epsilon must be positive")
        return v


class AdversaryInstance(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: list[Point]
    source: int
    destination: int
    cycles: int
    epsilon: float
    spiral: list[int] = Field(default_factory=list)  # main routing vertices, source first
    auxiliary: list[int] = Field(default_factory=list)
    tolerance: float = 0.0

    @field_validator("cycles")
    @classmethod
    def validate_cycles(cls, v):
        if v < 1:
            raise ValueError("at least one cycle is required")
        return v

    @computed_field
    @property
    def main_steps(self) -> int:
        """Hops from one spiral vertex to the next, each longer than |source destination|"""
        return max(len(self.spiral) - 1, 0)
