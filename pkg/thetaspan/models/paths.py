import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, computed_field

SQRT5 = math.sqrt(5.0)


class CaseLabel(str, Enum):
    BASE_EDGE = "BaseEdge"
    SWAP_SIDES = "SwapSides"
    CASE_1 = "Case1"
    CASE_2 = "Case2"
    CASE_3 = "Case3"
    CASE_4A = "Case4a"
    CASE_4B = "Case4b"
    CASE_4C = "Case4c"
    CASE_4D = "Case4d"
    CASE_4E1 = "Case4e1"
    CASE_4E2 = "Case4e2"
    CASE_4E3 = "Case4e3"


class CaseStep(BaseModel):
    """One recursion step of the constructive path"""

    model_config = ConfigDict(frozen=True)

    label: CaseLabel
    source: int
    target: int
    size: float
    depth: int
    flagged: bool = False  # a deciding predicate sat within tolerance of a boundary


class PathResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertices: list[int]
    length: float
    case_trace: list[CaseStep] = Field(default_factory=list)

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def destination(self) -> int:
        return self.vertices[-1]

    @property
    def hops(self) -> int:
        return len(self.vertices) - 1

    def reversed(self) -> "PathResult":
        return PathResult(vertices=self.vertices[::-1], length=self.length, case_trace=self.case_trace)


class SpannerConstants(BaseModel):
    """The three constants of the θ₅ analysis"""

    model_config = ConfigDict(frozen=True)

    c: float = 2 * (2 + SQRT5)
    ratio_bound: float = math.sqrt(50 + 22 * SQRT5)
    lower_bound: float = 0.5 * (11 * SQRT5 - 17)

    @computed_field
    @property
    def ratio_from_c(self) -> float:
        return self.c / math.cos(math.pi / 5) * math.cos(math.pi / 10)


SPANNER_CONSTANTS = SpannerConstants()
