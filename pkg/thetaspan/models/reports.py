from pydantic import BaseModel, ConfigDict, Field

from thetaspan.models.paths import PathResult

# Infinity stays explicit in JSON output ("Infinity"), never a sentinel number.
REPORT_CONFIG = ConfigDict(frozen=True, ser_json_inf_nan="strings")


class RatioReport(BaseModel):
    model_config = REPORT_CONFIG

    worst_pair: tuple[int, int]
    graph_distance: float
    euclidean_distance: float
    ratio: float
    connected: bool = True
    per_pair_ratios: list[list[float]] | None = None
    bound_checked: float | None = None
    bound_satisfied: bool | None = None


class BoundCheck(BaseModel):
    model_config = REPORT_CONFIG

    name: str
    passed: bool
    detail: str = ""
    witness: list[int] | None = None
    value: float | None = None
    bound: float | None = None


class BoundsReport(BaseModel):
    model_config = REPORT_CONFIG

    k: int
    n: int
    checks: list[BoundCheck] = Field(default_factory=list)
    ratio: RatioReport | None = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[BoundCheck]:
        return [check for check in self.checks if not check.passed]


class RoutingOutcome(BaseModel):
    model_config = REPORT_CONFIG

    path: PathResult
    reached: bool
    steps: int
    competitiveness: float | None = None


class CompetitivenessTable(BaseModel):
    model_config = REPORT_CONFIG

    pairs: dict[str, float] = Field(default_factory=dict)  # "s->t" -> competitiveness
    max_competitiveness: float = 0.0
    max_pair: tuple[int, int] | None = None
    mean_competitiveness: float = 0.0
    unreached: list[tuple[int, int]] = Field(default_factory=list)


class RouteHop(BaseModel):
    """One θ-routing hop with its length relative to the remaining distance"""

    model_config = REPORT_CONFIG

    source: int
    target: int
    length: float
    remaining: float  # |source, destination|
    factor: float  # length / remaining
