from thetaspan.models.geometry import CanonicalTriangle, GeomConfig, Point, SimilarityTransform
from thetaspan.models.graph import ThetaGraph
from thetaspan.models.instances import AdversaryInstance, LowerBoundInstance, PlacementRecord
from thetaspan.models.paths import CaseLabel, CaseStep, PathResult, SpannerConstants
from thetaspan.models.reports import (
    BoundCheck,
    BoundsReport,
    CompetitivenessTable,
    RatioReport,
    RouteHop,
    RoutingOutcome,
)

__all__ = [
    "AdversaryInstance",
    "BoundCheck",
    "BoundsReport",
    "CanonicalTriangle",
    "CaseLabel",
    "CaseStep",
    "CompetitivenessTable",
    "GeomConfig",
    "LowerBoundInstance",
    "PathResult",
    "PlacementRecord",
    "Point",
    "RatioReport",
    "RouteHop",
    "RoutingOutcome",
    "SimilarityTransform",
    "SpannerConstants",
    "ThetaGraph",
]
