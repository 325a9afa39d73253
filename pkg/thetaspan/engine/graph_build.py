# thetaspan/engine/graph_build.py
import logging

import numpy as np

from thetaspan.engine.geometry_core import (
    TWO_PI,
    clockwise_angle,
    cone_position,
    projection_in_cone,
)
from thetaspan.errors import DegenerateInputError
from thetaspan.models.geometry import GeomConfig, Point
from thetaspan.models.graph import ThetaGraph

logger = logging.getLogger(__name__)


def _ccw_offset(cfg: GeomConfig, apex: Point, target: Point, cone: int) -> float:
    """Clockwise angle of target measured from the cone's counter-clockwise ray"""
    start = cone * cfg.theta - cfg.half_angle
    return (clockwise_angle(apex, target) - start) % TWO_PI


def _pick(candidates: list[tuple[float, float, int]], tolerance: float) -> int | None:
    """candidates: (projection, ccw offset, id). Projections within tolerance of the
    minimum tie, and the tie goes to the clockwise-last candidate."""
    if not candidates:
        return None
    best = min(c[0] for c in candidates)
    tied = [c for c in candidates if c[0] <= best + tolerance]
    tied.sort(key=lambda c: (-c[1], c[0]))
    return tied[0][2]


def closest_in_cone(cfg: GeomConfig, points: list[Point], u: int, cone: int) -> int | None:
    """Projection-closest vertex to points[u] inside the given cone of u"""
    apex = points[u]
    candidates = []
    for v, p in enumerate(points):
        if v == u:
            continue
        c, _ = cone_position(cfg, apex, p)
        if c != cone:
            continue
        candidates.append((projection_in_cone(cfg, apex, p, cone), _ccw_offset(cfg, apex, p, cone), v))
    return _pick(candidates, cfg.tolerance)


def check_distinct(points: list[Point]) -> None:
    seen: dict[tuple[float, float], int] = {}
    for i, p in enumerate(points):
        key = (p.x, p.y)
        if key in seen:
            raise DegenerateInputError(
                f"duplicate point {key} at ids {seen[key]} and {i}", ids=[seen[key], i]
            )
        seen[key] = i


def _cone_rows(cfg: GeomConfig, coords: np.ndarray, u: int):
    """Vectorised cone labels, projections and ccw offsets of all points seen from u"""
    dx = coords[:, 0] - coords[u, 0]
    dy = coords[:, 1] - coords[u, 1]
    phi = np.mod(np.arctan2(dx, dy), TWO_PI)
    t = (phi - cfg.half_angle) / cfg.theta
    nearest = np.round(t)
    offset = np.abs(t - nearest) * cfg.theta
    dist = np.hypot(dx, dy)
    on_boundary = (offset <= cfg.tiebreak_rotation) | (offset * dist <= cfg.tolerance)
    cones = np.where(on_boundary, nearest, np.ceil(t)).astype(int) % cfg.k
    angles = cones * cfg.theta
    projections = dx * np.sin(angles) + dy * np.cos(angles)
    ccw = np.mod(phi - (angles - cfg.half_angle), TWO_PI)
    return cones, projections, ccw


def build_theta_graph(cfg: GeomConfig, points: list[Point]) -> ThetaGraph:
    """Connect every vertex to its projection-closest vertex in each cone"""
    if not points:
        raise DegenerateInputError("a θ-graph needs at least one point")
    check_distinct(points)
    n = len(points)
    coords = np.array([[p.x, p.y] for p in points], dtype=float)
    cone_choice: list[list[int | None]] = []
    edges: set[tuple[int, int]] = set()

    for u in range(n):
        row: list[int | None] = [None] * cfg.k
        if n > 1:
            cones, projections, ccw = _cone_rows(cfg, coords, u)
            for cone in range(cfg.k):
                members = [v for v in np.flatnonzero(cones == cone).tolist() if v != u]
                choice = _pick([(float(projections[v]), float(ccw[v]), v) for v in members], cfg.tolerance)
                row[cone] = choice
                if choice is not None:
                    edges.add((min(u, choice), max(u, choice)))
        cone_choice.append(row)

    logger.debug("built θ_%d-graph: n=%d, |E|=%d", cfg.k, n, len(edges))
    return ThetaGraph(config=cfg, vertices=list(points), edges=frozenset(edges), cone_choice=cone_choice)


def build_for_points(points: list[Point], k: int = 5, tolerance: float | None = None) -> ThetaGraph:
    """Build with the default tolerance policy unless one is given"""
    cfg = GeomConfig.for_points(points, k=k)
    if tolerance is not None:
        cfg = GeomConfig(k=k, tolerance=tolerance, tiebreak_rotation=cfg.tiebreak_rotation)
    return build_theta_graph(cfg, points)


def max_edges(cfg: GeomConfig, n: int) -> int:
    return cfg.k * n


def witness_is_minimal(graph: ThetaGraph, u: int, cone: int) -> bool:
    """Brute-force re-derivation of one recorded witness"""
    expected = closest_in_cone(graph.config, graph.vertices, u, cone)
    return expected == graph.cone_choice[u][cone]


