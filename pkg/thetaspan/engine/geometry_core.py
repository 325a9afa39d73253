# thetaspan/engine/geometry_core.py
"""Planar primitives under one tie-breaking policy.

Angles are measured clockwise from the +y direction. Cone C_i of an apex is the
half-open interval (iθ - π/k, iθ + π/k]: a point on a boundary ray belongs to
the cone on its counter-clockwise side, which is what rotating every boundary
clockwise by an infinitesimal angle produces.
"""
import math

from thetaspan.models.geometry import (
    CanonicalTriangle,
    GeomConfig,
    Point,
    SimilarityTransform,
    require_distinct,
)

TWO_PI = 2 * math.pi


def clockwise_angle(apex: Point, target: Point) -> float:
    """Clockwise angle of target around apex, from +y, in [0, 2π)"""
    angle = math.atan2(target.x - apex.x, target.y - apex.y)
    return angle % TWO_PI


def wrap(angle: float) -> float:
    """Wrap an angle into (-π, π]"""
    angle = math.fmod(angle, TWO_PI)
    if angle <= -math.pi:
        angle += TWO_PI
    elif angle > math.pi:
        angle -= TWO_PI
    return angle


def direction(angle: float) -> tuple[float, float]:
    """Unit vector at a clockwise-from-+y angle"""
    return (math.sin(angle), math.cos(angle))


def bisector(cfg: GeomConfig, cone: int) -> tuple[float, float]:
    return direction(cone * cfg.theta)


def along(origin: Point, angle: float, distance: float) -> Point:
    dx, dy = direction(angle)
    return Point(x=origin.x + distance * dx, y=origin.y + distance * dy)


def _boundary_slack(cfg: GeomConfig, offset: float, dist: float) -> bool:
    """True when an angular offset from a boundary ray is within tolerance"""
    return offset <= cfg.tiebreak_rotation or offset * dist <= cfg.tolerance


def cone_position(cfg: GeomConfig, apex: Point, target: Point) -> tuple[int, bool]:
    """Cone index plus whether the target sat on a boundary (within tolerance)"""
    require_distinct(apex, target)
    phi = clockwise_angle(apex, target)
    t = (phi - cfg.half_angle) / cfg.theta
    nearest = round(t)
    dist = apex.distance(target)
    if _boundary_slack(cfg, abs(t - nearest) * cfg.theta, dist):
        return nearest % cfg.k, True
    return math.ceil(t) % cfg.k, False


def cone_index(cfg: GeomConfig, apex: Point, target: Point) -> int:
    return cone_position(cfg, apex, target)[0]


def projection_in_cone(cfg: GeomConfig, apex: Point, target: Point, cone: int) -> float:
    bx, by = bisector(cfg, cone)
    return (target.x - apex.x) * bx + (target.y - apex.y) * by


def projection_distance(cfg: GeomConfig, apex: Point, target: Point) -> float:
    return projection_in_cone(cfg, apex, target, cone_index(cfg, apex, target))


def triangle_size(cfg: GeomConfig, apex: Point, target: Point) -> float:
    return projection_distance(cfg, apex, target) / math.cos(cfg.half_angle)


def canonical_triangle(cfg: GeomConfig, apex: Point, target: Point) -> CanonicalTriangle:
    cone = cone_index(cfg, apex, target)
    height = projection_in_cone(cfg, apex, target, cone)
    size = height / math.cos(cfg.half_angle)
    center = cone * cfg.theta
    return CanonicalTriangle(
        apex=apex,
        target=target,
        cone=cone,
        size=size,
        height=height,
        corner_a=along(apex, center - cfg.half_angle, size),
        corner_b=along(apex, center + cfg.half_angle, size),
        midpoint_m=along(apex, center, height),
    )


def signed_alpha(cfg: GeomConfig, apex: Point, target: Point) -> float:
    """Angle from the cone bisector to the segment; positive is clockwise"""
    cone = cone_index(cfg, apex, target)
    return wrap(clockwise_angle(apex, target) - cone * cfg.theta)


def bisector_angle_alpha(cfg: GeomConfig, apex: Point, target: Point) -> float:
    return min(abs(signed_alpha(cfg, apex, target)), cfg.half_angle)


def to_canonical_frame(cfg: GeomConfig, u: Point, w: Point) -> SimilarityTransform:
    """Rotation by a multiple of θ about u, optionally followed by the reflection
    across the vertical through u, moving w into the closed right half of C0^u"""
    cone = cone_index(cfg, u, w)
    alpha = signed_alpha(cfg, u, w)
    if alpha >= 0:
        return SimilarityTransform(center=u, rotation=cone * cfg.theta)
    # reflection after a rotation by β equals the rotation by -β after reflecting
    return SimilarityTransform(center=u, rotation=-cone * cfg.theta, reflect=True)


def frame_cone(cfg: GeomConfig, transform: SimilarityTransform, original_cone: int, anchor_cone: int) -> int:
    """Cone label in the canonical frame of an original cone label"""
    if transform.reflect:
        return (anchor_cone - original_cone) % cfg.k
    return (original_cone - anchor_cone) % cfg.k


def original_cone(cfg: GeomConfig, transform: SimilarityTransform, cone_in_frame: int, anchor_cone: int) -> int:
    if transform.reflect:
        return (anchor_cone - cone_in_frame) % cfg.k
    return (cone_in_frame + anchor_cone) % cfg.k


def line_intersection(p: Point, p_angle: float, q: Point, q_angle: float) -> Point | None:
    """Intersection of the lines through p and q at the given clockwise angles"""
    dx1, dy1 = direction(p_angle)
    dx2, dy2 = direction(q_angle)
    det = dx1 * (-dy2) - dy1 * (-dx2)
    if abs(det) < 1e-15:
        return None
    rx, ry = q.x - p.x, q.y - p.y
    s = (rx * (-dy2) - ry * (-dx2)) / det
    return Point(x=p.x + s * dx1, y=p.y + s * dy1)
