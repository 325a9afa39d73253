import math
from typing import Iterable

from pydantic import BaseModel, ConfigDict, computed_field, field_validator

from thetaspan import config
from thetaspan.errors import DegenerateInputError


class Point(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float
    y: float

    @field_validator("x", "y")
    @classmethod
    def validate_finite(cls, v):
        if not math.isfinite(v):
            raise ValueError("coordinate must be finite")
        return v

    @classmethod
    def of(cls, x: float, y: float) -> "Point":
        return cls(x=float(x), y=float(y))

    def shifted(self, dx: float, dy: float) -> "Point":
        return Point(x=self.x + dx, y=self.y + dy)

    def distance(self, other: "Point") -> float:
        return math.hypot(other.x - self.x, other.y - self.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


class GeomConfig(BaseModel):
    """Cone count plus the single degeneracy policy shared by every predicate"""

    model_config = ConfigDict(frozen=True)

    k: int = config.THETA_K
    tolerance: float = 0.0
    tiebreak_rotation: float = config.ANGLE_TOLERANCE

    @field_validator("k")
    @classmethod
    def validate_k(cls, v):
        if v < 4:
            raise ValueError("cone count must be at least 4")
        return v

    @field_validator("tolerance", "tiebreak_rotation")
    @classmethod
    def validate_non_negative(cls, v):
        if v < 0 or not math.isfinite(v):
            raise ValueError("tolerance must be finite and non-negative")
        return v

    @computed_field
    @property
    def theta(self) -> float:
        return 2 * math.pi / self.k

    @property
    def half_angle(self) -> float:
        return math.pi / self.k

    @classmethod
    def for_points(cls, points: Iterable[Point], k: int = config.THETA_K,
                   relative_tolerance: float = config.RELATIVE_TOLERANCE) -> "GeomConfig":
        """Default tolerance: relative_tolerance times the bounding-box diagonal"""
        pts = list(points)
        if len(pts) < 2:
            return cls(k=k, tolerance=relative_tolerance)
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        diagonal = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
        return cls(k=k, tolerance=relative_tolerance * (diagonal or 1.0))


class CanonicalTriangle(BaseModel):
    model_config = ConfigDict(frozen=True)

    apex: Point
    target: Point
    cone: int
    size: float
    height: float
    corner_a: Point  # counter-clockwise ("left" for C0)
    corner_b: Point  # clockwise ("right" for C0)
    midpoint_m: Point

    def corner(self, side: str) -> Point:
        if side == "ccw":
            return self.corner_a
        if side == "cw":
            return self.corner_b
        raise ValueError(f"unknown corner side: {side}")

    def contains(self, point: Point, tolerance: float = 0.0) -> bool:
        """Closed containment test with a distance slack"""
        return _in_triangle(point, self.apex, self.corner_a, self.corner_b, tolerance)


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def _in_triangle(p: Point, a: Point, b: Point, c: Point, tolerance: float) -> bool:
    area = _cross(a, b, c)
    if area == 0:
        return False
    sign = 1.0 if area > 0 else -1.0
    for o, q in ((a, b), (b, c), (c, a)):
        edge = o.distance(q) or 1.0
        if sign * _cross(o, q, p) / edge < -tolerance:
            return False
    return True


class SimilarityTransform(BaseModel):
    """Rotation about `center` by `rotation` radians (counter-clockwise),
    preceded by an optional reflection across the vertical through `center`"""

    model_config = ConfigDict(frozen=True)

    center: Point
    rotation: float = 0.0
    reflect: bool = False

    def apply(self, p: Point) -> Point:
        dx, dy = p.x - self.center.x, p.y - self.center.y
        if self.reflect:
            dx = -dx
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return Point(x=self.center.x + c * dx - s * dy, y=self.center.y + s * dx + c * dy)

    def invert(self, p: Point) -> Point:
        dx, dy = p.x - self.center.x, p.y - self.center.y
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        rx, ry = c * dx + s * dy, -s * dx + c * dy
        if self.reflect:
            rx = -rx
        return Point(x=self.center.x + rx, y=self.center.y + ry)

    @property
    def is_identity(self) -> bool:
        return not self.reflect and self.rotation == 0.0


def require_distinct(apex: Point, target: Point) -> None:
    if apex.x == target.x and apex.y == target.y:
        raise DegenerateInputError(
            "coincident points have no cone", apex=apex.as_tuple(), target=target.as_tuple()
        )
