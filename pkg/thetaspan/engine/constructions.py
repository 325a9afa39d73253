# thetaspan/engine/constructions.py
"""Hand-built instances: the lower-bound path, the 31-vertex lower-bound graph
and the spiral that defeats θ-routing.

"Arbitrarily close" placements are realised as an inward offset of magnitude
epsilon from a triangle corner, in a direction fanned between the far side
(fraction 0) and the ray back to the apex (fraction 1). Where the written
placement admits several readings, candidates are tried in a fixed order and
each is validated against the expected shortest (or routed) path.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator

from thetaspan import config
from thetaspan.engine.analysis import shortest_path
from thetaspan.engine.geometry_core import along, canonical_triangle, line_intersection
from thetaspan.engine.graph_build import build_theta_graph
from thetaspan.engine.routing import theta_route
from thetaspan.errors import AdversaryValidationError, CheckpointMismatchError
from thetaspan.models.geometry import CanonicalTriangle, GeomConfig, Point
from thetaspan.models.instances import AdversaryInstance, LowerBoundInstance, PlacementRecord
from thetaspan.models.paths import SPANNER_CONSTANTS

logger = logging.getLogger(__name__)

PI = math.pi
CORNER_FAN = (0.5, 0.25, 0.75, 0.1, 0.9)
# tolerance handed to the builder, relative to epsilon
BUILD_TOLERANCE_FACTOR = 1e-3
MAX_EVALUATIONS = 20_000


def _other(side: str) -> str:
    return "cw" if side == "ccw" else "ccw"


def _unit(dx: float, dy: float) -> tuple[float, float]:
    norm = math.hypot(dx, dy)
    return dx / norm, dy / norm


def inward_of_corner(triangle: CanonicalTriangle, side: str, fan: float, magnitude: float) -> Point:
    """A point `magnitude` away from a corner, strictly inside the triangle"""
    corner = triangle.corner(side)
    far = triangle.corner(_other(side))
    ax, ay = _unit(far.x - corner.x, far.y - corner.y)
    bx, by = _unit(triangle.apex.x - corner.x, triangle.apex.y - corner.y)
    dx, dy = _unit((1 - fan) * ax + fan * bx, (1 - fan) * ay + fan * by)
    return corner.shifted(magnitude * dx, magnitude * dy)


def _far_side_from(triangle: CanonicalTriangle, anchor: Point) -> str:
    """The corner of the triangle furthest from anchor"""
    if triangle.corner_a.distance(anchor) >= triangle.corner_b.distance(anchor):
        return "ccw"
    return "cw"


def _build_config(epsilon: float) -> GeomConfig:
    return GeomConfig(k=5, tolerance=epsilon * BUILD_TOLERANCE_FACTOR)


# ==================== LOWER-BOUND PATH ====================

PATH_LABELS = ("u", "w", "v1", "v2", "v3", "v4")


def theorem3_lengths() -> dict[str, float]:
    """The five edge lengths of the lower-bound path, with |uw| = 1"""
    t = math.tan(PI / 5)
    return {
        "w-v1": 1 / math.cos(PI / 5),
        "v1-v2": 2 * math.sin(PI / 5) * t,
        "v2-v3": 2 * math.sin(PI / 5) * t,
        "v3-v4": math.sin(PI / 10) / math.sin(3 * PI / 5) * t,
        "v4-u": math.sin(3 * PI / 10) / math.sin(3 * PI / 5) * t,
    }


def theorem3_path(epsilon: float = config.DEFAULT_EPSILON) -> LowerBoundInstance:
    """Path from w back to u whose length approaches ½(11√5 - 17)·|uw|"""
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    cfg = GeomConfig(k=5)
    # offsets compound along the chain, keep each a fraction of epsilon
    step = epsilon / 10
    u = Point.of(0.0, 0.0)
    w = along(u, PI / 5 - step, 1.0)
    placements = [PlacementRecord(step=1, vertex=1, rule="right corner of T(u,w)")]

    v1 = inward_of_corner(canonical_triangle(cfg, w, u), "ccw", 0.5, step)
    placements.append(PlacementRecord(step=2, vertex=2, rule="bottom corner of T(w,u)"))
    chain = [v1]
    for i in (2, 3):
        triangle = canonical_triangle(cfg, chain[-1], u)
        side = _far_side_from(triangle, u)
        chain.append(inward_of_corner(triangle, side, 0.5, step))
        placements.append(
            PlacementRecord(step=i + 1, vertex=i + 1, rule=f"corner of T(v{i - 1},u) furthest from u", reading=side)
        )
    v3 = chain[-1]
    v4 = line_intersection(v3, PI / 5 + step, u, 8 * PI / 5 - step)
    placements.append(
        PlacementRecord(step=5, vertex=5, rule="top boundary of C1 of v3, with u in C1 of v4")
    )

    return LowerBoundInstance(
        points=[u, w, *chain, v4],
        source=0,
        target=1,
        epsilon=epsilon,
        expected_ratio=SPANNER_CONSTANTS.lower_bound,
        expected_path=[0, 5, 4, 3, 2, 1],
        edge_lengths=theorem3_lengths(),
        placements=placements,
        tolerance=cfg.tolerance,
    )


# ==================== LOWER-BOUND GRAPH ====================

@dataclass(frozen=True)
class CornerRule:
    side: str
    apex: int  # 1-based vertex names, as in the placement table
    target: int


@dataclass(frozen=True)
class PlacementStep:
    number: int
    kind: str  # "corners", "crossing" or "rays"
    corners: tuple[CornerRule, ...]
    pair: tuple[int, int]  # edge being removed, 1-based
    checkpoint: tuple[int, ...]  # expected v1 -> v2 path, 1-based


def _corners(*rules: tuple[str, int, int]) -> tuple[CornerRule, ...]:
    return tuple(CornerRule(side, apex, target) for side, apex, target in rules)


PLACEMENT_TABLE: tuple[PlacementStep, ...] = (
    PlacementStep(3, "corners", _corners(("ccw", 1, 2), ("ccw", 2, 1)), (1, 2), (1, 4, 2)),
    PlacementStep(4, "corners", _corners(("cw", 1, 4), ("ccw", 4, 1)), (1, 4), (1, 3, 2)),
    PlacementStep(5, "corners", _corners(("cw", 2, 3), ("ccw", 3, 2)), (2, 3), (1, 6, 4, 2)),
    PlacementStep(6, "corners", _corners(("cw", 1, 6), ("ccw", 6, 1)), (1, 6), (1, 5, 4, 2)),
    PlacementStep(7, "corners", _corners(("ccw", 4, 5), ("cw", 5, 4)), (4, 5), (1, 5, 6, 4, 2)),
    PlacementStep(8, "corners", _corners(("ccw", 5, 6), ("cw", 6, 5)), (5, 6), (1, 5, 14, 6, 4, 2)),
    PlacementStep(9, "corners", _corners(("ccw", 5, 14), ("cw", 14, 5)), (5, 14), (1, 5, 13, 6, 4, 2)),
    PlacementStep(10, "corners", _corners(("cw", 6, 13), ("ccw", 13, 6)), (6, 13), (1, 3, 8, 2)),
    PlacementStep(11, "crossing", (), (2, 8), (1, 3, 7, 2)),
    PlacementStep(12, "corners", _corners(("ccw", 3, 7), ("cw", 7, 3)), (3, 7), (1, 5, 12, 2)),
    PlacementStep(13, "corners", _corners(("ccw", 2, 12)), (2, 12), (1, 10, 6, 4, 2)),
    PlacementStep(14, "rays", (), (1, 10), (1, 5, 12, 4, 2)),
    PlacementStep(15, "corners", _corners(("ccw", 4, 12), ("cw", 12, 4)), (4, 12), (1, 5, 13, 14, 6, 4, 2)),
    PlacementStep(16, "corners", _corners(("cw", 13, 14), ("ccw", 14, 13)), (13, 14), (1, 9, 18, 6, 4, 2)),
    PlacementStep(17, "corners", _corners(("cw", 9, 18), ("ccw", 18, 9)), (9, 18), (1, 5, 16, 11, 4, 2)),
    PlacementStep(18, "corners", _corners(("ccw", 11, 16), ("cw", 16, 11)), (11, 16), (1, 23, 10, 6, 4, 2)),
)

TABLE_EXPECTED_PATH = [0, 22, 9, 5, 3, 1]


def _segment_crossing(p1: Point, p2: Point, q1: Point, q2: Point) -> Point | None:
    rx, ry = p2.x - p1.x, p2.y - p1.y
    sx, sy = q2.x - q1.x, q2.y - q1.y
    denom = rx * sy - ry * sx
    if abs(denom) < 1e-18:
        return None
    qpx, qpy = q1.x - p1.x, q1.y - p1.y
    t = (qpx * sy - qpy * sx) / denom
    s = (qpx * ry - qpy * rx) / denom
    if -1e-12 <= t <= 1 + 1e-12 and -1e-12 <= s <= 1 + 1e-12:
        return Point.of(p1.x + t * rx, p1.y + t * ry)
    return None


def _sides(triangle: CanonicalTriangle) -> list[tuple[Point, Point]]:
    a, b, c = triangle.apex, triangle.corner_a, triangle.corner_b
    return [(a, b), (b, c), (c, a)]


class PlacementSearch:
    """Depth-first placement of the 18-step table, one checkpoint per step"""

    def __init__(self, epsilon: float, validate: bool = True):
        if not epsilon > 0:
            raise ValueError("epsilon must be positive")
        self.epsilon = epsilon
        self.validate = validate
        self.cfg = _build_config(epsilon)
        self.evaluations = 0
        self.deepest_failure: int | None = None

    def run(self) -> tuple[list[Point], list[PlacementRecord]]:
        v1 = Point.of(0.0, 0.0)
        v2 = along(v1, PI / 5 - self.epsilon, 1.0)
        points = [v1, v2]
        placements = [
            PlacementRecord(step=1, vertex=0, rule="start vertex"),
            PlacementRecord(step=2, vertex=1, rule="top right corner of T(v1,v2)"),
        ]
        if self.validate and not self._checkpoint(points, (1, 2)):
            raise CheckpointMismatchError("expected the single edge v1 v2", step=2)
        result = self._extend(points, 0, placements)
        if result is None:
            step = self.deepest_failure or PLACEMENT_TABLE[0].number
            raise CheckpointMismatchError(
                "no placement reading reproduces the expected shortest path",
                step=step, evaluations=self.evaluations,
            )
        return result

    def _checkpoint(self, points: list[Point], expected: tuple[int, ...]) -> bool:
        self.evaluations += 1
        graph = build_theta_graph(self.cfg, points)
        path = shortest_path(graph, 0, 1)
        return path is not None and path.vertices == [v - 1 for v in expected]

    def _extend(self, points, index, placements):
        if index == len(PLACEMENT_TABLE):
            return points, placements
        step = PLACEMENT_TABLE[index]
        for new_points, reading in self._candidates(step, points):
            if self.evaluations >= MAX_EVALUATIONS:
                return None
            trial = points + new_points
            if self.validate and not self._checkpoint(trial, step.checkpoint):
                if self.deepest_failure is None or step.number > self.deepest_failure:
                    self.deepest_failure = step.number
                logger.debug("step %d: reading %r rejected", step.number, reading)
                continue
            records = [
                PlacementRecord(step=step.number, vertex=len(points) + i, rule=self._rule(step), reading=reading)
                for i in range(len(new_points))
            ]
            result = self._extend(trial, index + 1, placements + records)
            if result is not None:
                return result
            if not self.validate:
                return None
            logger.warning("step %d: backtracking from reading %r", step.number, reading)
        return None

    @staticmethod
    def _rule(step: PlacementStep) -> str:
        u, v = step.pair
        return f"remove edge (v{u}, v{v})"

    def _candidates(self, step: PlacementStep, points: list[Point]) -> Iterator[tuple[list[Point], str]]:
        if step.kind == "corners":
            yield from self._corner_candidates(step, points)
        elif step.kind == "crossing":
            yield from self._crossing_candidates(step, points)
        else:
            yield from self._ray_candidates(step, points)

    def _corner_candidates(self, step, points):
        options = []
        for rule in step.corners:
            triangle = canonical_triangle(self.cfg, points[rule.apex - 1], points[rule.target - 1])
            per_vertex = []
            for swapped, side in ((0, rule.side), (1, _other(rule.side))):
                for rank, fan in enumerate(CORNER_FAN):
                    point = inward_of_corner(triangle, side, fan, self.epsilon)
                    label = f"{side} T(v{rule.apex},v{rule.target}) fan {fan:.2f}"
                    per_vertex.append((swapped, rank, point, label))
            options.append(per_vertex)
        combos = sorted(
            itertools.product(*options),
            key=lambda combo: (sum(o[0] for o in combo), sum(o[1] for o in combo)),
        )
        for combo in combos:
            yield [o[2] for o in combo], "; ".join(o[3] for o in combo)

    def _crossing_candidates(self, step, points):
        a, b = (points[i - 1] for i in step.pair)
        first = canonical_triangle(self.cfg, a, b)
        second = canonical_triangle(self.cfg, b, a)
        scale = a.distance(b)
        crossings: list[Point] = []
        for p1, p2 in _sides(first):
            for q1, q2 in _sides(second):
                x = _segment_crossing(p1, p2, q1, q2)
                if x is None or min(x.distance(a), x.distance(b)) < 1e-6 * scale:
                    continue
                if all(x.distance(c) > 1e-9 * scale for c in crossings):
                    crossings.append(x)
        inside, outside = [], []
        for i, crossing in enumerate(crossings):
            for j in range(16):
                point = along(crossing, j * PI / 8, self.epsilon)
                reading = ([point], f"crossing {i}, direction {j * 22.5:.1f}°")
                (inside if first.contains(point) or second.contains(point) else outside).append(reading)
        yield from inside + outside

    def _ray_candidates(self, step, points):
        low, high = (points[i - 1] for i in step.pair)  # v1, v10
        first = canonical_triangle(self.cfg, low, high)
        second = canonical_triangle(self.cfg, high, low)
        inside, outside = [], []
        for scale in (1, 3):
            for s_top, s_bottom in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                delta = scale * self.epsilon
                top = PI / 5 + s_top * delta
                bottom = 8 * PI / 5 - s_bottom * delta
                point = line_intersection(high, top, low, bottom)
                if point is None:
                    continue
                reading = ([point], f"rays {top:.9f} / {bottom:.9f}")
                (inside if first.contains(point) or second.contains(point) else outside).append(reading)
        yield from inside + outside


def appendix_instance(epsilon: float = config.DEFAULT_EPSILON, validate: bool | None = None) -> LowerBoundInstance:
    """The 31-vertex θ₅-graph whose v1 -> v2 stretch approaches the lower bound"""
    validate = config.CHECKPOINT_VALIDATION if validate is None else validate
    search = PlacementSearch(epsilon, validate)
    points, placements = search.run()
    logger.info("lower-bound graph placed after %d checkpoint evaluations", search.evaluations)
    return LowerBoundInstance(
        points=points,
        source=0,
        target=1,
        epsilon=epsilon,
        expected_ratio=SPANNER_CONSTANTS.lower_bound,
        expected_path=TABLE_EXPECTED_PATH,
        placements=placements,
        tolerance=search.cfg.tolerance,
    )


# ==================== ROUTING ADVERSARY ====================

# corner offsets shrink by this factor per cycle, so every cycle sits shallower than the one before
CYCLE_SHRINK = 0.5
MAIN_FAN = (0.5, 0.4, 0.6)
# auxiliary vertex: fraction of the way up the corner ray, then a push along the far side
AUX_REACH = (0.8, 0.7, 0.9)
AUX_PUSH = (0.1, 0.05, 0.2)
SPIRAL_TOLERANCE_FACTOR = 1e-6


class SpiralBuilder:
    """Grows the routing path around w one corner vertex at a time.

    Main vertex j sits just inside the far corner of T(v_{j-1}, w). Its offset
    shrinks with every cycle, which keeps it outside T(v_{j-6}, v_{j-5}). It
    does take over the outgoing hop of v_{j-5}, the vertex one cycle back in
    the same corner, so an auxiliary vertex is put on the corner ray of
    T(v_{j-5}, v_j): v_{j-5} now routes to it, and from there the route resumes
    at v_{j-4}. After every placement the θ-route from u must be exactly the
    intended one.
    """

    SOURCE, DESTINATION = 0, 1

    def __init__(self, cycles: int, epsilon: float):
        if cycles < 1:
            raise ValueError("at least one cycle is required")
        if not epsilon > 0:
            raise ValueError("epsilon must be positive")
        self.cycles = cycles
        self.epsilon = epsilon
        self.cfg = GeomConfig(k=5, tolerance=epsilon * SPIRAL_TOLERANCE_FACTOR)
        self.w = Point.of(0.0, 0.0)
        # w sits θ/4 clockwise of the C0 bisector of u
        u = along(self.w, PI + PI / 10, 1.0)
        self.side = _far_side_from(canonical_triangle(self.cfg, u, self.w), self.w)
        self.points = [u, self.w]
        self.main = [self.SOURCE]
        self.aux_of: dict[int, int] = {}
        self.evaluations = 0

    def run(self) -> AdversaryInstance:
        for j in range(1, 5 * self.cycles):
            self._place_main(j)
        auxiliary = [self.aux_of[v] for v in self.main if v in self.aux_of]
        logger.info(
            "spiral with %d cycles: %d main vertices, %d auxiliary, %d evaluations",
            self.cycles, len(self.main), len(auxiliary), self.evaluations,
        )
        return AdversaryInstance(
            points=self.points,
            source=self.SOURCE,
            destination=self.DESTINATION,
            cycles=self.cycles,
            epsilon=self.epsilon,
            spiral=self.main,
            auxiliary=auxiliary,
            tolerance=self.cfg.tolerance,
        )

    def _magnitude(self, j: int) -> float:
        return self.epsilon * CYCLE_SHRINK ** (j // 5)

    def _place_main(self, j: int) -> None:
        triangle = canonical_triangle(self.cfg, self.points[self.main[-1]], self.w)
        new_id = len(self.points)
        main = self.main + [new_id]
        for fan in MAIN_FAN:
            vertex = inward_of_corner(triangle, self.side, fan, self._magnitude(j))
            points = self.points + [vertex]
            if j < 5:
                if self._keeps_route(points, main, self.aux_of):
                    self.points, self.main = points, main
                    return
                continue
            earlier = self.main[j - 5]
            aux_of = {**self.aux_of, earlier: new_id + 1}
            for reach, push in itertools.product(AUX_REACH, AUX_PUSH):
                x = self._auxiliary(points[earlier], vertex, reach, push * self._magnitude(j - 5))
                if self._keeps_route(points + [x], main, aux_of):
                    self.points, self.main, self.aux_of = points + [x], main, aux_of
                    return
        raise AdversaryValidationError(
            "no placement keeps the earlier routing choices", cycle=j // 5 + 1, step=j,
            evaluations=self.evaluations,
        )

    def _auxiliary(self, a: Point, z: Point, reach: float, push: float) -> Point:
        """Point `reach` of the way from a to the far corner of T(a, z), moved `push` into the triangle"""
        triangle = canonical_triangle(self.cfg, a, z)
        corner = triangle.corner(self.side)
        far = triangle.corner(_other(self.side))
        dx, dy = _unit(far.x - corner.x, far.y - corner.y)
        return Point.of(
            a.x + reach * (corner.x - a.x) + push * dx,
            a.y + reach * (corner.y - a.y) + push * dy,
        )

    def _keeps_route(self, points: list[Point], main: list[int], aux_of: dict[int, int]) -> bool:
        self.evaluations += 1
        expected = [v for m in main for v in (m, aux_of.get(m)) if v is not None]
        expected.append(self.DESTINATION)
        graph = build_theta_graph(self.cfg, points)
        outcome = theta_route(graph, self.SOURCE, self.DESTINATION, step_cap=len(expected))
        return outcome.path.vertices == expected


def adversary_instance(cycles: int = config.DEFAULT_CYCLES, epsilon: float = config.DEFAULT_EPSILON) -> AdversaryInstance:
    """Instance on which θ-routing from source to destination spirals `cycles` times"""
    return SpiralBuilder(cycles, epsilon).run()
