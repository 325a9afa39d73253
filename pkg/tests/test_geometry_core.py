import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from thetaspan.engine.geometry_core import (
    bisector_angle_alpha,
    canonical_triangle,
    cone_index,
    frame_cone,
    line_intersection,
    projection_distance,
    to_canonical_frame,
    triangle_size,
)
from thetaspan.errors import DegenerateInputError
from thetaspan.models.geometry import GeomConfig, Point

P = Point.of
ORIGIN = P(0, 0)


# ==================== CONES ====================

@pytest.mark.parametrize("target, expected", [
    ((0, 1), 0),
    ((1, 0), 1),
    ((0, -1), 2),  # on the C2/C3 boundary, goes to the counter-clockwise side
    ((-1, 0), 4),
    ((0.5, 0.9), 0),
])
def test_cone_index(cfg5, target, expected):
    assert cone_index(cfg5, ORIGIN, P(*target)) == expected


def test_cone_index_rejects_coincident_points(cfg5):
    with pytest.raises(DegenerateInputError):
        cone_index(cfg5, P(1, 2), P(1, 2))


def test_boundary_goes_to_counter_clockwise_cone(cfg5):
    # the ray at clockwise angle 36° separates C0 and C1
    on_ray = P(math.sin(math.pi / 5), math.cos(math.pi / 5))
    assert cone_index(cfg5, ORIGIN, on_ray) == 0


coordinate = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False)


@given(coordinate, coordinate, coordinate, coordinate)
def test_reversed_pair_lands_two_or_three_cones_away(x1, y1, x2, y2):
    a, b = P(x1, y1), P(x2, y2)
    assume(a.distance(b) > 1e-6)
    cfg = GeomConfig(k=5)
    i = cone_index(cfg, a, b)
    assert cone_index(cfg, b, a) in {(i + 2) % 5, (i + 3) % 5}


@given(coordinate, coordinate, st.integers(min_value=4, max_value=12))
def test_exactly_one_cone_contains_each_point(x, y, k):
    assume(math.hypot(x, y) > 1e-6)
    cfg = GeomConfig(k=k)
    cone = cone_index(cfg, ORIGIN, P(x, y))
    assert 0 <= cone < k
    # the target projects positively onto the bisector of its own cone
    assert projection_distance(cfg, ORIGIN, P(x, y)) > 0


# ==================== TRIANGLES ====================

@pytest.mark.parametrize("target, expected", [
    ((0, 1), 1.0),
    ((1, 0), 0.951057),
    ((0.5, 0.9), 0.9),
])
def test_projection_distance(cfg5, target, expected):
    assert projection_distance(cfg5, ORIGIN, P(*target)) == pytest.approx(expected, abs=1e-6)


def test_canonical_triangle_corners(cfg5):
    triangle = canonical_triangle(cfg5, ORIGIN, P(0, 1))
    assert triangle.size == pytest.approx(math.sqrt(5) - 1, abs=1e-12)
    assert triangle.corner_a.as_tuple() == pytest.approx((-0.726543, 1.0), abs=1e-6)
    assert triangle.corner_b.as_tuple() == pytest.approx((0.726543, 1.0), abs=1e-6)
    assert triangle.midpoint_m.as_tuple() == pytest.approx((0.0, 1.0), abs=1e-12)


def test_size_depends_only_on_projection(cfg5):
    base = triangle_size(cfg5, ORIGIN, P(0, 1))
    assert triangle_size(cfg5, ORIGIN, P(0.3, 1)) == pytest.approx(base, rel=1e-12)
    assert triangle_size(cfg5, ORIGIN, P(0, 2.5)) == pytest.approx(2.5 * base, rel=1e-12)


def test_random_points_inside_triangle_are_within_size(cfg5):
    triangle = canonical_triangle(cfg5, P(0.2, -0.1), P(1.0, 0.7))
    rng = np.random.default_rng(7)
    a, b, c = (np.array(p.as_tuple()) for p in (triangle.apex, triangle.corner_a, triangle.corner_b))
    r1, r2 = rng.uniform(size=(2, 100_000))
    flip = r1 + r2 > 1
    r1[flip], r2[flip] = 1 - r1[flip], 1 - r2[flip]
    samples = a + r1[:, None] * (b - a) + r2[:, None] * (c - a)
    distances = np.hypot(*(samples - a).T)
    assert distances.max() <= triangle.size * (1 + 1e-12)


# ==================== ANGLES ====================

def test_bisector_angle_alpha(cfg5):
    assert bisector_angle_alpha(cfg5, ORIGIN, P(0, 1)) == 0
    assert bisector_angle_alpha(cfg5, ORIGIN, P(0.3, 1)) == pytest.approx(math.atan(0.3), abs=1e-12)
    on_ray = P(math.sin(math.pi / 5), math.cos(math.pi / 5))
    assert bisector_angle_alpha(cfg5, ORIGIN, on_ray) == pytest.approx(math.pi / 5, abs=1e-9)


@pytest.mark.parametrize("alpha", [0.05, 0.2, math.pi / 10, 0.5, 0.6])
def test_size_and_distance_identities(cfg5, alpha):
    u = P(0.3, -0.2)
    w = P(u.x + 2 * math.sin(alpha), u.y + 2 * math.cos(alpha))
    forward = triangle_size(cfg5, u, w)
    backward = triangle_size(cfg5, w, u)
    assert backward == pytest.approx(math.cos(math.pi / 5 - alpha) / math.cos(alpha) * forward, rel=1e-9)
    assert u.distance(w) == pytest.approx(math.cos(math.pi / 5) / math.cos(alpha) * forward, rel=1e-9)


# ==================== CANONICAL FRAME ====================

def test_frame_is_identity_in_right_half(cfg5):
    transform = to_canonical_frame(cfg5, ORIGIN, P(0.3, 1))
    assert transform.is_identity


def test_frame_reflects_left_half(cfg5):
    transform = to_canonical_frame(cfg5, ORIGIN, P(-0.3, 1))
    assert transform.reflect
    assert transform.apply(P(-0.3, 1)).as_tuple() == pytest.approx((0.3, 1.0), abs=1e-12)


@given(coordinate, coordinate, coordinate, coordinate)
def test_frame_moves_w_into_right_half_of_c0(x1, y1, x2, y2):
    u, w = P(x1, y1), P(x2, y2)
    assume(u.distance(w) > 1e-3)
    cfg = GeomConfig(k=5)
    transform = to_canonical_frame(cfg, u, w)
    moved = transform.apply(w)
    assert cone_index(cfg, u, moved) == 0
    assert moved.x - u.x >= -1e-9 * u.distance(w)
    assert moved.distance(u) == pytest.approx(w.distance(u), rel=1e-9)
    back = transform.invert(moved)
    assert back.as_tuple() == pytest.approx(w.as_tuple(), abs=1e-9)


def test_frame_cone_maps_anchor_to_zero(cfg5):
    w = P(0.9, -1.0)  # C2, counter-clockwise of its bisector
    anchor = cone_index(cfg5, ORIGIN, w)
    transform = to_canonical_frame(cfg5, ORIGIN, w)
    assert frame_cone(cfg5, transform, anchor, anchor) == 0
    probe = P(-1.0, 0.1)
    moved = transform.apply(probe)
    assert frame_cone(cfg5, transform, cone_index(cfg5, ORIGIN, probe), anchor) == cone_index(cfg5, ORIGIN, moved)


def test_line_intersection():
    # ray from (-1, 0) heading +x meets the ray from (0, -1) heading +y at the origin
    hit = line_intersection(P(-1, 0), math.pi / 2, P(0, -1), 0.0)
    assert hit.as_tuple() == pytest.approx((0.0, 0.0), abs=1e-12)
    assert line_intersection(P(0, 0), 0.0, P(1, 0), 0.0) is None
