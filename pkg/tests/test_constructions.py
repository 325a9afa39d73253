import math

import pytest

from thetaspan.engine.analysis import pair_ratio, shortest_path, spanning_ratio
from thetaspan.engine.constructions import (
    TABLE_EXPECTED_PATH,
    PLACEMENT_TABLE,
    PATH_LABELS,
    adversary_instance,
    appendix_instance,
    inward_of_corner,
    theorem3_lengths,
    theorem3_path,
)
from thetaspan.engine.geometry_core import canonical_triangle
from thetaspan.engine.graph_build import build_theta_graph
from thetaspan.engine.routing import theta_route
from thetaspan.models.geometry import GeomConfig, Point
from thetaspan.models.paths import SPANNER_CONSTANTS
from thetaspan.utils.export import export_graph

LOWER = SPANNER_CONSTANTS.lower_bound


# ==================== HELPERS ====================

@pytest.mark.parametrize("side", ["ccw", "cw"])
@pytest.mark.parametrize("fan", [0.0, 0.5, 1.0])
def test_inward_offsets_stay_inside(cfg5, side, fan):
    triangle = canonical_triangle(cfg5, Point.of(0, 0), Point.of(0.3, 1.0))
    point = inward_of_corner(triangle, side, fan, 1e-4)
    assert point.distance(triangle.corner(side)) == pytest.approx(1e-4)
    assert triangle.contains(point, tolerance=1e-12)


# ==================== LOWER-BOUND PATH ====================

def test_lengths_add_up_to_the_lower_bound():
    lengths = theorem3_lengths()
    assert list(lengths) == ["w-v1", "v1-v2", "v2-v3", "v3-v4", "v4-u"]
    assert math.fsum(lengths.values()) == pytest.approx(LOWER, abs=1e-12)
    assert LOWER == pytest.approx(3.7983739, abs=1e-7)


@pytest.mark.parametrize("epsilon", [1e-3, 1e-5, 1e-7])
def test_lower_bound_path_geometry(epsilon):
    instance = theorem3_path(epsilon)
    points = instance.points
    assert len(points) == len(PATH_LABELS)
    assert points[instance.source].distance(points[instance.target]) == pytest.approx(1.0)

    index = {label: i for i, label in enumerate(PATH_LABELS)}
    for name, expected in instance.edge_lengths.items():
        a, b = name.split("-")
        assert points[index[a]].distance(points[index[b]]) == pytest.approx(expected, abs=5 * epsilon)

    walk = instance.expected_path
    assert walk[0] == instance.source and walk[-1] == instance.target
    total = math.fsum(points[a].distance(points[b]) for a, b in zip(walk, walk[1:]))
    assert total == pytest.approx(LOWER, abs=100 * epsilon)


def test_lower_bound_path_shrinks_with_epsilon():
    gaps = []
    for epsilon in (1e-2, 1e-4, 1e-6):
        instance = theorem3_path(epsilon)
        walk = instance.expected_path
        total = math.fsum(instance.points[a].distance(instance.points[b]) for a, b in zip(walk, walk[1:]))
        gaps.append(abs(total - LOWER))
    assert gaps[0] > gaps[1] > gaps[2]


def test_lower_bound_path_alone_has_shortcuts():
    instance = theorem3_path(1e-6)
    graph = build_theta_graph(GeomConfig(k=5, tolerance=instance.tolerance), instance.points)
    # without the blocking vertices the path is not the shortest route
    assert spanning_ratio(graph).ratio < LOWER
    assert pair_ratio(graph, instance.source, instance.target) < LOWER


def test_epsilon_must_be_positive():
    with pytest.raises(ValueError):
        theorem3_path(0.0)
    with pytest.raises(ValueError):
        appendix_instance(-1.0)


# ==================== LOWER-BOUND GRAPH ====================

def test_placement_table_shape():
    assert [step.number for step in PLACEMENT_TABLE] == list(range(3, 19))
    added = sum(len(step.corners) if step.kind == "corners" else 1 for step in PLACEMENT_TABLE)
    assert 2 + added == 31
    for step in PLACEMENT_TABLE:
        assert step.checkpoint[0] == 1 and step.checkpoint[-1] == 2
    assert [v - 1 for v in PLACEMENT_TABLE[-1].checkpoint] == TABLE_EXPECTED_PATH


@pytest.fixture(scope="module")
def appendix():
    return appendix_instance(1e-6)


@pytest.mark.slow
def test_appendix_instance_reproduces_the_final_path(appendix):
    assert len(appendix.points) == 31
    graph = build_theta_graph(GeomConfig(k=5, tolerance=appendix.tolerance), appendix.points)
    path = shortest_path(graph, appendix.source, appendix.target)
    assert path.vertices == TABLE_EXPECTED_PATH
    assert pair_ratio(graph, 0, 1) == pytest.approx(3.798374, abs=1e-3)


@pytest.mark.slow
def test_appendix_records_every_placement(appendix):
    placed = sorted(record.vertex for record in appendix.placements)
    assert placed == list(range(31))
    steps = {record.step for record in appendix.placements}
    assert steps == set(range(1, 19))


@pytest.mark.slow
@pytest.mark.parametrize("epsilon", [1e-3, 1e-4])
def test_appendix_ratio_tends_to_the_lower_bound(epsilon):
    instance = appendix_instance(epsilon)
    graph = build_theta_graph(GeomConfig(k=5, tolerance=instance.tolerance), instance.points)
    assert pair_ratio(graph, 0, 1) == pytest.approx(LOWER, abs=2e3 * epsilon)


@pytest.mark.slow
def test_appendix_ratio_increases_as_epsilon_shrinks():
    ratios = []
    for epsilon in (1e-3, 1e-4, 1e-6):
        instance = appendix_instance(epsilon)
        graph = build_theta_graph(GeomConfig(k=5, tolerance=instance.tolerance), instance.points)
        pair = pair_ratio(graph, 0, 1)
        # the lower-bound pair is also the worst pair of the whole graph
        assert spanning_ratio(graph).ratio == pytest.approx(pair, abs=1e-6)
        ratios.append(pair)
    assert ratios[0] < ratios[1] < ratios[2] < LOWER
    assert ratios[2] == pytest.approx(3.798374, abs=1e-3)


@pytest.mark.slow
def test_appendix_svg_highlights_the_final_path(appendix):
    graph = build_theta_graph(GeomConfig(k=5, tolerance=appendix.tolerance), appendix.points)
    text = export_graph(graph, "svg", highlight=TABLE_EXPECTED_PATH).decode()
    assert text.count("<circle") == 31
    assert text.count('class="hop"') == 5


# ==================== ROUTING ADVERSARY ====================

def _route(instance):
    graph = build_theta_graph(GeomConfig(k=5, tolerance=instance.tolerance), instance.points)
    return theta_route(graph, instance.source, instance.destination, step_cap=4 * len(instance.points))


def _intended_route(instance):
    """Spiral vertices in order, each followed by its auxiliary vertex when it has one"""
    aux = iter(instance.auxiliary)
    route = []
    for position, v in enumerate(instance.spiral):
        route.append(v)
        if position < len(instance.auxiliary):
            route.append(next(aux))
    return route + [instance.destination]


def test_single_cycle():
    instance = adversary_instance(cycles=1, epsilon=1e-6)
    assert len(instance.spiral) == 5
    assert instance.spiral[0] == instance.source
    assert instance.auxiliary == []
    assert instance.main_steps == 4
    outcome = _route(instance)
    assert outcome.reached
    assert outcome.path.vertices == instance.spiral + [instance.destination]


@pytest.mark.parametrize("cycles", [2, 3])
def test_route_visits_spiral_through_auxiliaries(cycles):
    instance = adversary_instance(cycles=cycles, epsilon=1e-6)
    # one auxiliary per vertex of every cycle but the last
    assert len(instance.auxiliary) == 5 * (cycles - 1)
    assert len(instance.points) == 10 * cycles - 4
    outcome = _route(instance)
    assert outcome.reached
    assert outcome.path.vertices == _intended_route(instance)


def test_four_cycles_build():
    instance = adversary_instance(cycles=4, epsilon=1e-6)
    assert instance.main_steps == 19
    assert _route(instance).path.vertices == _intended_route(instance)


@pytest.mark.slow
def test_competitiveness_grows_with_cycles():
    step_factor = math.cos(math.pi / 10) / math.cos(math.pi / 5)
    assert step_factor == pytest.approx(1.175571, abs=1e-6)
    previous = 0.0
    for cycles in range(1, 6):
        instance = adversary_instance(cycles=cycles, epsilon=1e-7)
        outcome = _route(instance)
        assert outcome.reached
        points = instance.points
        w, span = points[instance.destination], points[instance.source].distance(points[instance.destination])
        # each main hop runs the full side of T(v, w)
        for a, b in zip(instance.spiral, instance.spiral[1:]):
            assert points[a].distance(points[b]) / points[a].distance(w) >= 1.175571 - 1e-6
        assert outcome.path.length > instance.main_steps * span
        assert instance.main_steps >= len(points) / 2
        assert outcome.competitiveness > len(points) / 2
        assert outcome.competitiveness > previous
        previous = outcome.competitiveness


def test_auxiliary_hops_are_short():
    instance = adversary_instance(cycles=2, epsilon=1e-6)
    points = instance.points
    route = _intended_route(instance)
    for a, b in zip(route, route[1:]):
        if b in instance.auxiliary:
            assert points[a].distance(points[b]) < 100 * instance.epsilon


def test_cycle_count_must_be_positive():
    with pytest.raises(ValueError):
        adversary_instance(cycles=0)
