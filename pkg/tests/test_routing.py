import pytest

from thetaspan.engine.analysis import shortest_path
from thetaspan.engine.graph_build import build_theta_graph
from thetaspan.engine.routing import (
    competitiveness_sweep,
    default_step_cap,
    hop_is_greedy,
    next_hop,
    route_hops,
    theta_route,
)
from thetaspan.errors import DegenerateInputError, GraphIntegrityError
from thetaspan.models.geometry import Point


def test_two_points(cfg5):
    graph = build_theta_graph(cfg5, [Point.of(0, 0), Point.of(1, 0)])
    outcome = theta_route(graph, 0, 1)
    assert outcome.reached
    assert outcome.steps == 1
    assert outcome.path.vertices == [0, 1]
    assert outcome.competitiveness == pytest.approx(1.0)


def test_same_endpoints_rejected(make_graph):
    with pytest.raises(DegenerateInputError):
        theta_route(make_graph(5, 1), 2, 2)


def test_every_hop_is_greedy(make_graph):
    graph = make_graph(60, 31)
    for s, t in [(0, 59), (17, 3), (42, 8), (5, 6)]:
        outcome = theta_route(graph, s, t)
        ids = outcome.path.vertices
        assert ids[0] == s
        for a, b in zip(ids, ids[1:]):
            assert graph.has_edge(a, b)
            assert hop_is_greedy(graph, a, b, t)


def test_routes_are_never_shorter_than_shortest_paths(make_graph):
    graph = make_graph(40, 12)
    for s in range(0, 40, 7):
        for t in range(1, 40, 9):
            if s == t:
                continue
            outcome = theta_route(graph, s, t)
            if outcome.reached:
                assert outcome.path.length >= shortest_path(graph, s, t).length * (1 - 1e-12)


def test_step_cap_stops_the_walk(make_graph):
    graph = make_graph(80, 3)
    far = max(range(1, 80), key=lambda v: theta_route(graph, 0, v).steps)
    outcome = theta_route(graph, 0, far, step_cap=1)
    assert outcome.steps == 1
    if far != outcome.path.destination:
        assert not outcome.reached
        assert outcome.competitiveness is None
        assert route_hops(outcome, graph) == []


def test_missing_witness_is_reported(make_graph):
    graph = make_graph(20, 5)
    nxt = next_hop(graph, 0, 19)
    broken = graph.without_edges([(0, nxt)])
    with pytest.raises(GraphIntegrityError):
        next_hop(broken, 0, 19)


def test_route_hops(make_graph):
    graph = make_graph(50, 14)
    outcome = next(
        o for o in (theta_route(graph, 3, t) for t in range(4, 50)) if o.reached and o.steps >= 2
    )
    hops = route_hops(outcome, graph)
    assert len(hops) == outcome.steps
    assert sum(h.length for h in hops) == pytest.approx(outcome.path.length)
    for hop in hops:
        assert hop.factor == pytest.approx(hop.length / hop.remaining)
    assert hops[-1].target == outcome.path.destination


def test_sweep(make_graph):
    graph = make_graph(100, 77)
    table = competitiveness_sweep(graph)
    assert len(table.pairs) + len(table.unreached) == 100 * 99
    if table.pairs:
        assert table.max_competitiveness == max(table.pairs.values())
        assert table.max_competitiveness >= 1.0
        s, t = table.max_pair
        assert table.pairs[f"{s}->{t}"] == table.max_competitiveness
        assert 1.0 <= table.mean_competitiveness <= table.max_competitiveness


def test_default_step_cap_grows_with_n(make_graph):
    assert default_step_cap(make_graph(10, 0)) < default_step_cap(make_graph(20, 0))
