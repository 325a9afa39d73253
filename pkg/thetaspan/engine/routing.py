# thetaspan/engine/routing.py
import logging
import statistics

from thetaspan import config
from thetaspan.engine.geometry_core import cone_index
from thetaspan.engine.graph_build import closest_in_cone
from thetaspan.errors import DegenerateInputError, GraphIntegrityError
from thetaspan.models.graph import ThetaGraph
from thetaspan.models.paths import PathResult
from thetaspan.models.reports import CompetitivenessTable, RouteHop, RoutingOutcome

logger = logging.getLogger(__name__)


def default_step_cap(graph: ThetaGraph) -> int:
    return max(1, config.STEP_CAP_FACTOR * graph.n)


def next_hop(graph: ThetaGraph, current: int, destination: int) -> int:
    """The closest vertex in the cone of current that contains the destination"""
    cone = cone_index(graph.config, graph.vertices[current], graph.vertices[destination])
    choice = graph.cone_choice[current][cone]
    if choice is None:
        raise GraphIntegrityError(
            f"vertex {current} has no witness in cone {cone}, which contains vertex {destination}",
            vertex=current, cone=cone, destination=destination,
        )
    return choice


def theta_route(graph: ThetaGraph, s: int, t: int, step_cap: int | None = None) -> RoutingOutcome:
    """Greedy θ-routing from s to t; gives up after step_cap hops"""
    if s == t:
        raise DegenerateInputError("routing needs distinct endpoints", vertex=s)
    cap = default_step_cap(graph) if step_cap is None else step_cap
    if cap < 1:
        raise DegenerateInputError("step cap must be at least 1", step_cap=cap)

    route = [s]
    current = s
    while current != t and len(route) - 1 < cap:
        current = next_hop(graph, current, t)
        route.append(current)

    reached = current == t
    path = PathResult(vertices=route, length=graph.path_length(route))
    if not reached:
        logger.warning("θ-routing %d -> %d stopped after %d steps without arriving", s, t, cap)
    return RoutingOutcome(
        path=path,
        reached=reached,
        steps=len(route) - 1,
        competitiveness=path.length / graph.length(s, t) if reached else None,
    )


def competitiveness_sweep(graph: ThetaGraph, step_cap: int | None = None) -> CompetitivenessTable:
    pairs: dict[str, float] = {}
    unreached: list[tuple[int, int]] = []
    best: tuple[float, tuple[int, int] | None] = (0.0, None)
    for s in range(graph.n):
        for t in range(graph.n):
            if s == t:
                continue
            outcome = theta_route(graph, s, t, step_cap)
            if not outcome.reached:
                unreached.append((s, t))
                continue
            value = outcome.competitiveness
            pairs[f"{s}->{t}"] = value
            if value > best[0]:
                best = (value, (s, t))
    return CompetitivenessTable(
        pairs=pairs,
        max_competitiveness=best[0],
        max_pair=best[1],
        mean_competitiveness=statistics.fmean(pairs.values()) if pairs else 0.0,
        unreached=unreached,
    )


def route_hops(outcome: RoutingOutcome, graph: ThetaGraph) -> list[RouteHop]:
    destination = outcome.path.destination if outcome.reached else None
    if destination is None:
        return []
    hops = []
    ids = outcome.path.vertices
    for a, b in zip(ids, ids[1:]):
        remaining = graph.length(a, destination)
        length = graph.length(a, b)
        hops.append(RouteHop(source=a, target=b, length=length, remaining=remaining, factor=length / remaining))
    return hops


def hop_is_greedy(graph: ThetaGraph, current: int, nxt: int, destination: int) -> bool:
    """Re-derive one hop by brute force"""
    cone = cone_index(graph.config, graph.vertices[current], graph.vertices[destination])
    return closest_in_cone(graph.config, graph.vertices, current, cone) == nxt
