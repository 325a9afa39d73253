# thetaspan/engine/analysis.py
import heapq
import logging
import math

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from thetaspan.engine.geometry_core import triangle_size
from thetaspan.engine.path_construct import PathBuilder
from thetaspan.errors import DegenerateInputError, ThetaSpanError
from thetaspan.models.graph import ThetaGraph
from thetaspan.models.paths import SPANNER_CONSTANTS, PathResult
from thetaspan.models.reports import BoundCheck, BoundsReport, RatioReport

logger = logging.getLogger(__name__)

# relative slack when comparing float path lengths
LENGTH_SLACK = 1e-9


# ==================== SHORTEST PATHS ====================

def shortest_path(graph: ThetaGraph, s: int, t: int) -> PathResult | None:
    """Euclidean-weighted shortest path; equal lengths resolve to the
    lexicographically smallest id sequence"""
    if s == t:
        return PathResult(vertices=[s], length=0.0)
    best: dict[int, tuple[float, tuple[int, ...]]] = {s: (0.0, (s,))}
    heap: list[tuple[float, tuple[int, ...]]] = [(0.0, (s,))]
    done: set[int] = set()
    while heap:
        dist, path = heapq.heappop(heap)
        u = path[-1]
        if u in done or best[u] != (dist, path):
            continue
        done.add(u)
        if u == t:
            break
        for v in graph.neighbors(u):
            if v in done:
                continue
            candidate = (dist + graph.length(u, v), path + (v,))
            if v not in best or _shorter(candidate, best[v]):
                best[v] = candidate
                heapq.heappush(heap, candidate)
    if t not in done:
        return None
    _, path = best[t]
    return PathResult(vertices=list(path), length=graph.path_length(path))


def _shorter(a: tuple[float, tuple[int, ...]], b: tuple[float, tuple[int, ...]]) -> bool:
    slack = LENGTH_SLACK * 1e-3 * max(a[0], b[0])
    if a[0] < b[0] - slack:
        return True
    if a[0] > b[0] + slack:
        return False
    return a[1] < b[1]


def distance_matrix(graph: ThetaGraph) -> np.ndarray:
    """All-pairs graph distances (inf where disconnected)"""
    n = graph.n
    if not graph.edges:
        matrix = np.full((n, n), np.inf)
        np.fill_diagonal(matrix, 0.0)
        return matrix
    rows, cols = zip(*graph.sorted_edges())
    weights = [graph.length(u, v) for u, v in zip(rows, cols)]
    adjacency = csr_matrix((weights, (rows, cols)), shape=(n, n))
    return dijkstra(adjacency, directed=False)


def euclidean_matrix(graph: ThetaGraph) -> np.ndarray:
    coords = graph.coords
    diff = coords[:, None, :] - coords[None, :, :]
    return np.hypot(diff[..., 0], diff[..., 1])


# ==================== SPANNING RATIO ====================

def proven_bound(k: int) -> float | None:
    """Proven spanning-ratio bound for θ_k, where one applies"""
    if k == 5:
        return SPANNER_CONSTANTS.ratio_bound
    if k >= 7:
        return 1 / (1 - 2 * math.sin(math.pi / k))
    return None


def spanning_ratio(graph: ThetaGraph, include_matrix: bool = False) -> RatioReport:
    if graph.n < 2:
        raise DegenerateInputError("the spanning ratio needs at least two vertices", n=graph.n)
    graph_dist = distance_matrix(graph)
    euclid = euclidean_matrix(graph)
    off_diagonal = ~np.eye(graph.n, dtype=bool)
    ratios = np.ones_like(graph_dist)
    ratios[off_diagonal] = graph_dist[off_diagonal] / euclid[off_diagonal]

    # argmax is row-major, so ties go to the smallest (s, t); the diagonal never wins
    ranked = np.where(off_diagonal, ratios, -np.inf)
    s, t = (int(i) for i in np.unravel_index(np.argmax(ranked), ratios.shape))
    ratio = float(ratios[s, t])
    connected = bool(np.isfinite(graph_dist).all())
    bound = proven_bound(graph.k)
    report = RatioReport(
        worst_pair=(s, t),
        graph_distance=float(graph_dist[s, t]),
        euclidean_distance=float(euclid[s, t]),
        ratio=ratio,
        connected=connected,
        per_pair_ratios=ratios.tolist() if include_matrix else None,
        bound_checked=bound,
        bound_satisfied=None if bound is None else ratio <= bound,
    )
    logger.debug("spanning ratio %.9f at %s (n=%d, k=%d)", ratio, (s, t), graph.n, graph.k)
    return report


def pair_ratio(graph: ThetaGraph, s: int, t: int) -> float:
    if s == t:
        raise DegenerateInputError("a pair ratio needs two distinct vertices", vertex=s)
    path = shortest_path(graph, s, t)
    if path is None:
        return math.inf
    return path.length / graph.length(s, t)


# ==================== CONNECTIVITY ====================

def to_networkx(graph: ThetaGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_weighted_edges_from((u, v, graph.length(u, v)) for u, v in graph.sorted_edges())
    return g


def is_connected(graph: ThetaGraph) -> bool:
    if graph.n == 0:
        raise DegenerateInputError("connectivity of an empty graph is undefined")
    return nx.is_connected(to_networkx(graph))


# ==================== BOUNDS ====================

def ratio_upper_bound(alpha: float) -> float:
    """Per-pair stretch bound from the constructive path at bisector angle alpha"""
    quarter = math.pi / 5
    return SPANNER_CONSTANTS.c / math.cos(quarter) * min(math.cos(alpha), math.cos(quarter - alpha))


def maximize_min_cos(samples: int = 1_000_001) -> float:
    """Angle in [0, π/5] maximising min(cos α, cos(π/5 - α)) on a dense grid"""
    alphas = np.linspace(0.0, math.pi / 5, samples)
    values = np.minimum(np.cos(alphas), np.cos(math.pi / 5 - alphas))
    return float(alphas[np.argmax(values)])


def _check_constructive_paths(graph: ThetaGraph, graph_dist: np.ndarray) -> list[BoundCheck]:
    builder = PathBuilder(graph)
    connectivity = PathBuilder(graph, connectivity_only=True)
    c = SPANNER_CONSTANTS.c
    failures: dict[str, BoundCheck] = {}
    worst_factor = 0.0

    def fail(name: str, detail: str, pair: tuple[int, int], value=None, bound=None):
        if name not in failures:
            failures[name] = BoundCheck(
                name=name, passed=False, detail=detail, witness=list(pair), value=value, bound=bound
            )

    for u in range(graph.n):
        for w in range(graph.n):
            if u == w:
                continue
            try:
                result = builder.path(u, w)
            except ThetaSpanError as e:
                fail("constructive_path", f"{type(e).__name__}: {e.detail}", (u, w))
                continue
            ids = result.vertices
            if ids[0] != u or ids[-1] != w or not all(graph.has_edge(a, b) for a, b in zip(ids, ids[1:])):
                fail("constructive_path", "path is not a walk of graph edges", (u, w))
                continue
            size = triangle_size(graph.config, graph.vertices[u], graph.vertices[w])
            worst_factor = max(worst_factor, result.length / size)
            if result.length > c * size * (1 + LENGTH_SLACK):
                fail("constructive_length", "length exceeds c·|T(u,w)|", (u, w), result.length, c * size)
            if result.length < graph_dist[u, w] * (1 - LENGTH_SLACK):
                fail("shortest_dominance", "constructive path shorter than the shortest path", (u, w),
                     result.length, float(graph_dist[u, w]))
            sizes = [step.size for step in result.case_trace]
            if any(b >= a for a, b in zip(sizes, sizes[1:])):
                fail("recursion_measure", "triangle sizes do not strictly decrease", (u, w))
            try:
                connectivity.path(u, w)
            except ThetaSpanError as e:
                fail("connectivity_path", f"{type(e).__name__}: {e.detail}", (u, w))

    checks = []
    for name in ("constructive_path", "constructive_length", "shortest_dominance", "recursion_measure",
                 "connectivity_path"):
        if name in failures:
            checks.append(failures[name])
        elif name == "constructive_length":
            checks.append(BoundCheck(name=name, passed=True, value=worst_factor, bound=c,
                                     detail="max length/|T(u,w)| over all ordered pairs"))
        else:
            checks.append(BoundCheck(name=name, passed=True))
    return checks


def verify_bounds(graph: ThetaGraph) -> BoundsReport:
    """Executable form of the connectivity, sparsity and stretch theorems"""
    n, k = graph.n, graph.k
    checks = [
        BoundCheck(name="edge_count", passed=len(graph.edges) <= k * n,
                   value=float(len(graph.edges)), bound=float(k * n)),
    ]
    if k == 5:
        connected = n == 0 or is_connected(graph)
        checks.append(BoundCheck(name="connectivity", passed=connected,
                                 detail="" if connected else "graph has more than one component"))

    ratio = None
    if n >= 2:
        ratio = spanning_ratio(graph)
        if ratio.bound_checked is None:
            detail = f"no proven bound for k={k}"
        else:
            detail = f"worst pair {ratio.worst_pair}"
        checks.append(BoundCheck(
            name="spanning_ratio",
            passed=ratio.bound_satisfied is not False and ratio.connected,
            detail=detail,
            witness=list(ratio.worst_pair),
            value=ratio.ratio,
            bound=ratio.bound_checked,
        ))
        if k == 5:
            checks.extend(_check_constructive_paths(graph, distance_matrix(graph)))

    report = BoundsReport(k=k, n=n, checks=checks, ratio=ratio)
    if report.passed:
        logger.info("all %d checks passed (n=%d, k=%d)", len(checks), n, k)
    else:
        logger.warning("failed checks: %s", ", ".join(c.name for c in report.failures()))
    return report
