# thetaspan/engine/path_construct.py
"""Constructive θ₅ spanning paths.

Every pair (u, w) is handled in the frame where w lies in the closed right half
of C0^u. Each step emits an edge or two and recurses once on a pair whose
canonical triangle is strictly smaller, so the recursion is a single chain.
"""
import logging
import math
from dataclasses import dataclass

from thetaspan import config
from thetaspan.engine.geometry_core import (
    bisector_angle_alpha,
    canonical_triangle,
    cone_position,
    frame_cone,
    original_cone,
    to_canonical_frame,
    triangle_size,
)
from thetaspan.errors import (
    ConstructionFailure,
    DegenerateInputError,
    ExhaustivenessError,
    GraphIntegrityError,
)
from thetaspan.models.graph import ThetaGraph
from thetaspan.models.paths import SPANNER_CONSTANTS, SQRT5, CaseLabel, CaseStep, PathResult

logger = logging.getLogger(__name__)

C = SPANNER_CONSTANTS.c
SWAP_ANGLE = math.pi / 10


def case_constants() -> dict[str, float]:
    """Closed-form constants of the case analysis"""
    pi = math.pi
    return {
        "case1_ratio": math.sin(3 * pi / 5) / math.sin(3 * pi / 10) * math.tan(pi / 5),
        "case4b_ratio": math.sin(pi / 10) / math.sin(3 * pi / 10),
        "case4e2_ratio": math.sin(pi / 10) / math.sin(7 * pi / 10) / math.cos(pi / 5),
        "case4e3_ratio": 1 / C + 5 - 2 * SQRT5,
        "case2_threshold": math.sin(7 * pi / 10) / math.sin(pi / 10),
        "case4e3_induction_threshold": 1 / (2 * SQRT5 - 4),
        "c_case1": 2 * (2 + SQRT5),
        "c_case4b": 0.5 * (1 + SQRT5),
        "c_case4e2": 2 + SQRT5,
        "c_case4e3": 0.5 * (7 + 3 * SQRT5),
    }


# prefix, suffix and orientation of the single recursive call per case
_TEMPLATES = {
    CaseLabel.SWAP_SIDES: (False, False, True),
    CaseLabel.CASE_1: (False, True, False),
    CaseLabel.CASE_2: (False, True, False),
    CaseLabel.CASE_3: (False, True, False),
    CaseLabel.CASE_4A: (False, True, False),
    CaseLabel.CASE_4B: (True, False, False),
    CaseLabel.CASE_4C: (True, False, False),
    CaseLabel.CASE_4D: (True, True, False),
    CaseLabel.CASE_4E1: (True, False, True),
    CaseLabel.CASE_4E2: (True, True, True),
    CaseLabel.CASE_4E3: (True, True, True),
}


@dataclass(frozen=True)
class Classification:
    label: CaseLabel
    v_w: int | None = None
    v_u: int | None = None
    flagged: bool = False

    def child(self, u: int, w: int) -> tuple[int, int] | None:
        """Ordered pair of the recursive call"""
        label = self.label
        if label == CaseLabel.BASE_EDGE:
            return None
        if label == CaseLabel.SWAP_SIDES:
            return (w, u)
        if label in (CaseLabel.CASE_1, CaseLabel.CASE_2, CaseLabel.CASE_3, CaseLabel.CASE_4A):
            return (u, self.v_w)
        if label in (CaseLabel.CASE_4B, CaseLabel.CASE_4C):
            return (self.v_u, w)
        if label == CaseLabel.CASE_4D:
            return (self.v_u, self.v_w)
        if label == CaseLabel.CASE_4E1:
            return (w, self.v_u)
        return (self.v_w, self.v_u)


class _Frame:
    """Cone queries for one pair (u, w), expressed in its canonical frame"""

    def __init__(self, graph: ThetaGraph, u: int, w: int):
        self.graph = graph
        self.cfg = graph.config
        self.u, self.w = u, w
        pu, pw = graph.vertices[u], graph.vertices[w]
        self.anchor, _ = cone_position(self.cfg, pu, pw)
        self.transform = to_canonical_frame(self.cfg, pu, pw)
        self.flagged = False

    def cone(self, a: int, b: int) -> int:
        """Frame cone of a containing b"""
        c, on_boundary = cone_position(self.cfg, self.graph.vertices[a], self.graph.vertices[b])
        self.flagged |= on_boundary
        return frame_cone(self.cfg, self.transform, c, self.anchor)

    def closest(self, a: int, cone_in_frame: int) -> int:
        cone = original_cone(self.cfg, self.transform, cone_in_frame, self.anchor)
        choice = self.graph.cone_choice[a][cone]
        if choice is None:
            raise GraphIntegrityError(
                f"vertex {a} has no witness in cone {cone} although it is non-empty", vertex=a, cone=cone
            )
        return choice

    def v_w_in_c3_of_b(self, v_w: int) -> bool:
        """Whether v_w lies in C3 of the right corner b of T(u, w), in frame coordinates"""
        tf = self.transform
        pu = self.graph.vertices[self.u]
        triangle = canonical_triangle(self.cfg, pu, tf.apply(self.graph.vertices[self.w]))
        c, on_boundary = cone_position(self.cfg, triangle.corner_b, tf.apply(self.graph.vertices[v_w]))
        self.flagged |= on_boundary
        return c == 3

    def context(self, **extra) -> dict:
        g = self.graph
        return {
            "u": self.u,
            "w": self.w,
            "u_point": g.vertices[self.u].as_tuple(),
            "w_point": g.vertices[self.w].as_tuple(),
            "anchor_cone": self.anchor,
            "reflected": self.transform.reflect,
            **extra,
        }


def classify_case(graph: ThetaGraph, u: int, w: int, connectivity_only: bool = False) -> Classification:
    """Case of the construction for the ordered pair (u, w), with its witnesses"""
    if u == w:
        raise DegenerateInputError("classification needs two distinct vertices", vertex=u)
    if graph.has_edge(u, w):
        return Classification(CaseLabel.BASE_EDGE)

    cfg = graph.config
    frame = _Frame(graph, u, w)
    pu, pw = graph.vertices[u], graph.vertices[w]
    alpha = bisector_angle_alpha(cfg, pu, pw)
    slack = cfg.tiebreak_rotation + cfg.tolerance / pu.distance(pw)
    near_swap = abs(alpha - SWAP_ANGLE) <= slack
    if alpha < SWAP_ANGLE - slack:
        return Classification(CaseLabel.SWAP_SIDES)

    # closest vertex to w in the cone of w containing u (C3 in the frame)
    v_w = frame.closest(w, frame.cone(w, u))
    v_w_cone = frame.cone(u, v_w)
    by_cone = {2: CaseLabel.CASE_1, 1: CaseLabel.CASE_2, 0: CaseLabel.CASE_3}
    if v_w_cone in by_cone:
        return Classification(by_cone[v_w_cone], v_w=v_w, flagged=frame.flagged or near_swap)
    if v_w_cone != 4:
        raise ExhaustivenessError("v_w lies in C3 of u", **frame.context(v_w=v_w, v_w_cone=v_w_cone))
    if connectivity_only or frame.v_w_in_c3_of_b(v_w):
        return Classification(CaseLabel.CASE_4A, v_w=v_w, flagged=frame.flagged or near_swap)

    v_u = frame.closest(u, 0)
    w_cone = frame.cone(v_u, w)
    flagged = frame.flagged or near_swap
    if w_cone == 4:
        return Classification(CaseLabel.CASE_4B, v_w=v_w, v_u=v_u, flagged=flagged)
    if w_cone == 0:
        return Classification(CaseLabel.CASE_4C, v_w=v_w, v_u=v_u, flagged=flagged)
    if w_cone == 1:
        v_u_cone = frame.cone(w, v_u)
        if v_u_cone == 3:
            return Classification(CaseLabel.CASE_4D, v_w=v_w, v_u=v_u, flagged=frame.flagged or near_swap)
        if v_u_cone == 4:
            if triangle_size(cfg, pw, graph.vertices[v_u]) <= (C - 1) / C * triangle_size(cfg, pu, pw):
                return Classification(CaseLabel.CASE_4E1, v_w=v_w, v_u=v_u, flagged=frame.flagged or near_swap)
            v_u_from_v_w = frame.cone(v_w, v_u)
            flagged = frame.flagged or near_swap
            if v_u_from_v_w == 0:
                return Classification(CaseLabel.CASE_4E2, v_w=v_w, v_u=v_u, flagged=flagged)
            if v_u_from_v_w == 1:
                return Classification(CaseLabel.CASE_4E3, v_w=v_w, v_u=v_u, flagged=flagged)
    raise ExhaustivenessError(
        "no case of the construction applies", **frame.context(v_w=v_w, v_u=v_u, w_cone=w_cone)
    )


class PathBuilder:
    """Runs the construction on one graph, memoising every solved ordered pair"""

    def __init__(self, graph: ThetaGraph, connectivity_only: bool = False):
        if graph.k != 5:
            raise DegenerateInputError("the constructive path is defined for θ₅-graphs", k=graph.k)
        self.graph = graph
        self.connectivity_only = connectivity_only
        self.depth_cap = max(1, config.RECURSION_DEPTH_FACTOR * graph.n)
        self._memo: dict[tuple[int, int], tuple[list[int], list[CaseStep]]] = {}

    def size(self, a: int, b: int) -> float:
        return triangle_size(self.graph.config, self.graph.vertices[a], self.graph.vertices[b])

    def path(self, u: int, w: int) -> PathResult:
        if u == w:
            raise DegenerateInputError("a spanning path needs two distinct vertices", vertex=u)
        ids, trace = self._solve(u, w)
        return PathResult(vertices=ids, length=self.graph.path_length(ids), case_trace=trace)

    def _solve(self, u: int, w: int) -> tuple[list[int], list[CaseStep]]:
        # walk down the single recursion chain
        chain: list[tuple[int, int, Classification, float]] = []
        pair = (u, w)
        while pair not in self._memo:
            s, t = pair
            size = self.size(s, t)
            if chain and not size < chain[-1][3]:
                raise ConstructionFailure(
                    "canonical triangle did not shrink",
                    pair=pair, size=size, parent=chain[-1][:2], parent_size=chain[-1][3],
                )
            if len(chain) >= self.depth_cap:
                raise ConstructionFailure("recursion depth cap exceeded", pair=(u, w), cap=self.depth_cap)
            case = classify_case(self.graph, s, t, self.connectivity_only)
            chain.append((s, t, case, size))
            if case.label == CaseLabel.BASE_EDGE:
                self._memo[pair] = ([s, t], [CaseStep(label=case.label, source=s, target=t, size=size, depth=0)])
                chain.pop()
                break
            pair = case.child(s, t)

        if chain and pair in self._memo and chain[-1][3] <= self.size(*pair):
            s, t, _, size = chain[-1]
            raise ConstructionFailure(
                "canonical triangle did not shrink", pair=pair, size=self.size(*pair), parent=(s, t), parent_size=size
            )

        # assemble back up the chain
        ids, trace = self._memo[pair]
        for s, t, case, size in reversed(chain):
            prefix, suffix, flip = _TEMPLATES[case.label]
            inner = ids[::-1] if flip else ids
            ids = ([s] if prefix else []) + inner + ([t] if suffix else [])
            step = CaseStep(label=case.label, source=s, target=t, size=size, depth=0, flagged=case.flagged)
            trace = [step] + trace
            self._memo[(s, t)] = (ids, trace)
        trace = [step.model_copy(update={"depth": depth}) for depth, step in enumerate(trace)]
        return ids, trace


def spanning_path(graph: ThetaGraph, u: int, w: int) -> PathResult:
    """Path of length at most c·|T(u,w)| between u and w"""
    return PathBuilder(graph).path(u, w)


def connectivity_path(graph: ThetaGraph, u: int, w: int) -> PathResult:
    """The simpler recursion of the connectivity argument: swap, or go via v_w"""
    return PathBuilder(graph, connectivity_only=True).path(u, w)
