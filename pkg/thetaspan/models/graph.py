import math
from typing import Iterable

import numpy as np
from pydantic import BaseModel, ConfigDict, PrivateAttr, model_validator

from thetaspan.models.geometry import GeomConfig, Point


class ThetaGraph(BaseModel):
    """Vertices with stable ids (input order), undirected edges and the
    per-vertex, per-cone witness of the construction"""

    model_config = ConfigDict(frozen=True)

    config: GeomConfig
    vertices: list[Point]
    edges: frozenset[tuple[int, int]]
    cone_choice: list[list[int | None]]

    _adjacency: dict[int, list[int]] | None = PrivateAttr(default=None)
    _coords: np.ndarray | None = PrivateAttr(default=None)

    @model_validator(mode="after")
    def validate_edges(self):
        n = len(self.vertices)
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < n):
                raise ValueError(f"edge ({u}, {v}) is not a normalised id pair")
        if len(self.cone_choice) != n:
            raise ValueError("cone_choice must have one row per vertex")
        return self

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def k(self) -> int:
        return self.config.k

    @property
    def coords(self) -> np.ndarray:
        if self._coords is None:
            self._coords = np.array([[p.x, p.y] for p in self.vertices], dtype=float).reshape(-1, 2)
        return self._coords

    def neighbors(self, u: int) -> list[int]:
        if self._adjacency is None:
            adjacency: dict[int, list[int]] = {i: [] for i in range(self.n)}
            for a, b in self.edges:
                adjacency[a].append(b)
                adjacency[b].append(a)
            for row in adjacency.values():
                row.sort()
            self._adjacency = adjacency
        return self._adjacency[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def length(self, u: int, v: int) -> float:
        return self.vertices[u].distance(self.vertices[v])

    def path_length(self, ids: Iterable[int]) -> float:
        ids = list(ids)
        return math.fsum(self.length(a, b) for a, b in zip(ids, ids[1:]))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "ThetaGraph":
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return ThetaGraph(
            config=self.config,
            vertices=self.vertices,
            edges=frozenset(e for e in self.edges if e not in drop),
            cone_choice=[
                [c if c is None or (min(u, c), max(u, c)) not in drop else None for c in row]
                for u, row in enumerate(self.cone_choice)
            ],
        )
