import numpy as np
import pytest

from thetaspan.engine.graph_build import build_for_points
from thetaspan.models.geometry import GeomConfig, Point


def random_points(n: int, seed: int) -> list[Point]:
    rng = np.random.default_rng(seed)
    return [Point.of(x, y) for x, y in rng.uniform(0.0, 1.0, size=(n, 2))]


@pytest.fixture
def cfg5():
    return GeomConfig(k=5)


@pytest.fixture
def make_points():
    return random_points


@pytest.fixture
def make_graph():
    def _make(n: int, seed: int, k: int = 5):
        return build_for_points(random_points(n, seed), k=k)

    return _make
