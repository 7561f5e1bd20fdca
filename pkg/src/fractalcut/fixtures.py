"""Bundled fixtures: connected planar max-degree-3 graphs with hand-built
two-page embeddings, used by the reduction checks and the CLI verify suite.

Each entry carries the graph, a spine order, a page assignment, and the
minimum vertex cover size (frozen from the exhaustive solver and easy to
confirm by hand on these small graphs).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .reducer import TwoPageEmbedding, VcInstance


@dataclass(frozen=True)
class VcFixture:
    name: str
    n: int
    edges: tuple[tuple[int, int], ...]
    order: tuple[int, ...]
    upper: tuple[tuple[int, int], ...]
    lower: tuple[tuple[int, int], ...]
    min_cover: int

    def graph(self) -> Graph:
        return Graph(False, self.n, list(self.edges))

    def embedding(self) -> TwoPageEmbedding:
        pages = {}
        for u, v in self.upper:
            pages[(min(u, v), max(u, v))] = "upper"
        for u, v in self.lower:
            pages[(min(u, v), max(u, v))] = "lower"
        return TwoPageEmbedding(self.order, pages)

    def instance(self, k: int) -> VcInstance:
        return VcInstance(self.graph(), k)


VC_FIXTURES: tuple[VcFixture, ...] = (
    VcFixture(
        name="path4", n=4,
        edges=((0, 1), (1, 2), (2, 3)),
        order=(0, 1, 2, 3),
        upper=((0, 1), (1, 2), (2, 3)), lower=(),
        min_cover=2),
    VcFixture(
        name="star4", n=4,
        edges=((0, 1), (0, 2), (0, 3)),
        order=(1, 0, 2, 3),
        upper=((0, 1), (0, 2), (0, 3)), lower=(),
        min_cover=1),
    VcFixture(
        name="cycle4", n=4,
        edges=((0, 1), (1, 2), (2, 3), (0, 3)),
        order=(0, 1, 2, 3),
        upper=((0, 1), (1, 2), (2, 3)), lower=((0, 3),),
        min_cover=2),
    VcFixture(
        name="diamond", n=4,
        edges=((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)),
        order=(0, 1, 2, 3),
        upper=((0, 1), (1, 2), (2, 3), (0, 2)), lower=((1, 3),),
        min_cover=2),
    VcFixture(
        name="k4", n=4,
        edges=((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
        order=(0, 1, 2, 3),
        upper=((0, 1), (1, 2), (2, 3), (0, 3), (0, 2)), lower=((1, 3),),
        min_cover=3),
    VcFixture(
        name="cycle5", n=5,
        edges=((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)),
        order=(0, 1, 2, 3, 4),
        upper=((0, 1), (1, 2), (2, 3), (3, 4)), lower=((0, 4),),
        min_cover=3),
    VcFixture(
        name="bull", n=5,
        edges=((0, 1), (1, 2), (0, 2), (1, 3), (2, 4)),
        order=(3, 1, 0, 2, 4),
        upper=((0, 1), (1, 2), (0, 2), (1, 3), (2, 4)), lower=(),
        min_cover=2),
    VcFixture(
        name="cycle6", n=6,
        edges=((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)),
        order=(0, 1, 2, 3, 4, 5),
        upper=((0, 1), (1, 2), (2, 3), (3, 4), (4, 5)), lower=((0, 5),),
        min_cover=3),
    VcFixture(
        name="prism", n=6,
        edges=((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
               (0, 3), (1, 4), (2, 5)),
        order=(0, 1, 2, 5, 4, 3),
        upper=((0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (1, 4)),
        lower=((0, 2), (3, 5)),
        min_cover=4),
)
