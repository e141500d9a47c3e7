"""Dense weighted graphs: walk graphs, swap graphs and link skeletons.

A WeightedGraph stores a symmetric non-negative weight matrix over a list of
labelled vertices. Bipartite graphs built from two levels keep one label per
side, so a face appearing on both sides (``m == l``) is two distinct vertices.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from hsx.errors import CutSetError, IsolatedVertexError
from hsx.types import Face

#: A vertex label: a face, tagged with its side in a bipartite graph.
Vertex = Face | tuple[int, Face]


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Undirected graph with dense symmetric weights.

    ``sides`` is ``None`` for an ordinary graph; for a bipartite graph it is
    an int array with 0 for the first vertex class and 1 for the second.
    Self-loops sit on the diagonal and count once toward the degree.
    """

    name: str
    vertices: tuple[Vertex, ...]
    weights: np.ndarray
    sides: np.ndarray | None = field(default=None)

    def __post_init__(self) -> None:
        size = len(self.vertices)
        if self.weights.shape != (size, size):
            raise ValueError(
                f"Weight matrix shape {self.weights.shape} does not match "
                f"{size} vertices"
            )

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def is_bipartite(self) -> bool:
        return self.sides is not None

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.weights.sum(axis=1)

    @property
    def total_volume(self) -> float:
        return float(self.degrees.sum())

    def _require_positive_degrees(self) -> np.ndarray:
        degrees = self.degrees
        isolated = np.flatnonzero(degrees <= 0.0)
        if isolated.size:
            raise IsolatedVertexError(self.name, self.vertices[int(isolated[0])])
        return degrees

    @cached_property
    def walk_matrix(self) -> np.ndarray:
        """Random-walk matrix ``D⁻¹ A``; rows sum to one."""
        degrees = self._require_positive_degrees()
        return self.weights / degrees[:, None]

    @cached_property
    def symmetric_adjacency(self) -> np.ndarray:
        """``D^{-1/2} A D^{-1/2}``, similar to the walk matrix."""
        scale = 1.0 / np.sqrt(self._require_positive_degrees())
        matrix = scale[:, None] * self.weights * scale[None, :]
        return (matrix + matrix.T) / 2.0

    # -- cuts --

    def mask(self, subset: Iterable[int]) -> np.ndarray:
        """Boolean membership vector for vertex *positions* in ``subset``."""
        chosen = np.zeros(self.order, dtype=bool)
        for position in subset:
            if not 0 <= position < self.order:
                raise CutSetError(
                    f"Vertex position {position} is outside 0..{self.order - 1}",
                    position=position,
                )
            chosen[position] = True
        return chosen

    def volume(self, chosen: np.ndarray) -> float:
        return float(self.degrees[chosen].sum())

    def boundary(self, chosen: np.ndarray) -> float:
        """Total weight of edges with exactly one endpoint in ``chosen``."""
        return float(self.weights[np.ix_(chosen, ~chosen)].sum())

    def conductance(self, chosen: np.ndarray) -> float:
        if not chosen.any() or chosen.all():
            raise CutSetError(
                "Cut set must be a nonempty proper subset of the vertices",
                size=int(chosen.sum()),
            )
        volume = self.volume(chosen)
        if volume <= 0.0:
            raise IsolatedVertexError(self.name, self.vertices[int(np.argmax(chosen))])
        return self.boundary(chosen) / volume

    def positions(self, labels: Iterable[Vertex]) -> list[int]:
        lookup = {label: i for i, label in enumerate(self.vertices)}
        try:
            return [lookup[label] for label in labels]
        except KeyError as exc:
            raise CutSetError(
                f"Vertex {exc.args[0]!r} is not in graph {self.name!r}",
                vertex=exc.args[0],
            ) from None


def bipartite_graph(
    name: str,
    left: tuple[Face, ...],
    right: tuple[Face, ...],
    block: np.ndarray,
) -> WeightedGraph:
    """Bipartite graph whose left-to-right weights are ``block``."""
    a, b = len(left), len(right)
    weights = np.zeros((a + b, a + b))
    weights[:a, a:] = block
    weights[a:, :a] = block.T
    vertices: tuple[Vertex, ...] = tuple((0, f) for f in left) + tuple(
        (1, f) for f in right
    )
    sides = np.concatenate([np.zeros(a, dtype=int), np.ones(b, dtype=int)])
    return WeightedGraph(name=name, vertices=vertices, weights=weights, sides=sides)


def graph_from_edges(
    name: str, order: int, edges: Iterable[tuple[int, int, float]]
) -> WeightedGraph:
    """Small helper for plain graphs on ``0..order-1``; repeated edges add up."""
    weights = np.zeros((order, order))
    for a, b, w in edges:
        weights[a, b] += w
        if a != b:
            weights[b, a] += w
    return WeightedGraph(
        name=name, vertices=tuple((v,) for v in range(order)), weights=weights
    )
