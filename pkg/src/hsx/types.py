"""Public value types for hsx.

Provides ``Face`` and ``Hypergraph``. Faces are sorted tuples of vertex ids;
a Hypergraph is a frozen, canonicalised k-uniform weighted edge set whose
weights form the top-level measure of the complex it induces.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from hsx.validation import (
    WEIGHT_SUM_TOL,
    validate_coverage,
    validate_edges,
    validate_header,
    validate_weights,
)

#: A face of a complex: sorted, duplicate-free vertex ids. Its level is len().
Face = tuple[int, ...]

#: The single level-0 face.
EMPTY_FACE: Face = ()


def make_face(vertices: Iterable[int]) -> Face:
    """Canonical face for *vertices* (sorted, duplicates dropped)."""
    return tuple(sorted(set(vertices)))


@dataclass(frozen=True, eq=True)
class Hypergraph:
    """Immutable k-uniform hypergraph with a probability weight per edge.

    Construct through :meth:`from_edges`, which validates and canonicalises:
    edges are sorted, duplicates merged by summing weight, and the edge list
    is ordered lexicographically. Direct construction assumes that already
    happened.
    """

    k: int
    n: int
    edges: tuple[Face, ...]
    weights: tuple[float, ...]

    @classmethod
    def from_edges(
        cls,
        k: int,
        n: int,
        edges: Sequence[Sequence[int]],
        weights: Sequence[float] | None = None,
        *,
        weight_tol: float = WEIGHT_SUM_TOL,
    ) -> Hypergraph:
        """Validate raw edges and build the canonical hypergraph.

        ``weights=None`` means uniform weights over the *listed* edges, so a
        repeated edge ends up with proportionally more mass. Explicit weights
        must sum to one within ``weight_tol``.
        """
        validate_header(k, n)
        validate_edges(k, n, edges)
        if weights is None:
            weights = [1.0 / len(edges)] * len(edges)
        validate_weights(weights, len(edges), tol=weight_tol)

        merged: dict[Face, float] = {}
        for edge, weight in zip(edges, weights, strict=True):
            face = make_face(edge)
            merged[face] = merged.get(face, 0.0) + float(weight)
        canonical = tuple(sorted(merged))
        validate_coverage(n, canonical)
        return cls(
            k=k,
            n=n,
            edges=canonical,
            weights=tuple(merged[edge] for edge in canonical),
        )

    @classmethod
    def uniform(cls, k: int, n: int, edges: Sequence[Sequence[int]]) -> Hypergraph:
        """Uniform weights over the distinct edges."""
        distinct = sorted({make_face(edge) for edge in edges})
        return cls.from_edges(k, n, distinct)

    # -- derived views --

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def weight_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)

    @cached_property
    def incidence(self) -> np.ndarray:
        """Boolean ``(|E|, n)`` matrix, ``True`` where the vertex lies in the edge."""
        matrix = np.zeros((self.edge_count, self.n), dtype=bool)
        for row, edge in enumerate(self.edges):
            matrix[row, list(edge)] = True
        return matrix

    @cached_property
    def degrees(self) -> np.ndarray:
        """Π-weighted degree ``deg(i) = Σ_{e∋i} Π_k(e)``; sums to k."""
        return self.weight_array @ self.incidence

    @cached_property
    def combinatorial_degrees(self) -> np.ndarray:
        """Number of edges containing each vertex."""
        return self.incidence.sum(axis=0).astype(int)

    @property
    def total_volume(self) -> float:
        return float(self.degrees.sum())

    @property
    def is_uniform(self) -> bool:
        first = self.weights[0]
        return all(math.isclose(w, first, rel_tol=1e-12) for w in self.weights)
