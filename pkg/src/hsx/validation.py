"""Validation of raw hypergraph input.

Kept apart from :mod:`hsx.types` because these are pure functions of the
raw edge and weight lists (no canonicalisation, no complex), which keeps
every rule and its diagnostic directly testable. Each check raises on the
*first* violation and names the offending index.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

from hsx.errors import HypergraphError

#: Weights must sum to one within this tolerance.
WEIGHT_SUM_TOL = 1e-12


def validate_header(k: object, n: object) -> None:
    """Reject a uniformity or vertex count that is not a usable integer."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise HypergraphError(f"Uniformity k must be an integer >= 2, got {k!r}", k=k)
    if not isinstance(n, int) or isinstance(n, bool) or n < k:
        raise HypergraphError(
            f"Vertex count must be an integer >= k={k}, got {n!r}", vertices=n
        )


def validate_edges(k: int, n: int, edges: Sequence[Sequence[object]]) -> None:
    """Every edge has exactly ``k`` distinct integer vertices in ``0..n-1``."""
    if len(edges) == 0:
        raise HypergraphError("Hypergraph has no edges")
    for index, edge in enumerate(edges):
        if isinstance(edge, (str, bytes)) or not isinstance(edge, Sequence):
            raise HypergraphError(
                f"Edge {index} is not a list of vertices", index=index
            )
        if len(edge) != k:
            raise HypergraphError(
                f"Edge {index} has {len(edge)} vertices, expected k={k}",
                index=index,
                size=len(edge),
            )
        for vertex in edge:
            if not isinstance(vertex, int) or isinstance(vertex, bool):
                raise HypergraphError(
                    f"Edge {index} contains non-integer vertex {vertex!r}",
                    index=index,
                    vertex=vertex,
                )
            if not 0 <= vertex < n:
                raise HypergraphError(
                    f"Edge {index} has vertex {vertex} outside 0..{n - 1}",
                    index=index,
                    vertex=vertex,
                )
        if len(set(edge)) != k:
            raise HypergraphError(
                f"Edge {index} repeats a vertex, expected {k} distinct vertices",
                index=index,
            )


def validate_weights(
    weights: Sequence[object], edge_count: int, *, tol: float = WEIGHT_SUM_TOL
) -> None:
    """Weights are finite, strictly positive, one per edge, and sum to one within *tol*."""
    if len(weights) != edge_count:
        raise HypergraphError(
            f"Got {len(weights)} weights for {edge_count} edges",
            weights=len(weights),
            edges=edge_count,
        )
    for index, weight in enumerate(weights):
        if not isinstance(weight, (int, float)) or isinstance(weight, bool):
            raise HypergraphError(
                f"Weight {index} is not a number: {weight!r}", index=index
            )
        if not math.isfinite(weight) or weight <= 0:
            raise HypergraphError(
                f"Weight {index} must be positive, got {weight!r}",
                index=index,
                weight=weight,
            )
    total = math.fsum(float(w) for w in weights)  # type: ignore[arg-type]
    if abs(total - 1.0) > tol:
        raise HypergraphError(
            f"Weights sum to {total!r}, expected 1", weight_sum=total
        )


def validate_coverage(n: int, edges: Sequence[Sequence[int]]) -> None:
    """Every vertex ``0..n-1`` lies in at least one edge."""
    covered = set().union(*(set(edge) for edge in edges))
    missing = [v for v in range(n) if v not in covered]
    if missing:
        raise HypergraphError(
            f"Vertex {missing[0]} is not contained in any edge",
            vertex=missing[0],
            uncovered=tuple(missing),
        )
