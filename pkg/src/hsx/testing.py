"""Random instances for tests and examples.

Usage::

    import numpy as np
    from hsx.testing import random_hypergraph

    rng = np.random.default_rng(7)
    h = random_hypergraph(rng, n=8, k=3, edge_count=6, weighted=True)
"""

from __future__ import annotations

from math import comb

import numpy as np

from hsx.errors import ParameterError
from hsx.types import Face, Hypergraph


def random_hypergraph(
    rng: np.random.Generator,
    n: int,
    k: int,
    edge_count: int,
    *,
    weighted: bool = False,
) -> Hypergraph:
    """k-uniform hypergraph on ``0..n-1`` covering every vertex.

    A random cover of the vertices is laid down first, then random k-subsets
    are added until ``edge_count`` distinct edges exist (or all C(n, k) do).
    With ``weighted`` the edge weights are drawn from [0.5, 2) and normalised.
    """
    if not 2 <= k <= n:
        raise ParameterError(f"Need 2 <= k <= n, got k={k}, n={n}", k=k, n=n)
    order = rng.permutation(n)
    edges: set[Face] = set()
    for start in range(0, n, k):
        chunk = set(int(v) for v in order[start : start + k])
        while len(chunk) < k:
            chunk.add(int(rng.integers(n)))
        edges.add(tuple(sorted(chunk)))

    target = min(max(edge_count, len(edges)), comb(n, k))
    while len(edges) < target:
        pick = rng.choice(n, size=k, replace=False)
        edges.add(tuple(sorted(int(v) for v in pick)))

    ordered = sorted(edges)
    weights = None
    if weighted:
        raw = rng.uniform(0.5, 2.0, size=len(ordered))
        weights = (raw / raw.sum()).tolist()
    return Hypergraph.from_edges(k, n, ordered, weights)


def random_function(rng: np.random.Generator, size: int) -> np.ndarray:
    """Standard normal test vector."""
    return rng.standard_normal(size)
