"""Weighted simplicial complexes induced by k-uniform hypergraphs.

The complex is the downward closure of the edge set. Level ``l`` holds the
faces of cardinality ``l`` in lexicographic order, which fixes every matrix
row/column index downstream. Each level carries the measure

    Π_l(s) = (1 / C(k, l)) · Σ_{e ⊇ s} Π_k(e)

so ``Σ_{t ⊇ s, t ∈ X(l)} Π_l(t) = C(l, m) · Π_m(s)`` for every ``s ∈ X(m)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from hsx._log import get_logger
from hsx.errors import BudgetError, DimensionError, FaceNotFoundError, LevelError
from hsx.graph import WeightedGraph
from hsx.types import EMPTY_FACE, Face, Hypergraph, make_face

logger = get_logger(__name__)

#: Default cap on Σ_l |X(l)|.
DEFAULT_FACE_BUDGET = 200_000


@dataclass(frozen=True, eq=False)
class LevelMeasure:
    """Probability measure on one level, aligned with that level's faces."""

    level: int
    faces: tuple[Face, ...]
    probabilities: np.ndarray

    def __getitem__(self, face: Face) -> float:
        try:
            return float(self.probabilities[self.faces.index(face)])
        except ValueError:
            raise FaceNotFoundError(face) from None

    @property
    def total(self) -> float:
        return float(self.probabilities.sum())


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Immutable weighted pure complex ``(X, Π)`` of dimension ``k``.

    ``levels[l]`` lists X(l) lexicographically for ``l = 0..k``; ``measures[l]``
    is Π_l on the same ordering.
    """

    k: int
    levels: dict[int, tuple[Face, ...]]
    measures: dict[int, LevelMeasure]
    #: Face each vertex label was shifted by (non-empty only for links).
    anchor: Face = EMPTY_FACE
    _index: dict[int, dict[Face, int]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        index = {
            level: {face: i for i, face in enumerate(faces)}
            for level, faces in self.levels.items()
        }
        object.__setattr__(self, "_index", index)

    # -- lookups --

    def faces(self, level: int) -> tuple[Face, ...]:
        self._check_level(level)
        return self.levels[level]

    def index(self, level: int) -> dict[Face, int]:
        self._check_level(level)
        return self._index[level]

    def measure(self, level: int) -> np.ndarray:
        self._check_level(level)
        return self.measures[level].probabilities

    def probability(self, face: Face) -> float:
        position = self.position(face)
        return float(self.measures[len(face)].probabilities[position])

    def position(self, face: Face) -> int:
        level = len(face)
        if level > self.k or face not in self._index[level]:
            raise FaceNotFoundError(face)
        return self._index[level][face]

    def __contains__(self, face: object) -> bool:
        if not isinstance(face, tuple):
            return False
        level = len(face)
        return level <= self.k and face in self._index[level]

    @property
    def size(self) -> int:
        """Total number of faces over all levels, including the empty face."""
        return sum(len(faces) for faces in self.levels.values())

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(face[0] for face in self.levels.get(1, ()))

    def _check_level(self, level: int) -> None:
        if not 0 <= level <= self.k:
            raise LevelError(
                f"Level {level} is outside 0..{self.k}", levels=(level,), k=self.k
            )


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def induce_complex(
    h: Hypergraph, *, face_budget: int = DEFAULT_FACE_BUDGET
) -> SimplicialComplex:
    """Downward-close ``h`` and attach every level measure.

    Raises:
        BudgetError: More than ``face_budget`` distinct faces would be
            materialised. Checked while enumerating, so an oversized input
            fails before it exhausts memory.
    """
    k = h.k
    mass: list[dict[Face, float]] = [{} for _ in range(k + 1)]
    count = 0
    for edge, weight in zip(h.edges, h.weights):
        for level in range(k + 1):
            scale = weight / comb(k, level)
            table = mass[level]
            for face in combinations(edge, level):
                if face not in table:
                    count += 1
                    if count > face_budget:
                        raise BudgetError(
                            f"Complex exceeds the face budget of {face_budget}",
                            budget=face_budget,
                            required=count,
                        )
                    table[face] = 0.0
                table[face] += scale
    # Level 0 accumulated Σ_e Π_k(e) = 1 exactly up to rounding; pin it.
    mass[0][EMPTY_FACE] = 1.0

    levels: dict[int, tuple[Face, ...]] = {}
    measures: dict[int, LevelMeasure] = {}
    for level in range(k + 1):
        faces = tuple(sorted(mass[level]))
        levels[level] = faces
        measures[level] = LevelMeasure(
            level=level,
            faces=faces,
            probabilities=np.array([mass[level][f] for f in faces], dtype=float),
        )
    logger.debug(
        f"Induced complex k={k}: "
        + ", ".join(f"|X({l})|={len(levels[l])}" for l in range(1, k + 1))
    )
    return SimplicialComplex(k=k, levels=levels, measures=measures)


def link(x: SimplicialComplex, s: Face) -> SimplicialComplex:
    """Link complex ``X_s = {t \\ s | s ⊆ t ∈ X}`` with renormalised measures.

    Level ``j`` of the link is weighted by Π_{j+|s|} restricted to supersets
    of ``s``, renormalised to sum to one. ``s`` may list its vertices in any
    order but not repeat one.
    """
    given = tuple(s)
    s = make_face(given)
    if len(s) != len(given) or s not in x:
        raise FaceNotFoundError(given)
    anchor = set(s)
    depth = len(s)
    levels: dict[int, tuple[Face, ...]] = {}
    measures: dict[int, LevelMeasure] = {}
    for j in range(x.k - depth + 1):
        collected: dict[Face, float] = {}
        source = x.measures[j + depth]
        for face, p in zip(source.faces, source.probabilities):
            if anchor.issubset(face):
                collected[tuple(v for v in face if v not in anchor)] = float(p)
        faces = tuple(sorted(collected))
        probabilities = np.array([collected[f] for f in faces], dtype=float)
        probabilities /= probabilities.sum()
        levels[j] = faces
        measures[j] = LevelMeasure(level=j, faces=faces, probabilities=probabilities)
    return SimplicialComplex(
        k=x.k - depth,
        levels=levels,
        measures=measures,
        anchor=tuple(sorted(set(x.anchor) | anchor)),
    )


def skeleton(x_s: SimplicialComplex) -> WeightedGraph:
    """Graph on X_s(1) with edges X_s(2) weighted by the link's Π_2."""
    if x_s.k < 2:
        raise DimensionError(
            f"Skeleton needs a complex of dimension >= 2, got {x_s.k}",
            dimension=x_s.k,
        )
    vertices = x_s.levels[1]
    position = x_s.index(1)
    weights = np.zeros((len(vertices), len(vertices)))
    pairs = x_s.measures[2]
    for (a, b), p in zip(pairs.faces, pairs.probabilities):
        i, j = position[(a,)], position[(b,)]
        weights[i, j] = weights[j, i] = p
    label = "G(X)" if not x_s.anchor else f"G(X_{list(x_s.anchor)})"
    return WeightedGraph(name=label, vertices=vertices, weights=weights)


def faces_up_to(x: SimplicialComplex, level: int) -> list[Face]:
    """X(≤ level) in level-then-lexicographic order."""
    return [face for l in range(min(level, x.k) + 1) for face in x.levels[l]]


def check_measure_consistency(x: SimplicialComplex) -> float:
    """Largest violation of ``Σ_{t ⊇ s} Π_l(t) = C(l, m) Π_m(s)`` over all m ≤ l."""
    from hsx.walks import incidence

    worst = 0.0
    for l in range(x.k + 1):
        for m in range(l + 1):
            lifted = incidence(x, m, l) @ x.measure(l)
            worst = max(worst, float(np.max(np.abs(lifted - comb(l, m) * x.measure(m)))))
    return worst
