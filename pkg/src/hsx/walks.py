"""Walk operators on the levels of a complex and the graphs that realise them.

Operator matrices are indexed ``(codomain face, domain face)``: a map
``R^{X(m)} -> R^{X(l)}`` has ``|X(l)|`` rows. Applying an operator to a
function on its domain averages it over the codomain face's neighbours, so
each row is a probability distribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from hsx._log import get_logger
from hsx.complex import SimplicialComplex
from hsx.errors import LevelError
from hsx.graph import WeightedGraph, bipartite_graph
from hsx.types import Face

logger = get_logger(__name__)

#: Row sums of a transition matrix must be within this of one.
STOCHASTIC_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class WalkOperator:
    """Linear map between level function spaces with its Π context.

    ``rows`` are the codomain faces and ``cols`` the domain faces; the two
    measures are the level measures on those faces and define the inner
    products under which :meth:`adjoint` is taken.
    """

    name: str
    domain_level: int
    codomain_level: int
    rows: tuple[Face, ...]
    cols: tuple[Face, ...]
    matrix: np.ndarray
    codomain_measure: np.ndarray
    domain_measure: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape  # type: ignore[return-value]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def apply(self, f: np.ndarray) -> np.ndarray:
        return self.matrix @ np.asarray(f, dtype=float)

    def adjoint(self) -> WalkOperator:
        """Adjoint under Π-weighted inner products: ``P_dom⁻¹ Mᵀ P_cod``."""
        matrix = (
            self.matrix.T * self.codomain_measure[None, :]
        ) / self.domain_measure[:, None]
        return WalkOperator(
            name=f"{self.name}†",
            domain_level=self.codomain_level,
            codomain_level=self.domain_level,
            rows=self.cols,
            cols=self.rows,
            matrix=matrix,
            codomain_measure=self.domain_measure,
            domain_measure=self.codomain_measure,
        )

    def compose(self, other: WalkOperator) -> WalkOperator:
        """``self ∘ other``: apply *other* first."""
        if other.rows != self.cols:
            raise LevelError(
                f"Cannot compose {self.name} after {other.name}: "
                f"X({other.codomain_level}) does not feed X({self.domain_level})",
                levels=(other.codomain_level, self.domain_level),
                k=max(self.codomain_level, other.domain_level),
            )
        return WalkOperator(
            name=f"{self.name}·{other.name}",
            domain_level=other.domain_level,
            codomain_level=self.codomain_level,
            rows=self.rows,
            cols=other.cols,
            matrix=self.matrix @ other.matrix,
            codomain_measure=self.codomain_measure,
            domain_measure=other.domain_measure,
        )

    def __matmul__(self, other: WalkOperator) -> WalkOperator:
        return self.compose(other)

    def symmetrized(self) -> np.ndarray:
        """``P_cod^{1/2} M P_dom^{-1/2}``, whose plain singular values are σ_i."""
        return (
            np.sqrt(self.codomain_measure)[:, None]
            * self.matrix
            / np.sqrt(self.domain_measure)[None, :]
        )

    def row_sum_error(self) -> float:
        return float(np.max(np.abs(self.matrix.sum(axis=1) - 1.0)))

    def is_row_stochastic(self, tol: float = STOCHASTIC_TOL) -> bool:
        return bool((self.matrix >= 0.0).all()) and self.row_sum_error() <= tol


def compose(a: WalkOperator, b: WalkOperator) -> WalkOperator:
    return a.compose(b)


def adjoint(op: WalkOperator) -> WalkOperator:
    return op.adjoint()


def inner_product(x: SimplicialComplex, level: int, f: np.ndarray, g: np.ndarray) -> float:
    """``⟨f, g⟩ = Σ_s Π_level(s) f(s) g(s)``."""
    return float(np.sum(x.measure(level) * np.asarray(f) * np.asarray(g)))


# ---------------------------------------------------------------------------
# Level checks
# ---------------------------------------------------------------------------


def _check_ordered(x: SimplicialComplex, m: int, l: int, *, lowest: int = 0) -> None:
    if not (lowest <= m <= x.k and lowest <= l <= x.k):
        raise LevelError(
            f"Levels ({m}, {l}) must lie in {lowest}..{x.k}", levels=(m, l), k=x.k
        )
    if m > l:
        raise LevelError(f"Level {m} must not exceed level {l}", levels=(m, l), k=x.k)


def _check_swap(x: SimplicialComplex, m: int, l: int) -> None:
    if m < 1 or l < 1:
        raise LevelError(
            f"Swap levels must be at least 1, got ({m}, {l})", levels=(m, l), k=x.k
        )
    if m + l > x.k:
        raise LevelError(
            f"Swap levels ({m}, {l}) sum to more than k={x.k}", levels=(m, l), k=x.k
        )


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------


def incidence(x: SimplicialComplex, m: int, l: int) -> np.ndarray:
    """0/1 matrix with rows X(m), columns X(l), one where the row face ⊆ column face."""
    _check_ordered(x, m, l)
    rows = x.index(m)
    matrix = np.zeros((len(x.levels[m]), len(x.levels[l])))
    for column, face in enumerate(x.levels[l]):
        for sub in combinations(face, m):
            matrix[rows[sub], column] = 1.0
    return matrix


def _operator(
    x: SimplicialComplex, name: str, domain: int, codomain: int, matrix: np.ndarray
) -> WalkOperator:
    logger.debug(f"Assembled {name}: {matrix.shape[0]}x{matrix.shape[1]}")
    return WalkOperator(
        name=name,
        domain_level=domain,
        codomain_level=codomain,
        rows=x.levels[codomain],
        cols=x.levels[domain],
        matrix=matrix,
        codomain_measure=x.measure(codomain),
        domain_measure=x.measure(domain),
    )


def up_operator(x: SimplicialComplex, i: int) -> WalkOperator:
    """``U_i``: average a level-i function over the sub-faces of a level-(i+1) face."""
    if not 0 <= i < x.k:
        raise LevelError(f"U_i needs 0 <= i < {x.k}, got {i}", levels=(i,), k=x.k)
    matrix = incidence(x, i, i + 1).T / (i + 1)
    return _operator(x, f"U_{i}", i, i + 1, matrix)


def down_operator(x: SimplicialComplex, level: int) -> WalkOperator:
    """``D_level``: from s ∈ X(level-1) to t ⊃ s with probability ∝ Π_level(t)."""
    if not 1 <= level <= x.k:
        raise LevelError(
            f"D_j needs 1 <= j <= {x.k}, got {level}", levels=(level,), k=x.k
        )
    matrix = (
        incidence(x, level - 1, level)
        * x.measure(level)[None, :]
        / (level * x.measure(level - 1))[:, None]
    )
    return _operator(x, f"D_{level}", level, level - 1, matrix)


def compose_down(x: SimplicialComplex, m: int, l: int) -> WalkOperator:
    """``D_{m,l} = D_{m+1} ··· D_l``: X(l) functions to X(m); identity when m = l.

    Built from the closed form ``Π_l(t) / (C(l, m) Π_m(s))`` for s ⊆ t.
    """
    _check_ordered(x, m, l)
    matrix = (
        incidence(x, m, l)
        * x.measure(l)[None, :]
        / (comb(l, m) * x.measure(m))[:, None]
    )
    return _operator(x, f"D_{{{m},{l}}}", l, m, matrix)


def compose_up(x: SimplicialComplex, l: int, m: int) -> WalkOperator:
    """``U_{l,m} = U_{l-1} ··· U_m``: X(m) functions to X(l); identity when m = l."""
    _check_ordered(x, m, l)
    matrix = incidence(x, m, l).T / comb(l, m)
    return _operator(x, f"U_{{{l},{m}}}", m, l, matrix)


def updown_walk(x: SimplicialComplex, m: int, l: int) -> WalkOperator:
    """``N²_{m,l} = D_{m,l} U_{l,m}``: up to X(l) and back down to X(m)."""
    walk = compose_down(x, m, l) @ compose_up(x, l, m)
    return WalkOperator(
        name=f"N2_{{{m},{l}}}",
        domain_level=m,
        codomain_level=m,
        rows=walk.rows,
        cols=walk.cols,
        matrix=walk.matrix,
        codomain_measure=walk.codomain_measure,
        domain_measure=walk.domain_measure,
    )


def swap_operator(x: SimplicialComplex, m: int, l: int) -> WalkOperator:
    """``S_{m,l}``: from s ∈ X(m) to a disjoint t ∈ X(l) with s ⊔ t ∈ X(m+l).

    The transition probability is ``Π_{m+l}(s ⊔ t) / (C(m+l, m) Π_m(s))``.
    """
    _check_swap(x, m, l)
    rows, cols = x.index(m), x.index(l)
    union = x.measures[m + l]
    matrix = np.zeros((len(rows), len(cols)))
    scale = comb(m + l, m)
    for face, p in zip(union.faces, union.probabilities):
        for s in combinations(face, m):
            t = tuple(v for v in face if v not in s)
            matrix[rows[s], cols[t]] += p / scale
    matrix /= x.measure(m)[:, None]
    return _operator(x, f"S_{{{m},{l}}}", l, m, matrix)


def bipartite_walk_matrix(x: SimplicialComplex, m: int, l: int) -> np.ndarray:
    """``N_{m,l}`` on X(m) ⊔ X(l): ``[[0, D_{m,l}], [U_{l,m}, 0]]``."""
    down, up = compose_down(x, m, l), compose_up(x, l, m)
    return _block(down.matrix, up.matrix)


def bipartite_swap_walk(x: SimplicialComplex, m: int, l: int) -> np.ndarray:
    """``[[0, S_{m,l}], [S_{l,m}, 0]]`` on X(m) ⊔ X(l)."""
    return _block(swap_operator(x, m, l).matrix, swap_operator(x, l, m).matrix)


def _block(upper: np.ndarray, lower: np.ndarray) -> np.ndarray:
    a, b = upper.shape
    matrix = np.zeros((a + b, a + b))
    matrix[:a, a:] = upper
    matrix[a:, :a] = lower
    return matrix


# ---------------------------------------------------------------------------
# Walk graphs
# ---------------------------------------------------------------------------


def bipartite_walk_graph(x: SimplicialComplex, m: int, l: int) -> WeightedGraph:
    """``B_{m,l}``: s ∈ X(m) joined to t ⊇ s in X(l) with weight ``C(k,l) Π_l(t)``."""
    _check_ordered(x, m, l, lowest=1)
    block = comb(x.k, l) * incidence(x, m, l) * x.measure(l)[None, :]
    return bipartite_graph(f"B_{{{m},{l}}}", x.levels[m], x.levels[l], block)


def two_step_graph(x: SimplicialComplex, m: int, l: int) -> WeightedGraph:
    """``B²_{m,l}``: faces of X(m) joined through every common superset in X(l).

    ``w(s, s') = C(k,l) Σ_{t ⊇ s ∪ s'} Π_l(t)``; the diagonal holds the
    self-loops, which count once toward each degree.
    """
    _check_ordered(x, m, l, lowest=1)
    up = incidence(x, m, l)
    weights = comb(x.k, l) * (up * x.measure(l)[None, :]) @ up.T
    return WeightedGraph(
        name=f"B2_{{{m},{l}}}", vertices=x.levels[m], weights=(weights + weights.T) / 2
    )


def swap_graph(x: SimplicialComplex, m: int, l: int) -> WeightedGraph:
    """``G_{m,l}``: bipartite, s ∈ X(m) to t ∈ X(l) with weight ``Π_{m+l}(s⊔t)/C(m+l,m)``."""
    operator = swap_operator(x, m, l)
    block = operator.matrix * x.measure(m)[:, None]
    return bipartite_graph(f"G_{{{m},{l}}}", x.levels[m], x.levels[l], block)


def two_step_closed_form(
    x: SimplicialComplex, m: int, l: int
) -> tuple[np.ndarray, np.ndarray]:
    """Weights and degrees of ``B²_{m,l}`` from edge masses alone.

    ``w(s,s') = C(k-|u|, l-|u|) Σ_{e ⊇ u} Π_k(e)`` with ``u = s ∪ s'`` and
    ``deg(s) = C(l,m)² (C(k,l)/C(k,m)) Σ_{e ⊇ s} Π_k(e)``. Used as an
    independent cross-check of :func:`two_step_graph`.
    """
    _check_ordered(x, m, l, lowest=1)
    k = x.k
    top = x.measures[k]

    def edge_mass(u: set[int]) -> float:
        return float(
            sum(p for e, p in zip(top.faces, top.probabilities) if u.issubset(e))
        )

    faces = x.levels[m]
    weights = np.zeros((len(faces), len(faces)))
    for i, s in enumerate(faces):
        for j in range(i, len(faces)):
            u = set(s) | set(faces[j])
            if len(u) > l:
                continue
            weights[i, j] = weights[j, i] = comb(k - len(u), l - len(u)) * edge_mass(u)
    degrees = np.array(
        [comb(l, m) ** 2 * comb(k, l) / comb(k, m) * edge_mass(set(s)) for s in faces]
    )
    return weights, degrees

