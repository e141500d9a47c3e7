"""Spectral engine: singular values, walk spectra, threshold rank, link expansion.

All spectra are taken from symmetric matrices similar to the walk in question
(``P^{1/2} M P^{-1/2}`` for operators, ``D^{-1/2} A D^{-1/2}`` for graphs), so
a dense symmetric eigensolver is enough and values come back real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
from scipy import linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _csgraph_components

from hsx._log import get_logger
from hsx._pool import parallel_map
from hsx.complex import SimplicialComplex, faces_up_to, link, skeleton
from hsx.errors import DimensionError, IsolatedVertexError, ParameterError, SpectralError
from hsx.graph import WeightedGraph
from hsx.types import Face
from hsx.walks import WalkOperator

logger = get_logger(__name__)

#: Default tolerance for "equals 1" and threshold comparisons.
EIGEN_TOL = 1e-9


class SpectrumKind(StrEnum):
    eigen = "eigen"
    singular = "singular"


@dataclass(frozen=True, eq=False)
class SpectralReport:
    """Descending spectrum of one walk or graph."""

    object_id: str
    kind: SpectrumKind
    values: np.ndarray
    tolerance: float = EIGEN_TOL

    def __len__(self) -> int:
        return len(self.values)

    def value(self, i: int) -> float:
        """The i-th value, counting from 1 as in λ_1 ≥ λ_2 ≥ …"""
        if not 1 <= i <= len(self.values):
            raise ParameterError(
                f"{self.object_id} has {len(self.values)} values, asked for #{i}",
                index=i,
            )
        return float(self.values[i - 1])

    def count_at_least(self, tau: float, *, tol: float | None = None) -> int:
        """Values at least ``tau`` less the report tolerance, or ``tol`` when given."""
        slack = self.tolerance if tol is None else tol
        return int(np.count_nonzero(self.values >= tau - slack))

    def multiplicity_of_one(self) -> int:
        return int(np.count_nonzero(np.abs(self.values - 1.0) <= self.tolerance))


def _descending(values: np.ndarray) -> np.ndarray:
    return np.sort(np.asarray(values, dtype=float))[::-1]


def singular_values(op: WalkOperator, *, tol: float = EIGEN_TOL) -> SpectralReport:
    """σ_i(op) under the Π-weighted inner products, clamped at zero."""
    values = np.clip(linalg.svdvals(op.symmetrized()), 0.0, None)
    return SpectralReport(op.name, SpectrumKind.singular, _descending(values), tol)


def doubled_eigenvalues(op: WalkOperator, *, tol: float = EIGEN_TOL) -> SpectralReport:
    """Eigenvalues of the symmetric doubling ``[[0, A], [A†, 0]]``.

    The spectrum is ``±σ_i(A)`` padded with zeros, so its top ``rank(A)``
    values reproduce :func:`singular_values`.
    """
    sym = op.symmetrized()
    a, b = sym.shape
    block = np.zeros((a + b, a + b))
    block[:a, a:] = sym
    block[a:, :a] = sym.T
    values = linalg.eigvalsh(block)
    return SpectralReport(f"double({op.name})", SpectrumKind.eigen, _descending(values), tol)


def walk_eigenvalues(op: WalkOperator, *, tol: float = EIGEN_TOL) -> SpectralReport:
    """Eigenvalues of a self-adjoint square walk such as ``N²_{m,l}`` or ``S_{m,m}``."""
    if not op.is_square:
        raise SpectralError(
            f"{op.name} maps X({op.domain_level}) to X({op.codomain_level}); "
            "eigenvalues need a square walk",
            operator=op.name,
        )
    sym = op.symmetrized()
    values = linalg.eigvalsh((sym + sym.T) / 2.0)
    return SpectralReport(op.name, SpectrumKind.eigen, _descending(values), tol)


def eigenvalues(g: WeightedGraph, *, tol: float = EIGEN_TOL) -> SpectralReport:
    """Spectrum of the random-walk matrix of ``g``.

    Raises:
        IsolatedVertexError: ``g`` has a vertex of zero degree.
    """
    values = linalg.eigvalsh(g.symmetric_adjacency)
    return SpectralReport(g.name, SpectrumKind.eigen, _descending(values), tol)


@dataclass(frozen=True, eq=False)
class Eigenpair:
    value: float
    vector: np.ndarray
    residual: float
    #: Gap to the third eigenvalue; zero means λ_2 is repeated.
    gap: float


def second_eigenvector(g: WeightedGraph) -> Eigenpair:
    """Second eigenpair of ``D^{-1/2} A D^{-1/2}`` (symmetric normalisation)."""
    if g.order < 2:
        raise SpectralError(f"Graph {g.name!r} has fewer than two vertices", graph=g.name)
    sym = g.symmetric_adjacency
    values, vectors = linalg.eigh(sym)
    order = np.argsort(values)[::-1]
    value = float(values[order[1]])
    # Keep x orthogonal to the top eigenvector √deg; when λ_1 = λ_2 the
    # solver may hand back √deg itself as the "second" vector.
    top = np.sqrt(g.degrees)
    top /= np.linalg.norm(top)
    vector = vectors[:, order[1]] - (top @ vectors[:, order[1]]) * top
    if np.linalg.norm(vector) < 1e-6:
        vector = vectors[:, order[0]] - (top @ vectors[:, order[0]]) * top
    vector /= np.linalg.norm(vector)
    residual = float(np.linalg.norm(sym @ vector - value * vector))
    gap = float(value - values[order[2]]) if g.order > 2 else math.inf
    return Eigenpair(value=value, vector=vector, residual=residual, gap=gap)


def check_tau(tau: float) -> None:
    if not -1.0 <= tau <= 1.0:
        raise ParameterError(f"Threshold tau must lie in [-1, 1], got {tau}", tau=tau)


def threshold_rank(
    g: WeightedGraph | WalkOperator | SpectralReport,
    tau: float,
    *,
    tol: float = EIGEN_TOL,
) -> int:
    """``rank_{≥τ}``: number of walk eigenvalues at least ``tau - tol``."""
    check_tau(tau)
    if isinstance(g, SpectralReport):
        report = g
    elif isinstance(g, WalkOperator):
        report = walk_eigenvalues(g, tol=tol)
    else:
        report = eigenvalues(g, tol=tol)
    return report.count_at_least(tau, tol=tol)


def connected_components(g: WeightedGraph) -> tuple[int, np.ndarray]:
    """Component count and per-vertex labels; weights ≤ 0 are not edges."""
    count, labels = _csgraph_components(
        csr_matrix(g.weights > 0.0), directed=False, return_labels=True
    )
    return int(count), labels


@dataclass(frozen=True)
class CheegerBounds:
    lambda_2: float
    lower: float
    upper: float


def cheeger_bounds(g: WeightedGraph) -> CheegerBounds:
    """``(1 - λ_2)/2 ≤ φ(g) ≤ √(2(1 - λ_2))``."""
    lam = eigenvalues(g).value(2)
    gap = max(0.0, 1.0 - lam)
    return CheegerBounds(lambda_2=lam, lower=gap / 2.0, upper=math.sqrt(2.0 * gap))


# ---------------------------------------------------------------------------
# Link expansion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinkSpectrum:
    face: Face
    #: |λ_2| of the skeleton's walk matrix.
    sigma_2: float
    #: max_{i ≥ 2} |λ_i|, the two-sided value.
    two_sided: float
    vertices: int


@dataclass(frozen=True)
class LinkExpansionReport:
    """γ = max over X(≤k-2) of the link skeleton's σ_2, with its witness."""

    gamma: float
    witness: Face
    two_sided_gamma: float
    links: tuple[LinkSpectrum, ...] = field(repr=False)

    @property
    def link_expansion(self) -> float:
        return 1.0 - self.gamma


def link_sigma(x: SimplicialComplex, s: Face) -> LinkSpectrum:
    """σ_2 of ``G(X_s)``; an isolated skeleton vertex is reported with its face."""
    graph = skeleton(link(x, s))
    try:
        values = eigenvalues(graph).values
    except IsolatedVertexError as exc:
        raise IsolatedVertexError(exc.graph, exc.vertex, face=s) from exc
    sigma = abs(float(values[1])) if len(values) > 1 else 0.0
    two_sided = float(np.max(np.abs(values[1:]))) if len(values) > 1 else 0.0
    return LinkSpectrum(face=s, sigma_2=sigma, two_sided=two_sided, vertices=graph.order)


def hdx_gamma(x: SimplicialComplex) -> LinkExpansionReport:
    """Worst link over every s ∈ X(≤ k-2), the empty face included.

    Links are computed on a thread pool; faces are then taken level by level
    in lexicographic order and the first face attaining the maximum is the
    witness.
    """
    if x.k < 2:
        raise DimensionError(
            f"Link expansion needs dimension >= 2, got {x.k}", dimension=x.k
        )
    faces = faces_up_to(x, x.k - 2)
    links = tuple(parallel_map(lambda s: link_sigma(x, s), faces))
    worst = links[0]
    for entry in links[1:]:
        if entry.sigma_2 > worst.sigma_2:
            worst = entry
    logger.info(
        f"Link expansion over {len(links)} faces: gamma={worst.sigma_2:.6g} "
        f"at {list(worst.face)}"
    )
    return LinkExpansionReport(
        gamma=worst.sigma_2,
        witness=worst.face,
        two_sided_gamma=max(entry.two_sided for entry in links),
        links=links,
    )
