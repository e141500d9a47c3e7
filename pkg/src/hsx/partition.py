"""Conductance, the exhaustive oracle, the Fiedler sweep and the sparse-cut certificate.

Hypergraph conductance is ``φ_H(S) = Π_k(∂S) / vol_H(S)`` where an edge is in
the boundary when it meets both S and its complement and
``vol_H(S) = Σ_{i∈S} Σ_{e∋i} Π_k(e)``; the whole vertex set has volume k.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from math import comb

import numpy as np

from hsx._log import get_logger
from hsx._pool import parallel_map
from hsx.complex import DEFAULT_FACE_BUDGET, SimplicialComplex, induce_complex
from hsx.errors import BudgetError, CutSetError, LevelError
from hsx.graph import WeightedGraph
from hsx.spectra import SpectralReport, second_eigenvector, singular_values, walk_eigenvalues
from hsx.types import Hypergraph
from hsx.walks import compose_down, two_step_graph, updown_walk

logger = get_logger(__name__)

#: Tolerance on the half-volume constraint and on oracle ties.
MEASURE_TOL = 1e-12
#: Slack allowed when checking an inequality between computed quantities.
BOUND_TOL = 1e-9
#: Largest vertex count the oracle scans by default.
DEFAULT_ORACLE_CAP = 24

_CHUNK = 1 << 15


@dataclass(frozen=True)
class CutValue:
    """Conductance of one vertex set, whichever side of half-volume it is on."""

    subset: tuple[int, ...]
    boundary: float
    volume: float
    conductance: float
    within_half: bool


def _hypergraph_mask(h: Hypergraph, subset: Iterable[int]) -> np.ndarray:
    chosen = np.zeros(h.n, dtype=bool)
    for vertex in subset:
        if not isinstance(vertex, (int, np.integer)) or not 0 <= vertex < h.n:
            raise CutSetError(
                f"Vertex {vertex!r} is outside 0..{h.n - 1}", vertex=vertex
            )
        chosen[vertex] = True
    if not chosen.any() or chosen.all():
        raise CutSetError(
            "Cut set must be a nonempty proper subset of the vertices",
            size=int(chosen.sum()),
        )
    return chosen


def hypergraph_boundary(h: Hypergraph, chosen: np.ndarray) -> float:
    """``Π_k(∂S)``: weight of edges with some but not all vertices in S."""
    inside = h.incidence[:, chosen].sum(axis=1)
    crossing = (inside > 0) & (inside < h.k)
    return float(h.weight_array[crossing].sum())


def conductance_hypergraph(
    h: Hypergraph, subset: Iterable[int], *, tol: float = MEASURE_TOL
) -> CutValue:
    chosen = _hypergraph_mask(h, subset)
    boundary = hypergraph_boundary(h, chosen)
    volume = float(h.degrees[chosen].sum())
    return CutValue(
        subset=tuple(int(v) for v in np.flatnonzero(chosen)),
        boundary=boundary,
        volume=volume,
        conductance=boundary / volume,
        within_half=volume <= h.total_volume / 2 + tol,
    )


def conductance_graph(
    g: WeightedGraph, subset: Iterable[int], *, tol: float = MEASURE_TOL
) -> CutValue:
    """Conductance of the vertex *positions* in ``subset`` of ``g``."""
    chosen = g.mask(subset)
    value = g.conductance(chosen)
    volume = g.volume(chosen)
    return CutValue(
        subset=tuple(int(v) for v in np.flatnonzero(chosen)),
        boundary=g.boundary(chosen),
        volume=volume,
        conductance=value,
        within_half=volume <= g.total_volume / 2 + tol,
    )


# ---------------------------------------------------------------------------
# Exhaustive oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    subset: tuple[int, ...]
    conductance: float
    boundary: float
    volume: float
    #: Number of subsets that met the half-volume constraint.
    feasible: int


@dataclass(frozen=True)
class _ChunkScan:
    feasible: int
    low: float
    #: (φ, mask) for every mask of the chunk within tolerance of ``low``.
    near: tuple[tuple[float, int], ...]


def brute_force_min_conductance(
    h: Hypergraph, *, cap: int = DEFAULT_ORACLE_CAP, tol: float = MEASURE_TOL
) -> OracleResult:
    """Exact ``min φ_H(S)`` over all S with ``vol_H(S) ≤ vol_H(V)/2``.

    Subsets are scanned as bitmasks in chunks, on a thread pool when there is
    more than one; edge hits per subset come from one matrix product per
    chunk. ``tol`` is the slack on the half-volume constraint and on ties;
    tied subsets go to the lexicographically smallest sorted vertex tuple.

    Raises:
        BudgetError: ``h.n`` exceeds ``cap``.
    """
    n = h.n
    if n > cap:
        raise BudgetError(
            f"Oracle needs 2^{n} subsets; vertex cap is {cap}",
            budget=cap,
            required=n,
        )
    logger.info(f"Oracle scanning {2**n - 2} subsets of {n} vertices")
    incidence_t = h.incidence.T.astype(float)
    weights = h.weight_array
    degrees = h.degrees
    half = h.total_volume / 2 + tol
    shifts = np.arange(n, dtype=np.int64)

    def scan(start: int) -> _ChunkScan:
        masks = np.arange(start, min(start + _CHUNK, 2**n - 1), dtype=np.int64)
        bits = ((masks[:, None] >> shifts) & 1).astype(float)
        volume = bits @ degrees
        keep = volume <= half
        if not keep.any():
            return _ChunkScan(0, math.inf, ())
        masks, bits, volume = masks[keep], bits[keep], volume[keep]
        hits = bits @ incidence_t
        crossing = (hits > 0.5) & (hits < h.k - 0.5)
        phi = (crossing @ weights) / volume
        low = float(phi.min())
        near = phi <= low + tol
        return _ChunkScan(
            int(masks.size), low, tuple(zip(phi[near].tolist(), masks[near].tolist()))
        )

    chunks = parallel_map(scan, range(1, 2**n - 1, _CHUNK))
    best = min(chunk.low for chunk in chunks)
    feasible = sum(chunk.feasible for chunk in chunks)

    def members(mask: int) -> tuple[int, ...]:
        return tuple(v for v in range(n) if mask >> v & 1)

    winner = min(
        members(mask)
        for chunk in chunks
        for phi, mask in chunk.near
        if phi <= best + tol
    )
    cut = conductance_hypergraph(h, winner, tol=tol)
    logger.info(
        f"Oracle minimum {cut.conductance:.6g} at {list(winner)} "
        f"({len(chunks)} chunks, {feasible} feasible)"
    )
    return OracleResult(
        subset=winner,
        conductance=cut.conductance,
        boundary=cut.boundary,
        volume=cut.volume,
        feasible=feasible,
    )


# ---------------------------------------------------------------------------
# Fiedler sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepResult:
    """Best prefix cut of the sorted second eigenvector, smaller side returned."""

    positions: tuple[int, ...]
    conductance: float
    lambda_2: float
    #: √(2(1 − λ_2)), the Cheeger upper bound the sweep must meet.
    cheeger_bound: float
    residual: float
    degenerate: bool


def fiedler_sweep(g: WeightedGraph, *, tol: float = BOUND_TOL) -> SweepResult:
    """Sweep cut of ``g`` along ``D^{-1/2} x`` with x the second eigenvector.

    Vertices are ordered by that vector, ties by position. Each prefix is
    scored with ``w(∂S) / min(vol S, vol V∖S)``, which covers both
    orientations at once.
    """
    if g.order < 2:
        raise CutSetError(
            f"Graph {g.name!r} needs at least two vertices to cut", vertices=g.order
        )
    pair = second_eigenvector(g)
    degrees = g.degrees
    y = pair.vector / np.sqrt(degrees)
    order = np.lexsort((np.arange(g.order), y))

    permuted = g.weights[np.ix_(order, order)]
    into_prefix = np.tril(permuted, -1).sum(axis=1)
    step = degrees[order] - np.diag(permuted) - 2.0 * into_prefix
    cut = np.cumsum(step)[:-1]
    volume = np.cumsum(degrees[order])[:-1]
    total = g.total_volume
    denominator = np.minimum(volume, total - volume)
    phi = np.maximum(cut, 0.0) / denominator
    best = int(np.argmin(phi))

    prefix = order[: best + 1]
    if volume[best] <= total / 2 + MEASURE_TOL:
        positions = np.sort(prefix)
    else:
        positions = np.sort(order[best + 1 :])
    chosen = g.mask(positions.tolist())
    conductance = g.conductance(chosen)

    lam = min(pair.value, 1.0)
    degenerate = pair.gap <= tol
    if degenerate:
        logger.warning(
            f"Second eigenvalue of {g.name} is repeated (gap {pair.gap:.3g}); "
            "sweep uses the solver's eigenvector"
        )
    logger.debug(
        f"Sweep on {g.name}: {g.order} vertices, lambda_2={lam:.6g}, phi={conductance:.6g}"
    )
    return SweepResult(
        positions=tuple(int(p) for p in positions),
        conductance=conductance,
        lambda_2=lam,
        cheeger_bound=math.sqrt(2.0 * max(0.0, 1.0 - lam)),
        residual=pair.residual,
        degenerate=degenerate,
    )


# ---------------------------------------------------------------------------
# Bounds and the sparse-cut certificate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    """``lhs ≤ rhs`` with its slack ``rhs - lhs``."""

    name: str
    lhs: float
    rhs: float
    tolerance: float = BOUND_TOL

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return self.slack >= -self.tolerance


def _second(report: SpectralReport) -> float:
    return report.value(2) if len(report) >= 2 else 0.0


def _check_cut_level(h: Hypergraph, l: int) -> None:
    if not 2 <= l <= h.k:
        raise LevelError(f"Level {l} must lie in 2..{h.k}", levels=(l,), k=h.k)


@dataclass(frozen=True, eq=False)
class ExpansionContext:
    """Complex and the graphs B²_{1,2}, B²_{1,l} shared by many bound checks."""

    h: Hypergraph
    level: int
    complex: SimplicialComplex
    b2_pair: WeightedGraph
    b2_level: WeightedGraph

    @classmethod
    def build(
        cls, h: Hypergraph, l: int, *, face_budget: int = DEFAULT_FACE_BUDGET
    ) -> ExpansionContext:
        _check_cut_level(h, l)
        x = induce_complex(h, face_budget=face_budget)
        pair = two_step_graph(x, 1, 2)
        return cls(
            h=h,
            level=l,
            complex=x,
            b2_pair=pair,
            b2_level=pair if l == 2 else two_step_graph(x, 1, l),
        )


@dataclass(frozen=True)
class BoundReport:
    subset: tuple[int, ...]
    level: int
    checks: tuple[BoundCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def min_slack(self) -> float:
        return min(check.slack for check in self.checks)


def verify_expansion_bounds(
    h: Hypergraph,
    subset: Iterable[int],
    l: int,
    *,
    context: ExpansionContext | None = None,
    tol: float = BOUND_TOL,
) -> BoundReport:
    """Evaluate the boundary and expansion inequalities linking H to B²_{1,2}, B²_{1,l}.

    - ``(k-1) Π_k(∂S) ≤ w(∂_{B²_{1,2}} S)``
    - ``w(∂_{B²_{1,l}} S) ≤ C(k,l) C(l,2) Π_k(∂S)``
    - ``φ_H(S) ≤ 2 φ_{B²_{1,2}}(S)``
    - ``(2/k) φ_{B²_{1,l}}(S) ≤ φ_H(S)``
    - ``vol_{B²_{1,l}}(S) = C(k,l) (l²/k) vol_H(S)``, checked both ways
    """
    if context is None:
        context = ExpansionContext.build(h, l)
    elif context.level != l or context.h != h:
        raise LevelError(
            f"Context was built for level {context.level}, asked for {l}",
            levels=(context.level, l),
            k=h.k,
        )
    k = h.k
    cut = conductance_hypergraph(h, subset)
    chosen = np.zeros(h.n, dtype=bool)
    chosen[list(cut.subset)] = True
    # X(1) lists every vertex in order, so positions equal vertex ids.
    pair_graph, level_graph = context.b2_pair, context.b2_level
    pair_boundary = pair_graph.boundary(chosen)
    level_boundary = level_graph.boundary(chosen)
    pair_phi = pair_graph.conductance(chosen)
    level_phi = level_graph.conductance(chosen)
    level_volume = level_graph.volume(chosen)
    expected_volume = comb(k, l) * l * l / k * cut.volume

    checks = (
        BoundCheck("boundary_lower", (k - 1) * cut.boundary, pair_boundary, tol),
        BoundCheck(
            "boundary_upper", level_boundary, comb(k, l) * comb(l, 2) * cut.boundary, tol
        ),
        BoundCheck("expansion_upper", cut.conductance, 2.0 * pair_phi, tol),
        BoundCheck("expansion_lower", 2.0 / k * level_phi, cut.conductance, tol),
        BoundCheck("volume_identity", level_volume, expected_volume, tol),
        BoundCheck("volume_identity_reverse", expected_volume, level_volume, tol),
    )
    return BoundReport(subset=cut.subset, level=l, checks=checks)


@dataclass(frozen=True)
class CutCertificate:
    """Output of the spectral sparse cut with every quantity it is judged by."""

    subset: tuple[int, ...]
    level: int
    phi_h: float
    phi_b2: float
    within_half: bool
    #: 1 − σ_2(D_{1,2}).
    epsilon: float
    #: 1 − σ_2(D_{1,l}); never smaller than ``epsilon``.
    epsilon_level: float
    lambda_2_updown: float
    #: (1 − λ_2(N²_{1,l})) / k, a lower bound on every set's φ_H.
    lower_bound: float
    #: ε / k.
    epsilon_lower: float
    #: 4√ε.
    upper_bound: float
    residual: float
    degenerate: bool
    oracle: OracleResult | None
    checks: tuple[BoundCheck, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def hypergraph_sparse_cut(
    h: Hypergraph,
    l: int = 2,
    *,
    face_budget: int = DEFAULT_FACE_BUDGET,
    oracle_cap: int | None = None,
    tol: float = BOUND_TOL,
    measure_tol: float = MEASURE_TOL,
) -> CutCertificate:
    """Sweep B²_{1,2} and certify ``φ_H(S) ≤ 2 φ_{B²_{1,2}}(S) ≤ 4√ε``.

    With ``oracle_cap`` set and ``h.n`` within it, the exact optimum is also
    computed and checked against both spectral lower bounds. ``measure_tol``
    is the slack on half-volume membership and on oracle ties.
    """
    context = ExpansionContext.build(h, l, face_budget=face_budget)
    x, k = context.complex, h.k

    epsilon = 1.0 - _second(singular_values(compose_down(x, 1, 2)))
    epsilon_level = 1.0 - _second(singular_values(compose_down(x, 1, l)))
    lam = _second(walk_eigenvalues(updown_walk(x, 1, l)))

    sweep = fiedler_sweep(context.b2_pair, tol=tol)
    subset = tuple(x.levels[1][p][0] for p in sweep.positions)
    cut = conductance_hypergraph(h, subset, tol=measure_tol)
    root = math.sqrt(max(epsilon, 0.0))

    checks = [
        BoundCheck("relate_expansion", cut.conductance, 2.0 * sweep.conductance, tol),
        # Squared so rounding near ε = 0 is not amplified by the root.
        BoundCheck(
            "cheeger_sweep", sweep.conductance**2, 2.0 * (1.0 - sweep.lambda_2), tol
        ),
        BoundCheck(
            "cheeger_epsilon",
            sweep.conductance**2,
            2.0 * (1.0 - (1.0 - epsilon) ** 2),
            tol,
        ),
        BoundCheck("sparse_cut_upper", cut.conductance, 4.0 * root, tol),
        BoundCheck("epsilon_chain", epsilon, epsilon_level, tol),
        BoundCheck("half_volume", cut.volume, h.total_volume / 2, measure_tol),
    ]

    oracle = None
    if oracle_cap is not None and h.n <= oracle_cap:
        oracle = brute_force_min_conductance(h, cap=oracle_cap, tol=measure_tol)
        checks.append(
            BoundCheck("oracle_epsilon_lower", epsilon / k, oracle.conductance, tol)
        )
        checks.append(
            BoundCheck("oracle_updown_lower", (1.0 - lam) / k, oracle.conductance, tol)
        )
        checks.append(BoundCheck("oracle_optimal", oracle.conductance, cut.conductance, tol))

    certificate = CutCertificate(
        subset=cut.subset,
        level=l,
        phi_h=cut.conductance,
        phi_b2=sweep.conductance,
        within_half=cut.within_half,
        epsilon=epsilon,
        epsilon_level=epsilon_level,
        lambda_2_updown=lam,
        lower_bound=(1.0 - lam) / k,
        epsilon_lower=epsilon / k,
        upper_bound=4.0 * root,
        residual=sweep.residual,
        degenerate=sweep.degenerate,
        oracle=oracle,
        checks=tuple(checks),
    )
    for check in certificate.checks:
        if not check.passed:
            logger.warning(
                f"Sparse-cut check {check.name} failed: {check.lhs:.12g} > {check.rhs:.12g}"
            )
    return certificate
