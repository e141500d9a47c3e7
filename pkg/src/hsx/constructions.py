"""The two counterexample families and the verifiers for their claims.

``sunflower_hypergraph`` has r edges meeting pairwise in vertex 0: it expands
(φ_H ≥ 1/k) yet every swap graph and up-down walk has r unit eigenvalues.
``cycle_link_hypergraph`` adds a cycle, lifted by a fixed tail, to the
complete k-uniform hypergraph: it expands but the tail's link is a cycle.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from itertools import combinations
from math import comb

import numpy as np

from hsx._log import get_logger
from hsx._pool import parallel_map
from hsx.complex import DEFAULT_FACE_BUDGET, induce_complex, link, skeleton
from hsx.errors import ParameterError
from hsx.partition import (
    BOUND_TOL,
    DEFAULT_ORACLE_CAP,
    MEASURE_TOL,
    brute_force_min_conductance,
)
from hsx.spectra import (
    EIGEN_TOL,
    connected_components,
    eigenvalues,
    hdx_gamma,
    singular_values,
    walk_eigenvalues,
)
from hsx.splitting import DEFAULT_SPLIT_BUDGET, splittability
from hsx.types import Face, Hypergraph
from hsx.walks import bipartite_walk_graph, swap_graph, swap_operator, updown_walk

logger = get_logger(__name__)

#: Thresholds at which sunflowers are checked to be non-splittable.
SPLIT_TAUS = (-1.0, -0.5, 0.0, 0.5, 1.0)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def sunflower_hypergraph(r: int, k: int) -> Hypergraph:
    """``e_i = {0} ∪ {(i-1)(k-1)+1, …, i(k-1)}`` for i = 1..r, uniform weights."""
    if r < 1:
        raise ParameterError(f"Sunflower needs r >= 1 petals, got {r}", r=r)
    if k < 3:
        raise ParameterError(f"Sunflower needs k >= 3, got {k}", k=k)
    petal = k - 1
    edges = [
        (0, *range((i - 1) * petal + 1, i * petal + 1)) for i in range(1, r + 1)
    ]
    return Hypergraph.uniform(k, r * petal + 1, edges)


def tail_face(n: int, k: int) -> Face:
    """The k-2 extra vertices appended to every cycle edge."""
    return tuple(range(n, n + k - 2))


def cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def cycle_link_hypergraph(
    n: int, k: int, base_edges: Iterable[Sequence[int]] | None = None
) -> Hypergraph:
    """All k-subsets of ``0..n-1`` plus each base-graph edge joined with the tail.

    ``base_edges`` defaults to the n-cycle; any simple graph on ``0..n-1``
    may be passed instead and becomes the skeleton of the tail's link.
    """
    if k < 3:
        raise ParameterError(f"Cycle-link needs k >= 3, got {k}", k=k)
    if n < 3 * k:
        raise ParameterError(f"Cycle-link needs n >= 3k = {3 * k}, got {n}", n=n, k=k)
    base = cycle_edges(n) if base_edges is None else [tuple(e) for e in base_edges]
    seen: set[tuple[int, int]] = set()
    for index, pair in enumerate(base):
        if len(pair) != 2 or pair[0] == pair[1] or not all(0 <= v < n for v in pair):
            raise ParameterError(
                f"Base edge {index} must join two distinct vertices of 0..{n - 1}",
                index=index,
            )
        key = (min(pair), max(pair))
        if key in seen:
            raise ParameterError(f"Base edge {index} repeats {list(key)}", index=index)
        seen.add(key)
    if not base:
        raise ParameterError("Base graph has no edges")

    tail = tail_face(n, k)
    edges = [*combinations(range(n), k), *((*sorted(pair), *tail) for pair in base)]
    return Hypergraph.uniform(k, n + k - 2, edges)


# ---------------------------------------------------------------------------
# Claims
# ---------------------------------------------------------------------------


class Relation(StrEnum):
    eq = "=="
    ge = ">="
    le = "<="


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    measured: float
    bound: float
    relation: Relation
    tolerance: float

    @property
    def passed(self) -> bool:
        if self.relation is Relation.eq:
            return abs(self.measured - self.bound) <= self.tolerance
        if self.relation is Relation.ge:
            return self.measured >= self.bound - self.tolerance
        return self.measured <= self.bound + self.tolerance


@dataclass(frozen=True)
class ClaimReport:
    construction: str
    parameters: dict[str, int]
    claims: tuple[Claim, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(claim.passed for claim in self.claims)

    @property
    def failures(self) -> tuple[Claim, ...]:
        return tuple(claim for claim in self.claims if not claim.passed)


def _finish(
    construction: str, parameters: dict[str, int], claims: list[Claim], notes: list[str]
) -> ClaimReport:
    report = ClaimReport(
        construction=construction,
        parameters=parameters,
        claims=tuple(sorted(claims, key=lambda c: c.claim_id)),
        notes=tuple(notes),
    )
    for claim in report.failures:
        logger.warning(
            f"{construction} claim {claim.claim_id} failed: "
            f"{claim.measured!r} {claim.relation} {claim.bound!r}"
        )
    logger.info(
        f"{construction} {parameters}: {len(report.claims) - len(report.failures)}"
        f"/{len(report.claims)} claims hold"
    )
    return report


def admissible_swap_pairs(k: int) -> list[tuple[int, int]]:
    """Pairs m ≤ l with m + l ≤ k and either both ≥ 2 or m + l = k."""
    return [
        (m, l)
        for m in range(1, k)
        for l in range(m, k - m + 1)
        if (m >= 2 and l >= 2) or m + l == k
    ]


def verify_sunflower_claims(
    r: int,
    k: int,
    *,
    face_budget: int = DEFAULT_FACE_BUDGET,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    split_budget: int = DEFAULT_SPLIT_BUDGET,
    tol_eig: float = EIGEN_TOL,
    tol_bound: float = BOUND_TOL,
    tol_measure: float = MEASURE_TOL,
    taus: Sequence[float] = SPLIT_TAUS,
) -> ClaimReport:
    """Expansion, unit eigenvalues and non-splittability of ``sunflower(r, k)``.

    Claims for the level pairs and thresholds are computed on a thread pool;
    the report lists them sorted by claim id.
    """
    h = sunflower_hypergraph(r, k)
    x = induce_complex(h, face_budget=face_budget)

    def swap_claims(pair: tuple[int, int]) -> list[Claim]:
        m, l = pair
        graph = swap_graph(x, m, l)
        count, _ = connected_components(graph)
        return [
            Claim(
                f"swap_lambda_r[{m},{l}]",
                f"lambda_{r}(G_{{{m},{l}}}) = 1",
                eigenvalues(graph, tol=tol_eig).value(r),
                1.0,
                Relation.eq,
                tol_eig,
            ),
            Claim(
                f"swap_sigma_r[{m},{l}]",
                f"sigma_{r}(S_{{{m},{l}}}) = 1",
                singular_values(swap_operator(x, m, l), tol=tol_eig).value(r),
                1.0,
                Relation.eq,
                tol_eig,
            ),
            Claim(
                f"swap_components[{m},{l}]",
                f"G_{{{m},{l}}} has at least {r} components",
                count,
                r,
                Relation.ge,
                0.0,
            ),
        ]

    def updown_claim(pair: tuple[int, int]) -> Claim:
        m, l = pair
        return Claim(
            f"updown_lambda_r[{m},{l}]",
            f"lambda_{r}(N2_{{{m},{l}}}) = 1",
            walk_eigenvalues(updown_walk(x, m, l), tol=tol_eig).value(r),
            1.0,
            Relation.eq,
            tol_eig,
        )

    def split_claim(tau: float) -> Claim:
        verdict = splittability(x, tau, r, budget=split_budget, tol=tol_eig)
        return Claim(
            f"not_splittable[tau={tau:+.2f}]",
            f"every splitting tree has a swap graph with rank > {r}",
            verdict.min_max_rank,
            r + 1,
            Relation.ge,
            0.0,
        )

    claims: list[Claim] = [
        claim
        for group in parallel_map(swap_claims, admissible_swap_pairs(k))
        for claim in group
    ]
    updown_pairs = [(m, l) for m in range(2, k + 1) for l in range(m + 1, k + 1)]
    claims.extend(parallel_map(updown_claim, updown_pairs))

    count, _ = connected_components(bipartite_walk_graph(x, 2, k))
    claims.append(
        Claim(
            f"bipartite_components[2,{k}]",
            f"B_{{2,{k}}} has exactly {r} components",
            count,
            r,
            Relation.eq,
            0.0,
        )
    )

    oracle = brute_force_min_conductance(h, cap=oracle_cap, tol=tol_measure)
    claims.append(
        Claim(
            "oracle_min_conductance",
            f"min phi_H >= 1/{k}",
            oracle.conductance,
            1.0 / k,
            Relation.ge,
            tol_bound,
        )
    )
    claims.extend(parallel_map(split_claim, taus))

    notes = [
        "Edges are the sunflower e_i = {0} u {(i-1)(k-1)+1, ..., i(k-1)}.",
        f"G_{{1,{k - 1}}} has {1 + r * (k - 1)} components, more than the r "
        "required for lambda_r = 1.",
    ]
    return _finish("sunflower", {"r": r, "k": k}, claims, notes)


def verify_cycle_link_claims(
    n: int,
    k: int,
    *,
    face_budget: int = DEFAULT_FACE_BUDGET,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    tol_eig: float = EIGEN_TOL,
    tol_bound: float = BOUND_TOL,
    tol_measure: float = MEASURE_TOL,
) -> ClaimReport:
    """Link of the tail is the n-cycle, link expansion is poor, φ_H is not."""
    h = cycle_link_hypergraph(n, k)
    x = induce_complex(h, face_budget=face_budget)
    tail = tail_face(n, k)
    target = math.cos(2.0 * math.pi / n)
    claims: list[Claim] = []

    ring = skeleton(link(x, tail))
    values = eigenvalues(ring, tol=tol_eig).values
    claims.append(
        Claim(
            "link_sigma_2",
            f"sigma_2 of the tail link skeleton = cos(2pi/{n})",
            abs(float(values[1])),
            target,
            Relation.eq,
            tol_eig,
        )
    )
    claims.append(
        Claim(
            "link_edges",
            f"tail link skeleton has {n} edges",
            int(np.count_nonzero(np.triu(ring.weights) > 0.0)),
            n,
            Relation.eq,
            0.0,
        )
    )

    gamma = hdx_gamma(x)
    claims.append(
        Claim(
            "hdx_gamma",
            f"gamma >= cos(2pi/{n})",
            gamma.gamma,
            target,
            Relation.ge,
            tol_eig,
        )
    )

    degrees = h.combinatorial_degrees
    base = comb(n - 1, k - 1) + 2
    for name, part, expected in (
        ("tail_degree", degrees[n:], n),
        ("base_degree", degrees[:n], base),
    ):
        for which, measured in (("min", part.min()), ("max", part.max())):
            claims.append(
                Claim(
                    f"{name}_{which}",
                    f"{name.split('_')[0]} vertices have degree {expected}",
                    int(measured),
                    expected,
                    Relation.eq,
                    0.0,
                )
            )

    oracle = brute_force_min_conductance(h, cap=oracle_cap, tol=tol_measure)
    claims.append(
        Claim(
            "oracle_min_conductance",
            f"min phi_H >= 1/(3k)^k = 1/{(3 * k) ** k}",
            oracle.conductance,
            1.0 / (3 * k) ** k,
            Relation.ge,
            tol_bound,
        )
    )

    notes = [
        f"Tail face {list(tail)}; link witness {list(gamma.witness)} "
        f"with two-sided gamma {gamma.two_sided_gamma!r}.",
    ]
    return _finish("cycle-link", {"n": n, "k": k}, claims, notes)
