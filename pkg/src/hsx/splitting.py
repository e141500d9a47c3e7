"""Splitting trees and (τ, r)-splittability.

A k-splitting tree is an unordered binary tree whose root is labelled k,
whose leaves are labelled 1 and whose internal labels are the sums of their
children's. Each internal node with children (a, b) selects the swap graph
G_{a,b}; only that set of pairs matters, so trees are deduplicated by it.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cache

from hsx._log import get_logger
from hsx.complex import SimplicialComplex
from hsx.errors import BudgetError, DimensionError, ParameterError
from hsx.spectra import EIGEN_TOL, check_tau, threshold_rank
from hsx.walks import swap_graph

logger = get_logger(__name__)

#: Default cap on the number of trees enumerated.
DEFAULT_SPLIT_BUDGET = 10_000

Pair = tuple[int, int]


@dataclass(frozen=True)
class SplittingTree:
    label: int
    children: tuple[SplittingTree, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def nodes(self) -> Iterator[SplittingTree]:
        yield self
        for child in self.children:
            yield from child.nodes()

    @property
    def leaves(self) -> int:
        return sum(1 for node in self.nodes() if node.is_leaf)

    @property
    def pairs(self) -> frozenset[Pair]:
        """Child-label pairs ``(a, b)``, ``a ≤ b``, of every internal node."""
        found = set()
        for node in self.nodes():
            if node.children:
                a, b = sorted(child.label for child in node.children)
                found.add((a, b))
        return frozenset(found)

    def is_valid(self) -> bool:
        for node in self.nodes():
            if node.is_leaf:
                if node.label != 1:
                    return False
            elif len(node.children) != 2 or node.label != sum(
                child.label for child in node.children
            ):
                return False
        return True

    def to_dict(self) -> dict:
        if self.is_leaf:
            return {"label": self.label}
        return {"label": self.label, "children": [c.to_dict() for c in self.children]}


@cache
def _trees(label: int) -> tuple[SplittingTree, ...]:
    if label == 1:
        return (SplittingTree(1),)
    grown: list[SplittingTree] = []
    for a in range(1, label // 2 + 1):
        left_options, right_options = _trees(a), _trees(label - a)
        for i, left in enumerate(left_options):
            # Equal halves: skip mirrored duplicates.
            start = i if a == label - a else 0
            for right in right_options[start:]:
                grown.append(SplittingTree(label, (left, right)))
    return tuple(grown)


def count_splitting_trees(k: int) -> int:
    """Number of unordered k-splitting tree shapes (1, 1, 1, 2, 3, 6, 11, 23, …)."""

    @cache
    def count(label: int) -> int:
        if label == 1:
            return 1
        total = 0
        for a in range(1, label // 2 + 1):
            b = label - a
            if a == b:
                total += count(a) * (count(a) + 1) // 2
            else:
                total += count(a) * count(b)
        return total

    return count(k)


def splitting_trees(
    k: int, *, budget: int = DEFAULT_SPLIT_BUDGET
) -> tuple[SplittingTree, ...]:
    """One witness tree per distinct internal-pair set, in enumeration order.

    Raises:
        BudgetError: More than ``budget`` tree shapes exist for ``k``.
    """
    if k < 1:
        raise ParameterError(f"Tree root label must be positive, got {k}", k=k)
    required = count_splitting_trees(k)
    if required > budget:
        raise BudgetError(
            f"{required} splitting trees for k={k} exceed the budget of {budget}",
            budget=budget,
            required=required,
        )
    distinct: dict[frozenset[Pair], SplittingTree] = {}
    for tree in _trees(k):
        distinct.setdefault(tree.pairs, tree)
    logger.debug(f"k={k}: {required} trees, {len(distinct)} distinct pair sets")
    return tuple(distinct.values())


@dataclass(frozen=True)
class SplittabilityVerdict:
    tau: float
    r: int
    splittable: bool
    #: min over trees of the max threshold rank of the tree's swap graphs.
    min_max_rank: int
    witness: SplittingTree
    #: The graph attaining the witness tree's max rank.
    blocking: Pair
    #: min_a rank(G_{a,k-a}); no tree can do better.
    root_lower_bound: int
    ranks: dict[Pair, int] = field(repr=False)
    trees_examined: int = 0


def splittability(
    x: SimplicialComplex,
    tau: float,
    r: int,
    *,
    budget: int = DEFAULT_SPLIT_BUDGET,
    tol: float = EIGEN_TOL,
) -> SplittabilityVerdict:
    """Decide whether some splitting tree keeps every swap graph's rank at most r.

    Each G_{a,b} is built and solved once however many trees use it.
    """
    check_tau(tau)
    if r < 1:
        raise ParameterError(f"Rank bound r must be positive, got {r}", r=r)
    if x.k < 2:
        raise DimensionError(
            f"Splittability needs dimension >= 2, got {x.k}", dimension=x.k
        )
    trees = splitting_trees(x.k, budget=budget)
    ranks: dict[Pair, int] = {}
    for pair in sorted(set().union(*(tree.pairs for tree in trees))):
        ranks[pair] = threshold_rank(swap_graph(x, *pair), tau, tol=tol)

    best_tree, best_rank, best_pair = trees[0], None, (0, 0)
    for tree in trees:
        pair = max(sorted(tree.pairs), key=ranks.__getitem__)
        if best_rank is None or ranks[pair] < best_rank:
            best_tree, best_rank, best_pair = tree, ranks[pair], pair
    assert best_rank is not None

    root_bound = min(ranks[(a, x.k - a)] for a in range(1, x.k // 2 + 1))
    verdict = SplittabilityVerdict(
        tau=tau,
        r=r,
        splittable=best_rank <= r,
        min_max_rank=best_rank,
        witness=best_tree,
        blocking=best_pair,
        root_lower_bound=root_bound,
        ranks=ranks,
        trees_examined=len(trees),
    )
    logger.info(
        f"Splittability tau={tau} r={r}: min max-rank {best_rank} over "
        f"{len(trees)} pair sets ({'splittable' if verdict.splittable else 'not splittable'})"
    )
    return verdict
