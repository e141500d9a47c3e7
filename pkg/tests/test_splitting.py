"""Tests for hsx.splitting — tree enumeration and (τ, r)-splittability."""

import pytest

from hsx.complex import induce_complex, link
from hsx.errors import BudgetError, DimensionError, ParameterError
from hsx.splitting import (
    SplittingTree,
    count_splitting_trees,
    splittability,
    splitting_trees,
)
from hsx.types import Hypergraph


@pytest.fixture
def four_edge_complex():
    return induce_complex(Hypergraph.from_edges(4, 4, [[0, 1, 2, 3]]))


class TestTrees:
    @pytest.mark.parametrize(
        "k, expected", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23)]
    )
    def test_counts(self, k, expected):
        assert count_splitting_trees(k) == expected

    def test_k2_has_one_tree(self):
        (tree,) = splitting_trees(2)
        assert tree.pairs == frozenset({(1, 1)})

    def test_k4_pair_sets(self):
        pair_sets = {tree.pairs for tree in splitting_trees(4)}
        assert pair_sets == {
            frozenset({(1, 3), (1, 2), (1, 1)}),
            frozenset({(2, 2), (1, 1)}),
        }

    @pytest.mark.parametrize("k", range(2, 8))
    def test_trees_are_valid_and_distinct(self, k):
        trees = splitting_trees(k)
        assert all(tree.is_valid() and tree.leaves == k for tree in trees)
        assert len({tree.pairs for tree in trees}) == len(trees)

    def test_budget(self):
        with pytest.raises(BudgetError) as info:
            splitting_trees(8, budget=10)
        assert info.value.required == 23

    def test_invalid_root(self):
        with pytest.raises(ParameterError):
            splitting_trees(0)


class TestSplittingTree:
    def test_invalid_shapes(self):
        assert not SplittingTree(2).is_valid()
        assert not SplittingTree(3, (SplittingTree(1), SplittingTree(1))).is_valid()

    def test_to_dict(self):
        tree = SplittingTree(2, (SplittingTree(1), SplittingTree(1)))
        assert tree.to_dict() == {
            "label": 2,
            "children": [{"label": 1}, {"label": 1}],
        }


class TestSplittability:
    def test_single_edge_min_max_rank(self, four_edge_complex):
        verdict = splittability(four_edge_complex, 0.99, 4)
        assert verdict.splittable
        assert verdict.min_max_rank == 4
        assert verdict.blocking == (1, 3)
        assert verdict.witness.pairs == frozenset({(1, 3), (1, 2), (1, 1)})
        assert verdict.trees_examined == 2

    def test_single_edge_not_splittable_below(self, four_edge_complex):
        verdict = splittability(four_edge_complex, 0.99, 3)
        assert not verdict.splittable
        assert verdict.min_max_rank == 4

    def test_ranks_are_per_pair(self, four_edge_complex):
        ranks = splittability(four_edge_complex, 0.99, 4).ranks
        assert ranks[(1, 3)] == 4
        assert ranks[(2, 2)] == 6
        assert ranks[(1, 1)] == 1
        assert ranks[(1, 2)] == 1

    def test_root_lower_bound(self, four_edge_complex):
        verdict = splittability(four_edge_complex, 0.99, 4)
        assert verdict.root_lower_bound == 4
        assert verdict.root_lower_bound <= verdict.min_max_rank

    def test_sunflower_not_splittable(self, two_petals_complex):
        for tau in (-1.0, 0.0, 1.0):
            verdict = splittability(two_petals_complex, tau, 2)
            assert not verdict.splittable
            assert verdict.min_max_rank >= 3

    def test_parameter_checks(self, two_petals_complex):
        with pytest.raises(ParameterError):
            splittability(two_petals_complex, 1.5, 2)
        with pytest.raises(ParameterError):
            splittability(two_petals_complex, 0.5, 0)

    def test_needs_dimension_two(self, two_petals_complex):
        with pytest.raises(DimensionError):
            splittability(link(two_petals_complex, (0, 1)), 0.5, 1)
