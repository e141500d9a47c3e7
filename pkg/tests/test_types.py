"""Tests for hsx.types — Face helpers and Hypergraph canonicalisation."""

import dataclasses

import numpy as np
import pytest

from hsx.errors import HypergraphError
from hsx.types import EMPTY_FACE, Hypergraph, make_face


class TestMakeFace:
    def test_sorts_and_dedupes(self):
        assert make_face([3, 1, 3, 2]) == (1, 2, 3)

    def test_empty(self):
        assert make_face([]) == EMPTY_FACE == ()


class TestFromEdges:
    def test_uniform_default_weights(self, two_petals):
        assert two_petals.edges == ((0, 1, 2), (0, 3, 4))
        assert two_petals.weights == (0.5, 0.5)

    def test_edges_are_canonicalised(self):
        h = Hypergraph.from_edges(3, 5, [[4, 3, 0], [2, 0, 1]])
        assert h.edges == ((0, 1, 2), (0, 3, 4))

    def test_duplicate_edges_merge_weights(self):
        h = Hypergraph.from_edges(
            3, 5, [[0, 1, 2], [2, 1, 0], [0, 3, 4]], [0.3, 0.2, 0.5]
        )
        assert h.edges == ((0, 1, 2), (0, 3, 4))
        assert h.weights == pytest.approx((0.5, 0.5))

    def test_repeated_edge_without_weights_gets_more_mass(self):
        h = Hypergraph.from_edges(3, 5, [[0, 1, 2], [0, 1, 2], [0, 3, 4]])
        assert h.weights == pytest.approx((2 / 3, 1 / 3))

    def test_uniform_ignores_repeats(self):
        h = Hypergraph.uniform(3, 5, [[0, 1, 2], [0, 1, 2], [0, 3, 4]])
        assert h.weights == pytest.approx((0.5, 0.5))

    def test_invalid_input_raises(self):
        with pytest.raises(HypergraphError):
            Hypergraph.from_edges(3, 5, [[0, 1], [0, 3, 4]])

    def test_frozen(self, two_petals):
        with pytest.raises(dataclasses.FrozenInstanceError):
            two_petals.k = 4  # type: ignore[misc]

    def test_equality_is_by_value(self):
        a = Hypergraph.from_edges(3, 5, [[0, 1, 2], [0, 3, 4]])
        b = Hypergraph.from_edges(3, 5, [[0, 3, 4], [2, 1, 0]])
        assert a == b


class TestDerivedViews:
    def test_incidence(self, two_petals):
        assert two_petals.incidence.shape == (2, 5)
        assert two_petals.incidence[0].tolist() == [True, True, True, False, False]

    def test_degrees(self, two_petals):
        np.testing.assert_allclose(two_petals.degrees, [1.0, 0.5, 0.5, 0.5, 0.5])

    def test_degrees_sum_to_k(self, random_hypergraphs):
        for h in random_hypergraphs:
            assert h.total_volume == pytest.approx(h.k)

    def test_combinatorial_degrees(self, two_petals):
        assert two_petals.combinatorial_degrees.tolist() == [2, 1, 1, 1, 1]

    def test_edge_count(self, two_petals):
        assert two_petals.edge_count == 2

    def test_is_uniform(self, two_petals):
        assert two_petals.is_uniform
        weighted = Hypergraph.from_edges(3, 5, [[0, 1, 2], [0, 3, 4]], [0.25, 0.75])
        assert not weighted.is_uniform
