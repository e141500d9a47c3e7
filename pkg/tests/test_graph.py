"""Tests for hsx.graph — WeightedGraph cuts and walk matrices."""

import numpy as np
import pytest

from hsx.errors import CutSetError, IsolatedVertexError
from hsx.graph import bipartite_graph, graph_from_edges


@pytest.fixture
def path3():
    return graph_from_edges("P3", 3, [(0, 1, 1.0), (1, 2, 1.0)])


class TestWeightedGraph:
    def test_degrees_and_volume(self, path3):
        np.testing.assert_allclose(path3.degrees, [1.0, 2.0, 1.0])
        assert path3.total_volume == 4.0

    def test_walk_matrix_is_stochastic(self, path3):
        np.testing.assert_allclose(path3.walk_matrix.sum(axis=1), 1.0)
        assert path3.walk_matrix[1, 0] == pytest.approx(0.5)

    def test_symmetric_adjacency(self, path3):
        sym = path3.symmetric_adjacency
        np.testing.assert_allclose(sym, sym.T)
        assert sym[0, 1] == pytest.approx(1 / np.sqrt(2))

    def test_self_loop_counts_once(self):
        g = graph_from_edges("loop", 2, [(0, 0, 1.0), (0, 1, 1.0)])
        np.testing.assert_allclose(g.degrees, [2.0, 1.0])

    def test_isolated_vertex(self):
        g = graph_from_edges("gap", 3, [(0, 1, 1.0)])
        with pytest.raises(IsolatedVertexError) as info:
            g.walk_matrix
        assert info.value.vertex == (2,)
        assert info.value.graph == "gap"

    def test_shape_mismatch(self):
        from hsx.graph import WeightedGraph

        with pytest.raises(ValueError):
            WeightedGraph("bad", ((0,), (1,)), np.zeros((3, 3)))


class TestCuts:
    def test_conductance(self, path3):
        chosen = path3.mask([0])
        assert path3.boundary(chosen) == 1.0
        assert path3.conductance(chosen) == 1.0

    def test_empty_and_full_sets(self, path3):
        with pytest.raises(CutSetError):
            path3.conductance(path3.mask([]))
        with pytest.raises(CutSetError):
            path3.conductance(path3.mask([0, 1, 2]))

    def test_position_out_of_range(self, path3):
        with pytest.raises(CutSetError):
            path3.mask([3])

    def test_positions_by_label(self, path3):
        assert path3.positions([(2,), (0,)]) == [2, 0]
        with pytest.raises(CutSetError):
            path3.positions([(7,)])


class TestBipartite:
    def test_sides_are_tagged(self):
        block = np.array([[1.0, 0.0], [1.0, 1.0]])
        g = bipartite_graph("B", ((0,), (1,)), ((0,), (1,)), block)
        assert g.is_bipartite
        assert g.vertices == ((0, (0,)), (0, (1,)), (1, (0,)), (1, (1,)))
        assert g.sides.tolist() == [0, 0, 1, 1]
        np.testing.assert_allclose(g.weights, g.weights.T)
        assert g.weights[:2, :2].sum() == 0.0
