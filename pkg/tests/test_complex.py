"""Tests for hsx.complex — induced complex, level measures and links."""

from math import comb

import numpy as np
import pytest

from hsx.complex import (
    check_measure_consistency,
    faces_up_to,
    induce_complex,
    link,
    skeleton,
)
from hsx.errors import BudgetError, DimensionError, FaceNotFoundError, LevelError
from hsx.types import Hypergraph


class TestInduceComplex:
    def test_levels_are_lexicographic(self, two_petals_complex):
        x = two_petals_complex
        assert x.faces(0) == ((),)
        assert x.faces(1) == ((0,), (1,), (2,), (3,), (4,))
        assert x.faces(2) == ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4))
        assert x.faces(3) == ((0, 1, 2), (0, 3, 4))

    def test_vertex_measure(self, two_petals_complex):
        x = two_petals_complex
        assert x.probability((0,)) == pytest.approx(1 / 3)
        assert x.probability((1,)) == pytest.approx(1 / 6)

    def test_pair_measure(self, two_petals_complex):
        assert two_petals_complex.probability((0, 1)) == pytest.approx(1 / 6)

    def test_every_level_is_a_distribution(self, random_hypergraphs):
        for h in random_hypergraphs:
            x = induce_complex(h)
            for level in range(h.k + 1):
                assert x.measures[level].total == pytest.approx(1.0)
                assert (x.measure(level) > 0).all()

    def test_empty_face_is_pinned(self, random_hypergraphs):
        for h in random_hypergraphs:
            assert induce_complex(h).probability(()) == 1.0

    def test_superset_sums(self, many_random_hypergraphs):
        for h in many_random_hypergraphs:
            assert check_measure_consistency(induce_complex(h)) < 1e-12

    def test_size_counts_every_level(self, two_petals_complex):
        assert two_petals_complex.size == 1 + 5 + 6 + 2

    def test_vertices(self, two_petals_complex):
        assert two_petals_complex.vertices == (0, 1, 2, 3, 4)

    def test_face_budget(self, two_petals):
        with pytest.raises(BudgetError) as info:
            induce_complex(two_petals, face_budget=5)
        assert info.value.budget == 5
        assert info.value.required == 6

    def test_budget_exactly_met(self, two_petals):
        assert induce_complex(two_petals, face_budget=14).size == 14


class TestLookups:
    def test_contains(self, two_petals_complex):
        assert (0, 3) in two_petals_complex
        assert (1, 3) not in two_petals_complex
        assert "0" not in two_petals_complex

    def test_missing_face(self, two_petals_complex):
        with pytest.raises(FaceNotFoundError) as info:
            two_petals_complex.position((1, 3))
        assert info.value.face == (1, 3)

    def test_level_out_of_range(self, two_petals_complex):
        with pytest.raises(LevelError) as info:
            two_petals_complex.faces(4)
        assert info.value.k == 3

    def test_measure_getitem(self, two_petals_complex):
        assert two_petals_complex.measures[1][(0,)] == pytest.approx(1 / 3)
        with pytest.raises(FaceNotFoundError):
            two_petals_complex.measures[1][(9,)]


class TestLink:
    def test_link_of_hub(self, two_petals_complex):
        x0 = link(two_petals_complex, (0,))
        assert x0.k == 2
        assert x0.anchor == (0,)
        assert x0.faces(1) == ((1,), (2,), (3,), (4,))
        assert x0.faces(2) == ((1, 2), (3, 4))
        np.testing.assert_allclose(x0.measure(1), [0.25] * 4)
        np.testing.assert_allclose(x0.measure(2), [0.5, 0.5])

    def test_link_of_empty_face_is_the_complex(self, two_petals_complex):
        x = link(two_petals_complex, ())
        assert x.levels == two_petals_complex.levels
        np.testing.assert_allclose(x.measure(2), two_petals_complex.measure(2))

    def test_link_of_missing_face(self, two_petals_complex):
        with pytest.raises(FaceNotFoundError):
            link(two_petals_complex, (1, 3))

    @pytest.mark.parametrize("face", [(1, 1), (0, 0), (0, 3, 3)])
    def test_link_rejects_repeated_vertices(self, two_petals_complex, face):
        with pytest.raises(FaceNotFoundError) as info:
            link(two_petals_complex, face)
        assert info.value.face == face

    def test_link_accepts_any_vertex_order(self, two_petals_complex):
        x = two_petals_complex
        assert link(x, (3, 0)).levels == link(x, (0, 3)).levels

    def test_link_measures_are_distributions(self, random_hypergraphs):
        for h in random_hypergraphs:
            x = induce_complex(h)
            for face in x.faces(1):
                x_s = link(x, face)
                for level in range(x_s.k + 1):
                    assert x_s.measures[level].total == pytest.approx(1.0)

    def test_nested_link_accumulates_anchor(self, complete_four):
        x = induce_complex(complete_four)
        assert link(link(x, (0,)), (1,)).anchor == (0, 1)


class TestSkeleton:
    def test_hub_link_skeleton(self, two_petals_complex):
        g = skeleton(link(two_petals_complex, (0,)))
        assert g.name == "G(X_[0])"
        assert g.weights[0, 1] == pytest.approx(0.5)
        assert g.weights[0, 2] == 0.0

    def test_root_name(self, two_petals_complex):
        assert skeleton(two_petals_complex).name == "G(X)"

    def test_needs_two_levels(self, two_petals_complex):
        with pytest.raises(DimensionError):
            skeleton(link(two_petals_complex, (0, 1)))


class TestFacesUpTo:
    def test_order(self, two_petals_complex):
        faces = faces_up_to(two_petals_complex, 1)
        assert faces == [(), (0,), (1,), (2,), (3,), (4,)]

    def test_count(self):
        x = induce_complex(Hypergraph.from_edges(4, 4, [[0, 1, 2, 3]]))
        assert len(faces_up_to(x, 2)) == sum(comb(4, i) for i in range(3))
