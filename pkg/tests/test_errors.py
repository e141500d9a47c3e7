"""Tests for hsx.errors — exception hierarchy and structured context."""

import pytest

from hsx.errors import (
    BudgetError,
    ConfigError,
    CutSetError,
    DimensionError,
    FaceNotFoundError,
    HsxError,
    HypergraphError,
    InputError,
    IsolatedVertexError,
    LevelError,
    ParameterError,
    SpectralError,
)


class TestHierarchy:
    def test_all_inherit_from_hsx_error(self):
        classes = [
            InputError,
            HypergraphError,
            ParameterError,
            LevelError,
            FaceNotFoundError,
            DimensionError,
            CutSetError,
            ConfigError,
            BudgetError,
            SpectralError,
            IsolatedVertexError,
        ]
        for cls in classes:
            assert issubclass(cls, HsxError)

    @pytest.mark.parametrize(
        "cls",
        [HypergraphError, ParameterError, LevelError, DimensionError, CutSetError, ConfigError],
    )
    def test_input_errors(self, cls):
        assert issubclass(cls, InputError)

    def test_budget_is_not_input(self):
        assert not issubclass(BudgetError, InputError)

    def test_isolated_vertex_is_both(self):
        assert issubclass(IsolatedVertexError, SpectralError)
        assert issubclass(IsolatedVertexError, InputError)


class TestContext:
    def test_base_context(self):
        exc = HsxError("boom", index=3)
        assert str(exc) == "boom"
        assert exc.context == {"index": 3}

    def test_level_error(self):
        exc = LevelError("bad", levels=(2, 1), k=3)
        assert exc.levels == (2, 1)
        assert exc.context == {"levels": (2, 1), "k": 3}

    def test_face_not_found(self):
        exc = FaceNotFoundError((1, 3))
        assert exc.face == (1, 3)
        assert "[1, 3]" in str(exc)

    def test_budget(self):
        exc = BudgetError("too many", budget=10, required=23, k=8)
        assert (exc.budget, exc.required) == (10, 23)
        assert exc.context["k"] == 8

    def test_isolated_vertex(self):
        exc = IsolatedVertexError("G(X)", (2,), face=(0,))
        assert exc.graph == "G(X)"
        assert exc.vertex == (2,)
        assert exc.context["face"] == (0,)

    def test_catchable_as_base(self):
        with pytest.raises(HsxError):
            raise CutSetError("empty")
