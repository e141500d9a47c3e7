"""Unified exception hierarchy for hsx.

Every error carries a human-readable message plus structured ``context``
(face, level, index, offending value …) so the CLI can report the first
violation precisely and tests can assert on fields instead of strings.
"""

from __future__ import annotations


class HsxError(Exception):
    """Base exception for all hsx errors."""

    def __init__(self, message: str, **context: object) -> None:
        self.context = context
        super().__init__(message)


# ---------------------------------------------------------------------------
# Input errors (CLI exit code 1)
# ---------------------------------------------------------------------------


class InputError(HsxError):
    """The caller supplied something hsx cannot work with."""


class HypergraphError(InputError):
    """Hypergraph input is malformed or violates a structural invariant."""


class ParameterError(InputError):
    """A numeric parameter (r, n, k, tau, cap …) is outside its range."""


class LevelError(InputError):
    """Requested levels are out of range or in the wrong order."""

    def __init__(self, message: str, *, levels: tuple[int, ...], k: int) -> None:
        self.levels = levels
        self.k = k
        super().__init__(message, levels=levels, k=k)


class FaceNotFoundError(InputError):
    """A face was looked up in a complex that does not contain it."""

    def __init__(self, face: tuple[int, ...]) -> None:
        self.face = face
        super().__init__(f"Face {list(face)} is not in the complex", face=face)


class DimensionError(InputError):
    """The complex has too few levels for the requested object."""


class CutSetError(InputError):
    """A vertex set is empty, the whole vertex set, or out of range."""


class ConfigError(InputError):
    """Settings file, environment override, or CLI option is invalid."""


# ---------------------------------------------------------------------------
# Budget errors (CLI exit code 3)
# ---------------------------------------------------------------------------


class BudgetError(HsxError):
    """A combinatorial budget (faces, oracle subsets, splitting trees) was exceeded."""

    def __init__(self, message: str, *, budget: int, required: int, **context: object) -> None:
        self.budget = budget
        self.required = required
        super().__init__(message, budget=budget, required=required, **context)


# ---------------------------------------------------------------------------
# Spectral errors
# ---------------------------------------------------------------------------


class SpectralError(HsxError):
    """A spectrum could not be formed for the given object."""


class IsolatedVertexError(SpectralError, InputError):
    """A graph has a zero-degree vertex, so its walk matrix is undefined.

    Inherits from both SpectralError and InputError: the problem is spectral,
    but it is always caused by the object the caller handed in.
    """

    def __init__(self, graph: str, vertex: object, **context: object) -> None:
        self.graph = graph
        self.vertex = vertex
        super().__init__(
            f"Graph {graph!r} has isolated vertex {vertex!r}",
            graph=graph,
            vertex=vertex,
            **context,
        )
