"""Public API for the hsx package.

Usage::

    from hsx import Hypergraph, induce_complex, hypergraph_sparse_cut, updown_walk

    h = Hypergraph.from_edges(3, 5, [[0, 1, 2], [0, 3, 4]])
    x = induce_complex(h)

    walk = updown_walk(x, 1, 2)          # N²_{1,2} on X(1)
    certificate = hypergraph_sparse_cut(h, 2)
    print(certificate.subset, certificate.phi_h, certificate.upper_bound)
"""

from hsx.complex import LevelMeasure, SimplicialComplex, induce_complex, link, skeleton
from hsx.constructions import (
    Claim,
    ClaimReport,
    cycle_link_hypergraph,
    sunflower_hypergraph,
    verify_cycle_link_claims,
    verify_sunflower_claims,
)
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
from hsx.graph import WeightedGraph
from hsx.partition import (
    BoundReport,
    CutCertificate,
    CutValue,
    OracleResult,
    SweepResult,
    brute_force_min_conductance,
    conductance_graph,
    conductance_hypergraph,
    fiedler_sweep,
    hypergraph_sparse_cut,
    verify_expansion_bounds,
)
from hsx.spectra import (
    LinkExpansionReport,
    SpectralReport,
    SpectrumKind,
    cheeger_bounds,
    connected_components,
    doubled_eigenvalues,
    eigenvalues,
    hdx_gamma,
    singular_values,
    threshold_rank,
    walk_eigenvalues,
)
from hsx.splitting import (
    SplittabilityVerdict,
    SplittingTree,
    splittability,
    splitting_trees,
)
from hsx.types import EMPTY_FACE, Face, Hypergraph, make_face
from hsx.walks import (
    WalkOperator,
    adjoint,
    bipartite_swap_walk,
    bipartite_walk_graph,
    bipartite_walk_matrix,
    compose,
    compose_down,
    compose_up,
    down_operator,
    inner_product,
    swap_graph,
    swap_operator,
    two_step_graph,
    up_operator,
    updown_walk,
)

__all__ = [
    # Types
    "Face",
    "EMPTY_FACE",
    "make_face",
    "Hypergraph",
    # Complex
    "LevelMeasure",
    "SimplicialComplex",
    "induce_complex",
    "link",
    "skeleton",
    # Walks
    "WalkOperator",
    "WeightedGraph",
    "adjoint",
    "compose",
    "inner_product",
    "up_operator",
    "down_operator",
    "compose_down",
    "compose_up",
    "updown_walk",
    "swap_operator",
    "bipartite_walk_matrix",
    "bipartite_swap_walk",
    "bipartite_walk_graph",
    "two_step_graph",
    "swap_graph",
    # Spectra
    "SpectrumKind",
    "SpectralReport",
    "LinkExpansionReport",
    "singular_values",
    "doubled_eigenvalues",
    "walk_eigenvalues",
    "eigenvalues",
    "threshold_rank",
    "connected_components",
    "cheeger_bounds",
    "hdx_gamma",
    "SplittingTree",
    "SplittabilityVerdict",
    "splitting_trees",
    "splittability",
    # Partition
    "CutValue",
    "OracleResult",
    "SweepResult",
    "BoundReport",
    "CutCertificate",
    "conductance_hypergraph",
    "conductance_graph",
    "brute_force_min_conductance",
    "fiedler_sweep",
    "hypergraph_sparse_cut",
    "verify_expansion_bounds",
    # Constructions
    "Claim",
    "ClaimReport",
    "sunflower_hypergraph",
    "cycle_link_hypergraph",
    "verify_sunflower_claims",
    "verify_cycle_link_claims",
    # Settings and runs
    "HsxSettings",
    "load_settings",
    "RunConfig",
    "run",
    # Errors
    "HsxError",
    "InputError",
    "HypergraphError",
    "ParameterError",
    "LevelError",
    "FaceNotFoundError",
    "DimensionError",
    "CutSetError",
    "ConfigError",
    "BudgetError",
    "SpectralError",
    "IsolatedVertexError",
]


# ---------------------------------------------------------------------------
# Lazily-loaded names
# ---------------------------------------------------------------------------

#: Settings and the command runner, resolved on first attribute access.
#: Library users computing spectra never need molcfg loaded.
_LAZY_MODULES = {
    "HsxSettings": "hsx.config",
    "load_settings": "hsx.config",
    "RunConfig": "hsx.models",
    "run": "hsx.runner",
}


def __getattr__(name: str):
    module_name = _LAZY_MODULES.get(name)
    if module_name is None:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
    import importlib

    value = getattr(importlib.import_module(module_name), name)
    globals()[name] = value  # cache so later lookups skip this path
    return value


def __dir__() -> list[str]:
    return sorted(set(globals()) | set(_LAZY_MODULES))
