"""JSON codecs for the hypergraph input format and every report.

Floats are written with 17 significant digits, so a value read back is
bit-identical. Faces are emitted as lists, vertex sets sorted.
"""

from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

from hsx.constructions import Claim, ClaimReport
from hsx.errors import HypergraphError
from hsx.graph import WeightedGraph
from hsx.partition import (
    BoundCheck,
    BoundReport,
    CutCertificate,
    CutValue,
    OracleResult,
)
from hsx.spectra import CheegerBounds, LinkExpansionReport, SpectralReport
from hsx.splitting import SplittabilityVerdict
from hsx.types import Hypergraph
from hsx.validation import WEIGHT_SUM_TOL
from hsx.walks import WalkOperator

_INDENT = "  "


def jsonable(value: Any) -> Any:
    """Recursively convert numpy scalars/arrays and tuples to JSON types."""
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        number = float(value)
        return number if math.isfinite(number) else None
    return value


def format_float(value: float) -> str:
    """``value`` with 17 significant digits, always readable back as a float."""
    text = format(value, ".17g")
    if not any(mark in text for mark in ".en"):
        text += ".0"
    return text


def _encode(value: Any, depth: int) -> str:
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        pad = _INDENT * (depth + 1)
        items = (
            f"{pad}{json.dumps(key)}: {_encode(item, depth + 1)}"
            for key, item in value.items()
        )
        return "{\n" + ",\n".join(items) + "\n" + _INDENT * depth + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        pad = _INDENT * (depth + 1)
        items = (f"{pad}{_encode(item, depth + 1)}" for item in value)
        return "[\n" + ",\n".join(items) + "\n" + _INDENT * depth + "]"
    return json.dumps(value)


def dumps(data: Any) -> str:
    """Indented JSON text of ``data`` with every float at 17 significant digits."""
    return _encode(jsonable(data), 0) + "\n"


# ---------------------------------------------------------------------------
# Hypergraph format
# ---------------------------------------------------------------------------


def parse_hypergraph(
    raw: bytes | str, *, weight_tol: float = WEIGHT_SUM_TOL
) -> Hypergraph:
    """Parse ``{"k": 3, "vertices": 5, "edges": [[0,1,2], …], "weights": […]}``.

    ``weights`` is optional and defaults to uniform over the listed edges.

    Raises:
        HypergraphError: Malformed JSON, missing fields, or the first rule
            violation found by :mod:`hsx.validation`.
    """
    try:
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
        data = json.loads(text)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise HypergraphError(f"Malformed hypergraph JSON: {exc}") from exc
    return hypergraph_from_dict(data, weight_tol=weight_tol)


def hypergraph_from_dict(
    data: Any, *, weight_tol: float = WEIGHT_SUM_TOL
) -> Hypergraph:
    if not isinstance(data, dict):
        raise HypergraphError("Hypergraph JSON must be an object")
    for key in ("k", "vertices", "edges"):
        if key not in data:
            raise HypergraphError(f"Hypergraph JSON is missing {key!r}", field=key)
    edges = data["edges"]
    if not isinstance(edges, list):
        raise HypergraphError("'edges' must be a list of vertex lists")
    weights = data.get("weights")
    if weights is not None and not isinstance(weights, list):
        raise HypergraphError("'weights' must be a list of numbers")
    return Hypergraph.from_edges(
        data["k"], data["vertices"], edges, weights, weight_tol=weight_tol
    )


def hypergraph_to_dict(h: Hypergraph) -> dict[str, Any]:
    return {
        "k": h.k,
        "vertices": h.n,
        "edges": [list(edge) for edge in h.edges],
        "weights": list(h.weights),
    }


def dump_hypergraph(h: Hypergraph) -> str:
    """Canonical one-edge-per-line JSON text of ``h``."""
    data = hypergraph_to_dict(h)
    edges = ",\n    ".join(json.dumps(edge) for edge in data["edges"])
    weights = ", ".join(format_float(w) for w in data["weights"])
    return (
        "{\n"
        f'  "k": {data["k"]},\n'
        f'  "vertices": {data["vertices"]},\n'
        f'  "edges": [\n    {edges}\n  ],\n'
        f'  "weights": [{weights}]\n'
        "}\n"
    )


# ---------------------------------------------------------------------------
# Operators, graphs and spectra
# ---------------------------------------------------------------------------


def operator_to_dict(op: WalkOperator) -> dict[str, Any]:
    return {
        "name": op.name,
        "domain_level": op.domain_level,
        "codomain_level": op.codomain_level,
        "rows": op.rows,
        "cols": op.cols,
        "data": op.matrix,
    }


def graph_to_dict(g: WeightedGraph) -> dict[str, Any]:
    return {
        "name": g.name,
        "vertices": g.vertices,
        "sides": g.sides,
        "weights": g.weights,
    }


def spectral_report_to_dict(report: SpectralReport) -> dict[str, Any]:
    return {
        "object_id": report.object_id,
        "kind": report.kind.value,
        "values": report.values,
        "tolerance": report.tolerance,
    }


def cheeger_to_dict(bounds: CheegerBounds) -> dict[str, Any]:
    return {"lambda_2": bounds.lambda_2, "lower": bounds.lower, "upper": bounds.upper}


def link_report_to_dict(report: LinkExpansionReport) -> dict[str, Any]:
    return {
        "gamma": report.gamma,
        "link_expansion": report.link_expansion,
        "witness": report.witness,
        "two_sided_gamma": report.two_sided_gamma,
        "links": [
            {
                "face": entry.face,
                "sigma_2": entry.sigma_2,
                "two_sided": entry.two_sided,
                "vertices": entry.vertices,
            }
            for entry in report.links
        ],
    }


def verdict_to_dict(verdict: SplittabilityVerdict) -> dict[str, Any]:
    return {
        "tau": verdict.tau,
        "r": verdict.r,
        "splittable": verdict.splittable,
        "min_max_rank": verdict.min_max_rank,
        "witness": verdict.witness.to_dict(),
        "blocking": {"pair": verdict.blocking, "rank": verdict.ranks[verdict.blocking]},
        "root_lower_bound": verdict.root_lower_bound,
        "ranks": [
            {"pair": pair, "rank": rank} for pair, rank in sorted(verdict.ranks.items())
        ],
        "trees_examined": verdict.trees_examined,
    }


# ---------------------------------------------------------------------------
# Cuts and certificates
# ---------------------------------------------------------------------------


def cut_value_to_dict(cut: CutValue) -> dict[str, Any]:
    return {
        "subset": cut.subset,
        "boundary": cut.boundary,
        "volume": cut.volume,
        "conductance": cut.conductance,
        "within_half": cut.within_half,
    }


def oracle_to_dict(result: OracleResult) -> dict[str, Any]:
    return {
        "subset": result.subset,
        "conductance": result.conductance,
        "boundary": result.boundary,
        "volume": result.volume,
        "feasible": result.feasible,
    }


def bound_check_to_dict(check: BoundCheck) -> dict[str, Any]:
    return {
        "name": check.name,
        "lhs": check.lhs,
        "rhs": check.rhs,
        "slack": check.slack,
        "tolerance": check.tolerance,
        "passed": check.passed,
    }


def bound_report_to_dict(report: BoundReport) -> dict[str, Any]:
    return {
        "subset": report.subset,
        "level": report.level,
        "passed": report.passed,
        "checks": [bound_check_to_dict(check) for check in report.checks],
    }


def certificate_to_dict(cert: CutCertificate) -> dict[str, Any]:
    return {
        "subset": cert.subset,
        "level": cert.level,
        "phi_h": cert.phi_h,
        "phi_b2": cert.phi_b2,
        "within_half": cert.within_half,
        "epsilon": cert.epsilon,
        "epsilon_level": cert.epsilon_level,
        "lambda_2_updown": cert.lambda_2_updown,
        "bounds": {
            "epsilon_over_k": cert.epsilon_lower,
            "updown_lower": cert.lower_bound,
            "four_sqrt_epsilon": cert.upper_bound,
        },
        "residual": cert.residual,
        "degenerate": cert.degenerate,
        "oracle": None if cert.oracle is None else oracle_to_dict(cert.oracle),
        "passed": cert.passed,
        "checks": [bound_check_to_dict(check) for check in cert.checks],
    }


def claim_to_dict(claim: Claim) -> dict[str, Any]:
    return {
        "id": claim.claim_id,
        "description": claim.description,
        "measured": claim.measured,
        "bound": claim.bound,
        "relation": claim.relation.value,
        "tolerance": claim.tolerance,
        "passed": claim.passed,
    }


def claim_report_to_dict(report: ClaimReport) -> dict[str, Any]:
    return {
        "construction": report.construction,
        "parameters": report.parameters,
        "passed": report.passed,
        "notes": report.notes,
        "claims": [claim_to_dict(claim) for claim in report.claims],
    }
