"""Execute one RunConfig and produce its JSON text and exit code.

Exit codes: 0 success, 1 input error, 2 a verified claim or certificate
check failed, 3 a combinatorial budget was exceeded.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any

from hsx import serde
from hsx._log import get_logger
from hsx.complex import induce_complex
from hsx.constructions import (
    cycle_link_hypergraph,
    sunflower_hypergraph,
    verify_cycle_link_claims,
    verify_sunflower_claims,
)
from hsx.errors import BudgetError, ConfigError, HsxError, InputError
from hsx.models import Command, RunConfig, WalkKind
from hsx.partition import (
    ExpansionContext,
    brute_force_min_conductance,
    conductance_hypergraph,
    hypergraph_sparse_cut,
    verify_expansion_bounds,
)
from hsx.spectra import (
    cheeger_bounds,
    connected_components,
    eigenvalues,
    hdx_gamma,
    singular_values,
    threshold_rank,
    walk_eigenvalues,
)
from hsx.splitting import splittability
from hsx.types import Hypergraph
from hsx.validation import WEIGHT_SUM_TOL
from hsx.walks import (
    bipartite_walk_graph,
    compose_down,
    swap_graph,
    swap_operator,
    two_step_graph,
    updown_walk,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CLAIM = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunResult:
    exit_code: int
    text: str | None = None
    error: HsxError | None = None


def tool_version() -> str:
    from importlib.metadata import PackageNotFoundError, version

    try:
        return version("molcrafts-hsx")
    except PackageNotFoundError:  # running from a source tree, not installed
        return "unknown"


def envelope(config: RunConfig, result: dict[str, Any]) -> dict[str, Any]:
    """Wrap a command result with the version, tolerances and config that produced it."""
    return {
        "tool": "hsx",
        "version": tool_version(),
        "command": config.command.value,
        "tolerances": config.tolerances(),
        "config": config.to_dict(),
        "result": result,
    }


def load_hypergraph(path: Path, *, weight_tol: float = WEIGHT_SUM_TOL) -> Hypergraph:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"Cannot read {path}: {exc.strerror}", path=str(path)) from exc
    return serde.parse_hypergraph(raw, weight_tol=weight_tol)


def run(config: RunConfig) -> RunResult:
    """Run *config*; errors become exit codes instead of propagating."""
    try:
        text, code = _dispatch(config)
    except BudgetError as exc:
        logger.warning(f"{config.command}: {exc}")
        return RunResult(EXIT_BUDGET, error=exc)
    except HsxError as exc:
        return RunResult(EXIT_INPUT, error=exc)

    if config.output_path is not None:
        try:
            Path(config.output_path).write_text(text)
        except OSError as exc:
            error = InputError(
                f"Cannot write {config.output_path}: {exc.strerror}",
                path=str(config.output_path),
            )
            return RunResult(EXIT_INPUT, error=error)
    return RunResult(code, text=text)


def _require(config: RunConfig, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(config, name) is None]
    if missing:
        raise ConfigError(
            f"'{config.command}' requires {', '.join(missing)}", missing=missing
        )


def _dispatch(config: RunConfig) -> tuple[str, int]:
    command = config.command

    if command is Command.gen_sunflower:
        _require(config, "r", "k")
        return serde.dump_hypergraph(sunflower_hypergraph(config.r, config.k)), EXIT_OK
    if command is Command.gen_cycle_link:
        _require(config, "n", "k")
        return serde.dump_hypergraph(cycle_link_hypergraph(config.n, config.k)), EXIT_OK

    if command is Command.verify_sunflower:
        _require(config, "r", "k")
        report = verify_sunflower_claims(
            config.r,
            config.k,
            face_budget=config.face_budget,
            oracle_cap=config.oracle_cap,
            split_budget=config.split_budget,
            tol_eig=config.tol_eig,
            tol_bound=config.tol_bound,
            tol_measure=config.tol_measure,
        )
        return _emit(config, serde.claim_report_to_dict(report)), _verdict(report.passed)
    if command is Command.verify_cycle_link:
        _require(config, "n", "k")
        report = verify_cycle_link_claims(
            config.n,
            config.k,
            face_budget=config.face_budget,
            oracle_cap=config.oracle_cap,
            tol_eig=config.tol_eig,
            tol_bound=config.tol_bound,
            tol_measure=config.tol_measure,
        )
        return _emit(config, serde.claim_report_to_dict(report)), _verdict(report.passed)

    assert config.input_path is not None
    h = load_hypergraph(config.input_path, weight_tol=config.tol_measure)
    logger.info(f"Loaded {config.input_path}: k={h.k}, n={h.n}, |E|={h.edge_count}")

    if command is Command.oracle:
        result = brute_force_min_conductance(
            h, cap=config.oracle_cap, tol=config.tol_measure
        )
        return _emit(config, serde.oracle_to_dict(result)), EXIT_OK
    if command is Command.sparse_cut:
        certificate = hypergraph_sparse_cut(
            h,
            config.level,
            face_budget=config.face_budget,
            oracle_cap=config.oracle_cap,
            tol=config.tol_bound,
            measure_tol=config.tol_measure,
        )
        return (
            _emit(config, serde.certificate_to_dict(certificate)),
            _verdict(certificate.passed),
        )
    if command is Command.bounds:
        _require(config, "subset")
        context = ExpansionContext.build(
            h, config.level, face_budget=config.face_budget
        )
        cut = conductance_hypergraph(h, config.subset, tol=config.tol_measure)
        report = verify_expansion_bounds(
            h, config.subset, config.level, context=context, tol=config.tol_bound
        )
        payload = {
            "cut": serde.cut_value_to_dict(cut),
            "bounds": serde.bound_report_to_dict(report),
        }
        return _emit(config, payload), _verdict(report.passed)

    x = induce_complex(h, face_budget=config.face_budget)
    if command is Command.link_expansion:
        return _emit(config, serde.link_report_to_dict(hdx_gamma(x))), EXIT_OK
    if command is Command.splittability:
        _require(config, "tau", "r")
        verdict = splittability(
            x, config.tau, config.r, budget=config.split_budget, tol=config.tol_eig
        )
        return _emit(config, serde.verdict_to_dict(verdict)), EXIT_OK

    m, l = config.levels or (1, 2)
    if config.walk is WalkKind.updown:
        operator = updown_walk(x, m, l)
        operator_spectrum = walk_eigenvalues(operator, tol=config.tol_eig)
        graph = two_step_graph(x, m, l)
    elif config.walk is WalkKind.swap:
        operator = swap_operator(x, m, l)
        operator_spectrum = singular_values(operator, tol=config.tol_eig)
        graph = swap_graph(x, m, l)
    else:
        operator = compose_down(x, m, l)
        operator_spectrum = singular_values(operator, tol=config.tol_eig)
        graph = bipartite_walk_graph(x, m, l)
    graph_spectrum = eigenvalues(graph, tol=config.tol_eig)
    components, _ = connected_components(graph)
    result: dict[str, Any] = {
        "walk": config.walk.value,
        "levels": [m, l],
        "operator": operator.name,
        "row_stochastic": operator.is_row_stochastic(),
        "operator_spectrum": serde.spectral_report_to_dict(operator_spectrum),
        "graph": graph.name,
        "graph_spectrum": serde.spectral_report_to_dict(graph_spectrum),
        "components": components,
    }
    if graph.order >= 2:
        result["cheeger"] = serde.cheeger_to_dict(cheeger_bounds(graph))
    if config.tau is not None:
        result["threshold_rank"] = {
            "tau": config.tau,
            "rank": threshold_rank(graph_spectrum, config.tau, tol=config.tol_eig),
        }
    if config.export:
        result["export"] = serde.operator_to_dict(operator)
    return _emit(config, result), EXIT_OK


def _emit(config: RunConfig, result: dict[str, Any]) -> str:
    return serde.dumps(envelope(config, result))


def _verdict(passed: bool) -> int:
    return EXIT_OK if passed else EXIT_CLAIM
