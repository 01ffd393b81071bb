"""Verification pipelines run by the command-line front end.

Every pipeline takes one input graph and produces a VerificationRecord with
outcome 'pass', 'fail' or 'skip'. Records keep input order whatever the
number of worker processes.
"""

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx

import core
from core import MultiGraph

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
ERROR = "error"


@dataclass(frozen=True)
class GraphInput:
    """One graph read from an input file.

    Attributes:
        graph_id: First 16 hex digits of the SHA-256 of the raw record
        graph: Parsed graph
        ends: Edge endpoints in file order (edge-list input only), used as rotation edge ids
    """

    graph_id: str
    graph: MultiGraph
    ends: Optional[Tuple[Tuple[int, int], ...]] = None


@dataclass(frozen=True)
class RunOptions:
    """Parameters shared by every graph of one run."""

    max_k: int = core.DEFAULT_MAX_K
    timeout_ms: int = core.DEFAULT_TIMEOUT_MS
    m: int = 2
    k: int = 3
    chi: int = 0
    rotation_text: str = ""


@dataclass(frozen=True)
class VerificationRecord:
    """Result of one pipeline on one graph."""

    graph_id: str
    command: str
    params: Dict[str, Any]
    outcome: str
    detail: str = ""
    witness: Any = None
    wall_ms: Optional[float] = field(default=None, compare=False)

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        data = {
            "id": self.graph_id,
            "command": self.command,
            "params": self.params,
            "outcome": self.outcome,
            "detail": self.detail,
            "witness": self.witness,
        }
        if timings and self.wall_ms is not None:
            data["wall_ms"] = round(self.wall_ms, 3)
        return data


def graph_id(raw: bytes) -> str:
    return hashlib.sha256(raw).hexdigest()[:16]


def load_inputs(paths: Sequence[Path], fmt: Optional[str] = None) -> List[GraphInput]:
    """Read every graph of every input file, in order.

    Raises:
        ParseError: If a file is malformed
        OSError: If a file cannot be read
        ValueError: If the format cannot be determined
    """
    items: List[GraphInput] = []
    for path in paths:
        path_fmt = core.detect_format(path, fmt)
        data = path.read_bytes()
        ends = None
        if path_fmt == "edge-list":
            _, instances = core.parse_edge_instances(data)
            ends = tuple(instances)
        for raw, graph in core.iter_corpus(data, path_fmt):
            items.append(GraphInput(graph_id(raw), graph, ends))
    return items


PipelineResult = Tuple[str, str, Any]


def _min_walk(item: GraphInput, options: RunOptions, kind: str) -> PipelineResult:
    graph = item.graph
    if not core.is_connected(graph):
        return SKIP, "disconnected", None
    result = core.minimum_walk(graph, kind, options.max_k)
    if result is None:
        if kind == core.TRAIL and options.max_k >= max(graph.max_degree // 2, 1):
            return SKIP, "no spanning closed trail", None
        return SKIP, f"no {kind} with k <= {options.max_k}", None
    k, cert = result
    if not core.is_valid_certificate(cert):
        return FAIL, "certificate failed validation", cert.to_json()
    return PASS, f"min_k={k}", {"min_k": k, "certificate": cert.to_json()}


def run_min_walk(item: GraphInput, options: RunOptions) -> PipelineResult:
    return _min_walk(item, options, core.WALK)


def run_min_trail(item: GraphInput, options: RunOptions) -> PipelineResult:
    return _min_walk(item, options, core.TRAIL)


def run_decompose(item: GraphInput, options: RunOptions) -> PipelineResult:
    partition = core.tree_connected_components(item.graph, options.m)
    detail = f"parts={len(partition.parts)}"
    if partition.omega is not None:
        detail += f" omega={core.format_fraction(partition.omega)}"
    return PASS, detail, partition.to_dict()


def run_halin(item: GraphInput, options: RunOptions) -> PipelineResult:
    if not core.is_minimally_3_connected(item.graph):
        return SKIP, "not minimally 3-connected", None
    report = core.verify_halin_properties(item.graph, item.graph_id)
    failed = [check.name for check in report.checks if check.status == FAIL]
    if failed:
        return FAIL, "failed: " + ",".join(failed), report.to_dict()
    return PASS, f"{len(report.checks)} checks", report.to_dict()


def run_walk_theorem(item: GraphInput, options: RunOptions) -> PipelineResult:
    graph = item.graph
    k = core.walk_bound(options.chi)
    if not core.is_k_connected(graph, 3):
        return SKIP, "not 3-connected", None
    if not core.edge_bound_check(graph.n, len(graph.pairs), options.chi, False):
        return SKIP, f"too many edges for chi={options.chi}", None

    x = [v for v in graph.vertices if graph.degree(v) >= k + 1]
    hypothesis = None
    if core.is_independent(graph, x):
        hypothesis = core.check_walk_hypothesis(graph, x, k, use_fallback=True)
    cert = core.find_bounded_walk(graph, k, core.WALK)
    witness = {
        "k": k,
        "X": x,
        "hypothesis": hypothesis.to_dict() if hypothesis is not None else None,
        "certificate": cert.to_json() if cert is not None else None,
    }
    if cert is None:
        if hypothesis is not None and hypothesis.satisfied:
            return FAIL, f"hypothesis holds at k={k} but the oracle found no {k}-walk", witness
        return FAIL, f"no {k}-walk", witness
    if hypothesis is None:
        return SKIP, f"X-not-independent: hypothesis not checked, oracle found a {k}-walk", witness
    # The fallback reruns the oracle with caps on S only, so a k-walk implies satisfied
    if not hypothesis.satisfied:
        return FAIL, f"hypothesis rejects k={k} but the oracle found a {k}-walk", witness
    return PASS, f"k={k}", witness


def run_trail_theorem(item: GraphInput, options: RunOptions) -> PipelineResult:
    graph = item.graph
    k = core.trail_bound(options.chi)
    if not core.is_k_connected(graph, 5):
        return SKIP, "not 5-connected", None
    if not core.edge_bound_check(graph.n, len(graph.pairs), options.chi, False):
        return SKIP, f"too many edges for chi={options.chi}", None

    hypothesis = core.check_trail_hypothesis(graph, k)
    cert = core.find_bounded_walk(graph, k, core.TRAIL)
    witness = {
        "k": k,
        "hypothesis": hypothesis.to_dict(),
        "certificate": cert.to_json() if cert is not None else None,
    }
    if cert is None:
        if hypothesis.satisfied:
            return FAIL, f"hypothesis holds at k={k} but the oracle found no {k}-trail", witness
        return FAIL, f"no {k}-trail", witness
    if not hypothesis.satisfied:
        return PASS, f"k={k} (hypothesis not satisfied)", witness
    return PASS, f"k={k}", witness


def run_reduce(item: GraphInput, options: RunOptions) -> PipelineResult:
    if not core.is_k_connected(item.graph, 3):
        return SKIP, "not 3-connected", None
    reduction = core.reduce_to_bipartite_witness(item.graph, options.k)
    if reduction.witness is not None:
        return FAIL, "bipartite witness", reduction.witness.to_dict()
    cert = reduction.certificate
    assert cert is not None
    return PASS, f"steps={len(reduction.trace)}", {
        "certificate": cert.to_json(),
        "trace": reduction.trace.to_list(),
        "lifts": [[index, how] for index, how in reduction.lifts],
    }


def run_embed(item: GraphInput, options: RunOptions) -> PipelineResult:
    system = core.parse_rotation(options.rotation_text, item.graph, item.ends)
    report = core.face_trace(system)
    return PASS, f"chi={report.chi} F={report.face_count}", report.to_dict()


def run_lower_bound(item: GraphInput, options: RunOptions) -> PipelineResult:
    bound = core.conjecture_lower_bound(options.chi)
    result = core.minimum_walk(item.graph, core.TRAIL, options.max_k)
    if result is None:
        return SKIP, f"no trail with k <= {options.max_k}", {"bound": bound}
    k, cert = result
    witness = {"min_trail": k, "bound": bound, "certificate": cert.to_json()}
    if k < bound:
        return FAIL, f"min_trail={k} < bound={bound}", witness
    return PASS, f"min_trail={k} bound={bound}", witness


PIPELINES: Dict[str, Callable[[GraphInput, RunOptions], PipelineResult]] = {
    "min-walk": run_min_walk,
    "min-trail": run_min_trail,
    "decompose": run_decompose,
    "verify halin": run_halin,
    "verify walk-theorem": run_walk_theorem,
    "verify trail-theorem": run_trail_theorem,
    "reduce": run_reduce,
    "embed chi": run_embed,
    "lower-bound": run_lower_bound,
}


def command_params(command: str, options: RunOptions) -> Dict[str, Any]:
    """The parameters that influence a command's result."""
    if command == "decompose":
        return {"m": options.m}
    if command == "reduce":
        return {"k": options.k}
    if command in ("verify walk-theorem", "verify trail-theorem", "lower-bound"):
        return {"chi": options.chi}
    if command in ("min-walk", "min-trail"):
        return {"max_k": options.max_k}
    return {}


def run_one(command: str, options: RunOptions, item: GraphInput) -> VerificationRecord:
    """Run one pipeline on one graph under the per-graph time limit."""
    params = command_params(command, options)
    start = time.perf_counter()
    with core.logger.context(graph=item.graph_id):
        try:
            with core.time_limit(options.timeout_ms):
                outcome, detail, witness = PIPELINES[command](item, options)
        except core.SearchTimeout:
            outcome, detail, witness = SKIP, "timeout", None
        except (core.GraphTooLargeError, core.ParseError, core.UnsupportedParameterError) as exc:
            outcome, detail, witness = ERROR, str(exc), None
        except core.PreconditionError as exc:
            outcome, detail, witness = SKIP, str(exc), None
        wall_ms = (time.perf_counter() - start) * 1000
        if outcome == FAIL:
            core.logger.error(f"{command} failed: {detail}")
        else:
            core.logger.debug(f"{command}: {outcome} ({detail})")
    return VerificationRecord(item.graph_id, command, params, outcome, detail, witness, wall_ms)


def run_pipeline(
    command: str, items: Sequence[GraphInput], options: RunOptions, jobs: int = 1
) -> List[VerificationRecord]:
    """Run a command on every graph; records come back in input order."""
    worker = partial(run_one, command, options)
    if jobs <= 1 or len(items) <= 1:
        return [worker(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, items))


def lower_bound_input(chi: int) -> GraphInput:
    """K_{4, 4 - chi}, the graph behind the trail lower bound.

    Raises:
        PreconditionError: If chi > 3
    """
    if 4 - chi < 1:
        raise core.PreconditionError("lower-bound needs chi <= 3")
    graph = core.MultiGraph.from_networkx(nx.complete_bipartite_graph(4, 4 - chi))
    return GraphInput(graph_id(core.serialize_graph(graph, "graph6")), graph)


def summarize(records: Sequence[VerificationRecord]) -> Dict[str, int]:
    summary = {PASS: 0, FAIL: 0, SKIP: 0}
    for record in records:
        if record.outcome in summary:
            summary[record.outcome] += 1
    return summary


def render_json(records: Sequence[VerificationRecord], timings: bool = False) -> str:
    payload = {
        "records": [record.to_dict(timings) for record in records],
        "summary": summarize(records),
    }
    return json.dumps(payload, indent=2)


def render_tsv(records: Sequence[VerificationRecord]) -> str:
    lines = ["id\tcommand\toutcome\tdetail"]
    for record in records:
        detail = record.detail.replace("\t", " ").replace("\n", " ")
        lines.append(f"{record.graph_id}\t{record.command}\t{record.outcome}\t{detail}")
    return "\n".join(lines)


def exit_code(records: Sequence[VerificationRecord]) -> int:
    """0 when nothing failed, 1 if any record failed, 2 on input errors."""
    if any(record.outcome == ERROR for record in records):
        return 2
    if any(record.outcome == FAIL for record in records):
        return 1
    return 0
