"""Command-line interface.

Exit codes: 0 when a verdict was computed (including infeasible or failing
verdicts), 1 for usage and parse errors, 2 when an internal invariant was
breached (a bug in this package, never the input's fault).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass

from .cds import bounded_cds
from .corpus import SUITES, run_suite
from .formats import (
    ParseError,
    load_graph,
    load_hypergraph,
    render_graph,
    render_hypergraph,
)
from .generate import generate
from .graphs import Graph, GraphError, InternalInvariantError
from .hypercolor import (
    Colorable,
    HypergraphError,
    Infeasible,
    PreconditionViolated,
    incidence_graph,
    two_color_p7,
    verify_coloring,
)
from .oracle import (
    CapExceededError,
    check_cds_characterization,
    check_minimum_cds_structure,
    has_induced_path,
    longest_induced_path,
    min_k_pfree,
)


@dataclass
class ResultRecord:
    """Machine-readable outcome of one CLI invocation.

    Round-trips losslessly through to_dict/from_dict; witness fields hold
    plain ints, strings, and sorted lists so the JSON form is canonical.
    """

    command: str
    input_sha256: str
    seed: int | None
    verdict: str
    witness: dict
    trace: dict
    wall_time_s: float

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ResultRecord":
        return cls(
            command=data["command"],
            input_sha256=data["input_sha256"],
            seed=data["seed"],
            verdict=data["verdict"],
            witness=data["witness"],
            trace=data["trace"],
            wall_time_s=data["wall_time_s"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _emit(record: ResultRecord, human_lines: list[str], as_json: bool) -> None:
    if as_json:
        print(record.to_json())
    else:
        for line in human_lines:
            print(line)


def _ids(values) -> str:
    return " ".join(str(v) for v in values)


def _cmd_cds(args) -> int:
    g = load_graph(args.graph)
    digest = _digest(args.graph)
    start = time.perf_counter()
    x, trace = bounded_cds(g)
    elapsed = time.perf_counter() - start
    record = ResultRecord(
        command="cds",
        input_sha256=digest,
        seed=None,
        verdict="cds",
        witness={"cds": sorted(x)},
        trace={
            "iterations": trace.iterations,
            "sizes": [r.size for r in trace.records],
            "weights": [r.weight for r in trace.records],
        },
        wall_time_s=elapsed,
    )
    last = trace.records[-1]
    _emit(
        record,
        [
            "verdict: cds",
            f"set ({len(x)} vertices): {_ids(sorted(x))}",
            f"weight: {last.weight}",
            f"iterations: {trace.iterations}",
        ],
        args.json,
    )
    return 0


def _cmd_min_k(args) -> int:
    g = load_graph(args.graph)
    digest = _digest(args.graph)
    start = time.perf_counter()
    k = min_k_pfree(g, cap=args.cap)
    witness = longest_induced_path(g, cap=args.cap)
    elapsed = time.perf_counter() - start
    record = ResultRecord(
        command="min-k",
        input_sha256=digest,
        seed=None,
        verdict=f"k={k}",
        witness={"longest_induced_path": list(witness.vertices)},
        trace={},
        wall_time_s=elapsed,
    )
    _emit(
        record,
        [
            f"verdict: k={k}",
            f"longest induced path ({witness.length} vertices): "
            f"{_ids(witness.vertices)}",
        ],
        args.json,
    )
    return 0


def _cmd_2color(args) -> int:
    h = load_hypergraph(args.hypergraph, permissive=args.permissive)
    digest = _digest(args.hypergraph)
    start = time.perf_counter()

    if args.verify_p7:
        view = incidence_graph(h)
        path = has_induced_path(view.graph, 7)
        if path is not None:
            elapsed = time.perf_counter() - start
            record = ResultRecord(
                command="2color",
                input_sha256=digest,
                seed=None,
                verdict="precondition-violated",
                witness={"incidence_path": list(path.vertices)},
                trace={},
                wall_time_s=elapsed,
            )
            _emit(
                record,
                [
                    "verdict: precondition-violated",
                    f"induced 7-vertex path in the incidence graph: "
                    f"{_ids(path.vertices)}",
                ],
                args.json,
            )
            return 0

    outcome = two_color_p7(h)
    elapsed = time.perf_counter() - start

    if isinstance(outcome, Colorable):
        check = verify_coloring(h, outcome.a, outcome.b)
        if not check.ok:
            raise InternalInvariantError(
                f"emitted coloring fails verification: {check.defect}"
            )
        record = ResultRecord(
            command="2color",
            input_sha256=digest,
            seed=None,
            verdict="colorable",
            witness={"side_a": sorted(outcome.a), "side_b": sorted(outcome.b)},
            trace={},
            wall_time_s=elapsed,
        )
        _emit(
            record,
            [
                "verdict: colorable",
                f"side A: {_ids(sorted(outcome.a))}",
                f"side B: {_ids(sorted(outcome.b))}",
            ],
            args.json,
        )
    elif isinstance(outcome, Infeasible):
        cert = outcome.certificate
        record = ResultRecord(
            command="2color",
            input_sha256=digest,
            seed=None,
            verdict="infeasible",
            witness={
                "certificate_kind": cert.kind,
                "certificate_edge": cert.edge,
                "certificate_vertex": cert.vertex,
            },
            trace={},
            wall_time_s=elapsed,
        )
        parts = [f"certificate: {cert.kind}"]
        if cert.edge is not None:
            parts.append(f"edge index {cert.edge}")
        if cert.vertex is not None:
            parts.append(f"vertex {cert.vertex}")
        _emit(record, ["verdict: infeasible", ", ".join(parts)], args.json)
    else:
        assert isinstance(outcome, PreconditionViolated)
        path = list(outcome.p7_witness) if outcome.p7_witness else None
        record = ResultRecord(
            command="2color",
            input_sha256=digest,
            seed=None,
            verdict="precondition-violated",
            witness={"incidence_path": path},
            trace={},
            wall_time_s=elapsed,
        )
        lines = ["verdict: precondition-violated"]
        if path:
            lines.append(
                f"induced 7-vertex path in the incidence graph: {_ids(path)}"
            )
        else:
            lines.append("instance too large to certify the violation")
        _emit(record, lines, args.json)
    return 0


def _cmd_check_theorem1(args) -> int:
    g = load_graph(args.graph)
    digest = _digest(args.graph)
    start = time.perf_counter()
    report = check_minimum_cds_structure(g, cap=args.cap)
    elapsed = time.perf_counter() - start
    witness: dict = {}
    if report.counterexample is not None:
        ce = report.counterexample
        witness = {
            "vertices": sorted(ce.vertices),
            "cds": sorted(ce.cds) if ce.cds is not None else None,
        }
    record = ResultRecord(
        command="check-theorem1",
        input_sha256=digest,
        seed=None,
        verdict="pass" if report.passed else "fail",
        witness=witness,
        trace={},
        wall_time_s=elapsed,
    )
    lines = [f"verdict: {record.verdict}"]
    if witness:
        lines.append(f"counterexample CDS: {_ids(witness['cds'] or [])}")
    _emit(record, lines, args.json)
    return 0


def _cmd_check_char(args) -> int:
    g = load_graph(args.graph)
    digest = _digest(args.graph)
    start = time.perf_counter()
    report = check_cds_characterization(g, args.k, cap=args.cap)
    elapsed = time.perf_counter() - start
    witness = {}
    if report.counterexample is not None:
        witness = {"subset": sorted(report.counterexample.vertices)}
    record = ResultRecord(
        command="check-char",
        input_sha256=digest,
        seed=None,
        verdict="pass" if report.passed else "fail",
        witness=witness,
        trace={},
        wall_time_s=elapsed,
    )
    lines = [f"verdict: {record.verdict} (k={args.k})"]
    if witness:
        lines.append(f"offending connected subgraph: {_ids(witness['subset'])}")
    _emit(record, lines, args.json)
    return 0


def _cmd_gen(args) -> int:
    params = {}
    for name in ("n", "nv", "k", "maxsize"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    if args.p is not None:
        params["p"] = args.p
    instance = generate(args.kind, params, args.seed)
    if isinstance(instance, Graph):
        text = render_graph(instance)
    else:
        text = render_hypergraph(instance)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.json:
        print(
            json.dumps(
                {
                    "command": "gen",
                    "kind": args.kind,
                    "params": params,
                    "seed": args.seed,
                    "sha256": hashlib.sha256(text.encode()).hexdigest(),
                    "text": text,
                },
                indent=2,
                sort_keys=True,
            )
        )
    elif not args.out:
        sys.stdout.write(text)
    return 0


def _cmd_corpus(args) -> int:
    report = run_suite(args.suite, workers=args.workers)
    if args.json:
        print(json.dumps(asdict(report), indent=2, sort_keys=True))
    else:
        for line in report.lines():
            print(line)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathbound",
        description=(
            "Connected dominating sets with bounded induced-path structure, "
            "and hypergraph 2-coloring through incidence-path constraints."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cds", help="run the weight-guided CDS construction")
    p.add_argument("graph", help="graph file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cds)

    p = sub.add_parser("min-k", help="smallest k such that no induced k-vertex path exists")
    p.add_argument("graph", help="graph file")
    p.add_argument("--cap", type=int, default=20, help="largest n the search accepts")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_min_k)

    p = sub.add_parser("2color", help="2-color a hypergraph with path-bounded incidence")
    p.add_argument("hypergraph", help="hypergraph file")
    p.add_argument(
        "--verify-p7",
        action="store_true",
        help="check the incidence precondition exhaustively before solving",
    )
    p.add_argument(
        "--permissive",
        action="store_true",
        help="accept empty hyperedge lines (immediately infeasible)",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_2color)

    p = sub.add_parser(
        "check-theorem1",
        help="verify minimum-CDS structure exhaustively on a small graph",
    )
    p.add_argument("graph", help="graph file")
    p.add_argument("--cap", type=int, default=16)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check_theorem1)

    p = sub.add_parser(
        "check-char",
        help="verify the connected-subgraph CDS characterization for one k",
    )
    p.add_argument("graph", help="graph file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check_char)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("kind", choices=("path", "cycle", "star", "gnp", "hyper"))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--nv", type=int)
    p.add_argument("--k", type=int, dest="k")
    p.add_argument("--maxsize", type=int)
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("corpus", help="run one acceptance suite by name")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; the contract reserves 2 for
        # internal invariant breaches, so usage problems map to 1.
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInvariantError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 2
    except (GraphError, HypergraphError, CapExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
