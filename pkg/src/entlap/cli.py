"""Command-line front end.

Subcommands: validate, classify, laplacian, graph, sweep, corpus.
Exit codes: 0 success, 1 parse error, 2 validation error, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import corpus as corpus_mod
from .criteria import DecisionTolerance, classify, cor6_ppt, ppt_oracle, thm3_separability, thm5_ppt, thm6_ppt
from .errors import ParameterOutOfDomain, StateValidationError, UnknownState
from .laplacian import laplacian_of_density
from .matrixfile import ParseError, emit, parse
from .states import DensityMatrix, purity_report, validate
from .wgraph import export_dot, graph_from_laplacian, is_connected, max_w

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is 3."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def _round12(x: float) -> float:
    return float(f"{float(x):.12g}")


def _load_state(args, tol: float = 1e-9) -> tuple[DensityMatrix, str]:
    if getattr(args, "state", None):
        try:
            rho = corpus_mod.build(args.state, args.param)
        except UnknownState as exc:
            raise CliError(EXIT_USAGE, str(exc)) from None
        except ParameterOutOfDomain as exc:
            raise CliError(EXIT_VALIDATION, str(exc)) from None
        label = args.state if args.param is None else f"{args.state}({args.param})"
        return rho, label
    if getattr(args, "file", None):
        try:
            text = open(args.file, encoding="utf-8").read()
        except OSError as exc:
            raise CliError(EXIT_USAGE, str(exc)) from None
        try:
            parsed = parse(text)
        except ParseError as exc:
            raise CliError(EXIT_PARSE, str(exc)) from None
        try:
            rho = validate(parsed.array, parsed.dims, tol=tol, exact=parsed.exact)
        except StateValidationError as exc:
            raise CliError(EXIT_VALIDATION, str(exc)) from None
        return rho, args.file
    raise CliError(EXIT_USAGE, "provide a matrix file or --state NAME")


def _add_state_args(p: argparse.ArgumentParser, file_optional: bool = True):
    p.add_argument("file", nargs="?" if file_optional else None, help="matrix file")
    p.add_argument("--state", help="corpus state name")
    p.add_argument("--param", type=float, help="corpus state parameter")


def cmd_validate(args) -> int:
    try:
        text = open(args.file, encoding="utf-8").read()
    except OSError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    try:
        parsed = parse(text)
    except ParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    try:
        rho = validate(parsed.array, parsed.dims, tol=args.tol, exact=parsed.exact)
    except StateValidationError as exc:
        for v in exc.violations:
            print(str(v))
        return EXIT_VALIDATION
    report = purity_report(rho)
    print(f"VALID dims {rho.dims.d1}x{rho.dims.d2} purity {_fmt(report.purity)} "
          f"linear_entropy {_fmt(report.linear_entropy)} rank {report.rank}")
    return EXIT_OK


def _report_to_dict(report) -> dict:
    return {
        "state_id": report.state_id,
        "dims": {"d1": report.dims.d1, "d2": report.dims.d2},
        "oracle": {
            "verdict": report.oracle_verdict,
            "lambda_min_ptb": _round12(report.oracle_lambda_min_ptb),
        },
        "criteria": [
            {
                "id": r.criterion_id.value,
                "verdict": r.verdict.value,
                "scalars": {k: _round12(v) for k, v in r.scalars.items()},
                "caveat": r.caveat,
            }
            for r in report.results
        ],
        "consistency_flags": [c.value for c in report.consistency_flags],
    }


def cmd_classify(args) -> int:
    rho, label = _load_state(args)
    report = classify(rho, DecisionTolerance(args.eps), state_id=label)
    if args.json:
        print(json.dumps(_report_to_dict(report), indent=2))
        return EXIT_OK
    print(f"state: {label} ({rho.dims.d1}x{rho.dims.d2})")
    print(f"oracle: {report.oracle_verdict} lambda_min(rho^TB) = {_fmt(report.oracle_lambda_min_ptb)}")
    for r in report.results:
        scalars = " ".join(f"{k}={_fmt(v)}" for k, v in r.scalars.items())
        line = f"{r.criterion_id.value:<18} {r.verdict.value:<20} {scalars}"
        if r.caveat:
            line += f"  [{r.caveat}]"
        print(line)
    if report.consistency_flags:
        print("consistency_flags: " + " ".join(c.value for c in report.consistency_flags))
    return EXIT_OK


def cmd_laplacian(args) -> int:
    rho, label = _load_state(args)
    lap = laplacian_of_density(rho)
    text = emit(lap.array, rho.dims, exact=lap.exact, header_comment=f"laplacian of {label}")
    if args.out:
        open(args.out, "w", encoding="utf-8").write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_graph(args) -> int:
    rho, label = _load_state(args)
    lap = laplacian_of_density(rho)
    graph = graph_from_laplacian(lap, edge_threshold=args.edge_threshold)
    dot = export_dot(graph)
    if args.dot:
        open(args.dot, "w", encoding="utf-8").write(dot)
    else:
        sys.stdout.write(dot)
    conn = "connected" if is_connected(graph) else "disconnected"
    print(f"vertices {graph.vertex_count} edges {graph.edge_count()} {conn}")
    print(f"total_degree {_fmt(lap.total_degree())}")
    if graph.edges:
        print(f"max_w {_fmt(float(max_w(graph)))}")
    else:
        print("max_w undefined (no edges)")
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        entry = corpus_mod.get_entry(args.state)
    except UnknownState as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    if entry.parameter_name is None:
        raise CliError(EXIT_USAGE, f"state {args.state!r} is not parameterized")
    if args.param_name != entry.parameter_name:
        raise CliError(EXIT_USAGE,
                       f"state {args.state!r} has parameter {entry.parameter_name!r}, not {args.param_name!r}")
    if args.steps < 2:
        raise CliError(EXIT_USAGE, "steps must be >= 2")
    if not args.start < args.stop:
        raise CliError(EXIT_USAGE, "--from must be < --to")
    tol = DecisionTolerance(args.eps)
    rows = []
    for k in range(args.steps):
        value = args.start + k * (args.stop - args.start) / (args.steps - 1)
        try:
            rho = corpus_mod.build(args.state, value)
        except ParameterOutOfDomain as exc:
            raise CliError(EXIT_VALIDATION, str(exc)) from None
        lam_min_rho = float(rho.eigenvalues()[0])
        oracle_verdict, lam_ptb = ppt_oracle(rho, tol)
        graph = graph_from_laplacian(laplacian_of_density(rho))
        half = _fmt(float(max_w(graph)) / 2.0) if graph.edges else ""
        rows.append([
            _fmt(value), _fmt(lam_min_rho), _fmt(lam_ptb), half,
            oracle_verdict,
            thm3_separability(rho, tol).verdict.value,
            thm5_ppt(rho, tol).verdict.value,
            thm6_ppt(rho, tol).verdict.value,
            cor6_ppt(rho, tol).verdict.value,
        ])
    header = "param,lambda_min_rho,lambda_min_ptb,half_max_w,oracle,thm3,thm5,thm6,cor6"
    text = header + "\n" + "\n".join(",".join(row) for row in rows) + "\n"
    if args.csv:
        open(args.csv, "w", encoding="utf-8").write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.action == "list":
        for entry in corpus_mod.list_entries():
            domain = ""
            if entry.parameter_name is not None:
                lo, hi = entry.parameter_domain
                domain = f" {entry.parameter_name} in [{lo}, {hi}]"
            print(f"{entry.name:<8} {entry.dims.d1}x{entry.dims.d2}{domain}  {entry.description}")
        return EXIT_OK
    # emit
    if not args.name:
        raise CliError(EXIT_USAGE, "corpus emit requires a state name")
    try:
        rho = corpus_mod.build(args.name, args.param)
    except UnknownState as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    except ParameterOutOfDomain as exc:
        raise CliError(EXIT_VALIDATION, str(exc)) from None
    text = emit(rho, header_comment=f"corpus state {args.name}")
    if args.out:
        open(args.out, "w", encoding="utf-8").write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="entlap",
                     description="Entanglement detection via density-matrix Laplacians and graph spectra")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="validate a matrix file as a density matrix")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="run the oracle and every criterion")
    _add_state_args(p)
    p.add_argument("--json", action="store_true", help="JSON report (default: text table)")
    p.add_argument("--text", action="store_true", help="force text output")
    p.add_argument("--eps", type=float, default=1e-9, help="indeterminate band half-width")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("laplacian", help="emit the Laplacian of a state in matrix-file format")
    _add_state_args(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_laplacian)

    p = sub.add_parser("graph", help="export the coherence graph as DOT and print its stats")
    _add_state_args(p)
    p.add_argument("--dot", help="DOT output path (default stdout)")
    p.add_argument("--edge-threshold", type=float, default=1e-12)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("sweep", help="evaluate criteria over a parameter grid, CSV output")
    p.add_argument("--state", required=True)
    p.add_argument("--param-name", required=True)
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--csv", help="CSV output path (default stdout)")
    p.add_argument("--eps", type=float, default=1e-9)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("corpus", help="list built-in states or emit one as a matrix file")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("--param", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except StateValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
