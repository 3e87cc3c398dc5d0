"""Command-line front end.

Exit codes: 0 computed, 2 input error, 3 acceptance failure (table mismatch or
audit counterexample), 4 size limit, 1 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import oracle as O
from .audit import AuditConfig, run_audit
from .errors import DisconnectedError, InvalidParameter, NoConvergence, ParseError, QDError, SizeLimitError
from .expr import parse_expr
from .graph import Graph
from .graph6 import emit_graph6, iter_graph6_lines, parse_graph6
from .report import build_report, dumps
from .spectral import DEFAULT_TOL
from .tables import TABLE_TOL, reproduce_table
from .theorems import THRESHOLD_TOL, check

EXIT_OK, EXIT_NUMERIC, EXIT_INPUT, EXIT_ACCEPTANCE, EXIT_SIZE = 0, 1, 2, 3, 4

PROPS = ("ham-cycle", "ham-path", "ham-path-between", "ham-connected", "traceable-all")


def read_edge_list(path: str) -> Graph:
    with open(path) as fh:
        lines = [ln.split() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 1:
        raise ParseError("edge list must start with a line holding n", 0)
    n = int(lines[0][0])
    edges = []
    for k, parts in enumerate(lines[1:], 2):
        if len(parts) != 2:
            raise ParseError(f"line {k}: expected 'u v'", k)
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def load_graph(args) -> tuple[Graph, dict]:
    if args.expr is not None:
        return parse_expr(args.expr), {"expr": args.expr}
    if args.g6 is not None:
        return parse_graph6(args.g6), {"g6": args.g6}
    if args.edges is not None:
        return read_edge_list(args.edges), {"edges": args.edges}
    raise InvalidParameter("one of --expr, --g6, --edges is required")


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--expr", help="graph expression, e.g. 'join(kn(4), e(4))'")
    src.add_argument("--g6", help="graph6 string")
    src.add_argument("--edges", help="edge-list file: n on the first line, then 'u v' pairs")


def _emit(obj, pretty: bool) -> None:
    print(dumps(obj, indent=2 if pretty else None))


def cmd_compute(args) -> int:
    g, source = load_graph(args)
    if args.emit_g6:
        print(emit_graph6(g))
        return EXIT_OK
    report = build_report(g, source, args.theorem or (), tol=args.tol, include_matrices=args.matrices)
    _emit(report, args.pretty)
    return EXIT_OK


def cmd_check(args) -> int:
    g, source = load_graph(args)
    verdict = check(args.theorem, g, THRESHOLD_TOL, args.tol)
    _emit({"input": source, **verdict.to_dict()}, args.pretty)
    return EXIT_OK


def run_oracle(prop: str, g: Graph, u: Optional[int], v: Optional[int], limit: Optional[int]) -> O.OracleAnswer:
    kw = {} if limit is None else {"limit": limit}
    if prop == "ham-cycle":
        return O.has_hamilton_cycle(g, **kw)
    if prop == "ham-path":
        return O.has_hamilton_path(g, **kw)
    if prop == "ham-path-between":
        if u is None or v is None:
            raise InvalidParameter("ham-path-between needs --u and --v")
        return O.has_hamilton_path_between(g, u, v, **kw)
    if prop == "ham-connected":
        return O.is_hamilton_connected(g, **kw)
    if prop == "traceable-all":
        return O.is_traceable_from_every_vertex(g, **kw)
    raise InvalidParameter(f"unknown property {prop!r}")


def cmd_oracle(args) -> int:
    g, source = load_graph(args)
    ans = run_oracle(args.prop, g, args.u, args.v, args.limit_n)
    _emit(
        {
            "input": source,
            "property": args.prop,
            "holds": ans.holds,
            "witness": list(ans.witness) if ans.witness else None,
            "failing": list(ans.failing) if ans.failing else None,
        },
        args.pretty,
    )
    return EXIT_OK


def cmd_tables(args) -> int:
    tables = [args.table] if args.table else [1, 2]
    rows = [r for t in tables for r in reproduce_table(t, args.tol)]
    flagged = [r for r in rows if not r.ok]
    if args.pretty:
        print(f"{'tbl':>3} {'graph':<16} {'n':>3} {'rho (ours)':>12} {'rho printed':>12} "
              f"{'|diff|':>9} {'threshold':>10} {'printed':>8}  status")
        for r in rows:
            status = "ok" if r.ok else "MISMATCH"
            print(f"{r.table:>3} {r.member:<16} {r.n:>3} {r.rho:>12.6f} {r.printed_rho:>12.4f} "
                  f"{r.delta:>9.2e} {float(r.threshold):>10.4f} {r.printed_threshold:>8}  {status}")
        if flagged:
            print(f"{len(flagged)} row(s) outside tolerance {TABLE_TOL}: "
                  + ", ".join(f"table {r.table} {r.member}" for r in flagged))
    else:
        _emit(
            {
                "tolerance": TABLE_TOL,
                "rows": [
                    {
                        "table": r.table,
                        "graph": r.member,
                        "expr": r.expr,
                        "n": r.n,
                        "rho": r.rho,
                        "printed_rho": r.printed_rho,
                        "abs_diff": r.delta,
                        "threshold": r.threshold,
                        "threshold_exact": f"{r.threshold.numerator}/{r.threshold.denominator}",
                        "printed_threshold": r.printed_threshold,
                        "threshold_ok": r.threshold_ok,
                        "rho_exceeds_threshold": r.exceeds_threshold,
                        "ok": r.ok,
                    }
                    for r in rows
                ],
                "flagged": [{"table": r.table, "graph": r.member} for r in flagged],
            },
            False,
        )
    return EXIT_ACCEPTANCE if flagged else EXIT_OK


def cmd_audit(args) -> int:
    config = AuditConfig(
        theorems=tuple(args.theorem or (3, 6, 8, 10)),
        limit_n=args.limit_n if args.limit_n is not None else 16,
        eig_tol=args.tol,
        workers=args.workers,
    )
    fh = sys.stdin if args.corpus == "-" else open(args.corpus)
    try:
        summary = run_audit(iter_graph6_lines(fh), config)
    finally:
        if fh is not sys.stdin:
            fh.close()
    for ce in summary.counterexamples:
        ce["report"] = build_report(parse_graph6(ce["g6"]), {"g6": ce["g6"]}, config.theorems, tol=args.tol)
    _emit(summary.to_dict(), args.pretty)
    # timing stays off stdout so repeated runs emit identical JSON
    print(f"audited {summary.scanned} graphs in {summary.wall_time:.2f}s", file=sys.stderr)
    if summary.partial:
        return EXIT_INPUT
    return EXIT_ACCEPTANCE if summary.counterexamples else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qdham", description="Distance signless Laplacian spectra and Hamiltonicity checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigensolver residual tolerance")
        p.add_argument("--pretty", action="store_true", help="indented / tabular output")

    p = sub.add_parser("compute", help="spectral report for one graph")
    _add_input(p)
    common(p)
    p.add_argument("-t", "--theorem", type=int, choices=(3, 6, 8, 10), action="append")
    p.add_argument("--emit-g6", action="store_true", help="print the graph6 encoding instead")
    p.add_argument("--matrices", action="store_true", help="include distance and Q_D matrices")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="evaluate one theorem's condition")
    _add_input(p)
    common(p)
    p.add_argument("-t", "--theorem", type=int, choices=(3, 6, 8, 10), required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exact Hamiltonicity query")
    _add_input(p)
    common(p)
    p.add_argument("--prop", choices=PROPS, required=True)
    p.add_argument("--u", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--limit-n", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("tables", help="recompute the two exception-family tables")
    common(p)
    p.add_argument("--table", type=int, choices=(1, 2))
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("audit", help="audit theorem verdicts against the oracle over a graph6 corpus")
    common(p)
    p.add_argument("--corpus", required=True, help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("-t", "--theorem", type=int, choices=(3, 6, 8, 10), action="append")
    p.add_argument("--limit-n", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_audit)
    return ap


def _error(kind: str, exc: Exception) -> None:
    print(dumps({"error": {"type": kind, "message": str(exc)}}))


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        _error("size-limit", exc)
        return EXIT_SIZE
    except NoConvergence as exc:
        _error("no-convergence", exc)
        return EXIT_NUMERIC
    except (ParseError, InvalidParameter, DisconnectedError, QDError, OSError, ValueError) as exc:
        _error(type(exc).__name__, exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
