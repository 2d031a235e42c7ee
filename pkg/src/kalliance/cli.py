"""Command-line interface: ``kalliance <subcommand> [options]``.

Exit codes: 0 success, 1 property violation (``check``), 2 usage or input
error, 3 resource limit (solver refusal, eigensolver non-convergence).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds, graph_core, properties, solver, spectral
from .alliance import is_defensive_k_alliance

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--graph", metavar="PATH", help="edge-list file")
    src.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. hypercube:3 or gnp:10,0.3,seed=7")


def _add_k(p: argparse.ArgumentParser) -> None:
    ks = p.add_mutually_exclusive_group()
    ks.add_argument("--k", type=int)
    ks.add_argument("--k-range", metavar="LO:HI", help="inclusive range of k")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--limit", type=int, default=solver.DEFAULT_LIMIT, help="solver vertex limit")
    common.add_argument("--tol", type=float, default=spectral.DEFAULT_TOL, help="eigensolver tolerance")

    parser = argparse.ArgumentParser(prog="kalliance", description="Defensive k-alliances in simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="minimum defensive k-alliance")
    _add_source(p)
    _add_k(p)
    p.add_argument("--witness", action="store_true", help="show the witness set")

    p = sub.add_parser("verify", parents=[common], help="check a vertex set")
    _add_source(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--set", required=True, metavar="CSV", help="comma-separated vertices, or a file of them")

    p = sub.add_parser("bounds", parents=[common], help="all bounds at k")
    _add_source(p)
    _add_k(p)
    p.add_argument("--exact", action="store_true", help="include exact values")

    p = sub.add_parser("profile", parents=[common], help="a_k for every k")
    _add_source(p)

    p = sub.add_parser("linegraph", parents=[common], help="emit the line graph")
    _add_source(p)

    p = sub.add_parser("mu", parents=[common], help="algebraic connectivity")
    _add_source(p)

    p = sub.add_parser("gen", parents=[common], help="emit a generated graph")
    p.add_argument("--gen", metavar="SPEC", required=True)

    p = sub.add_parser("check", parents=[common], help="property suite over a corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", action="store_true", help="all connected graphs on <= 6 vertices")
    src.add_argument("--graph", metavar="PATH", help="edge-list file or directory of them")
    return parser


def load_graph(args: argparse.Namespace) -> graph_core.Graph:
    if args.gen:
        return graph_core.from_spec(args.gen)
    return graph_core.parse_edge_list(Path(args.graph).read_text())


def k_values(args: argparse.Namespace, g: graph_core.Graph) -> list[int]:
    if args.k is not None:
        ks = [args.k]
    elif args.k_range:
        lo, sep, hi = args.k_range.partition(":")
        try:
            ks = list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise UsageError(f"bad --k-range {args.k_range!r}, expected LO:HI") from None
        if not sep or not ks:
            raise UsageError(f"bad --k-range {args.k_range!r}, expected LO:HI with LO <= HI")
    else:
        raise UsageError("one of --k or --k-range is required")
    top = g.max_degree
    bad = [k for k in ks if not -top <= k <= top]
    if bad:
        raise UsageError(f"k={bad[0]} outside -max_degree..max_degree = {-top}..{top}")
    return ks


def parse_set(raw: str) -> list[int]:
    if os.path.isfile(raw):
        raw = Path(raw).read_text()
    tokens = raw.replace(",", " ").split()
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"bad vertex set {raw!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _solve_line(res: solver.SolveResult, witness: bool) -> str:
    val = "none" if res.value is None else str(res.value)
    line = f"k={res.k:>3}  a_k={val:>4}  status={res.status}  nodes={res.nodes_explored}"
    if witness and res.witness is not None:
        line += f"  witness={sorted(res.witness)}"
    return line


def cmd_solve(args, g) -> tuple[int, str]:
    results = [solver.min_alliance(g, k, args.limit) for k in k_values(args, g)]
    if args.format == "json":
        payload = results[0].to_dict() if args.k is not None else [r.to_dict() for r in results]
        return EXIT_OK, _dump(payload)
    return EXIT_OK, "\n".join(_solve_line(r, args.witness) for r in results)


def cmd_verify(args, g) -> tuple[int, str]:
    top = g.max_degree
    if not -top <= args.k <= top:
        raise UsageError(f"k={args.k} outside {-top}..{top}")
    cert = is_defensive_k_alliance(g, parse_set(args.set), args.k)
    if args.format == "json":
        return EXIT_OK, _dump(cert.to_dict())
    lines = [f"set={sorted(cert.members)} k={cert.k} satisfied={str(cert.satisfied).lower()}"]
    lines += [f"  v={v:<3} margin={m:+d}" for v, m in sorted(cert.margins.items())]
    return EXIT_OK, "\n".join(lines)


def cmd_bounds(args, g) -> tuple[int, str]:
    reps = [bounds.report(g, k, with_exact=args.exact, line_exact=args.exact,
                          tolerance=args.tol, limit=args.limit) for k in k_values(args, g)]
    if args.format == "json":
        payload = reps[0].to_dict() if args.k is not None else [r.to_dict() for r in reps]
        return EXIT_OK, _dump(payload)
    return EXIT_OK, "\n".join(r.human() for r in reps)


def cmd_profile(args, g) -> tuple[int, str]:
    try:
        results = solver.profile(g, args.limit)
        monotone = True
    except AssertionError:
        results = [solver.min_alliance(g, k, args.limit) for k in range(-g.min_degree, g.max_degree + 1)]
        monotone = False
    code = EXIT_OK if monotone else EXIT_VIOLATION
    if args.format == "json":
        return code, _dump({"results": [r.to_dict() for r in results], "monotone": monotone})
    lines = [_solve_line(r, witness=True) for r in results]
    lines.append(f"monotone in k: {'yes' if monotone else 'NO'}")
    return code, "\n".join(lines)


def cmd_linegraph(args, g) -> tuple[int, str]:
    lg = graph_core.line_graph(g)
    if args.format == "json":
        payload = {"n": lg.line.n, "edges": [list(e) for e in lg.line.edges],
                   "edge_of": [list(e) for e in lg.edge_of]}
        return EXIT_OK, _dump(payload)
    head = [f"# line vertex {i} = base edge {u} {v}" for i, (u, v) in enumerate(lg.edge_of)]
    return EXIT_OK, "\n".join(head) + "\n" + graph_core.serialize(lg.line).rstrip("\n")


def cmd_mu(args, g) -> tuple[int, str]:
    info = spectral.algebraic_connectivity(g, args.tol)
    return EXIT_OK, json.dumps(info.to_dict())


def cmd_gen(args, g) -> tuple[int, str]:
    if args.format == "json":
        return EXIT_OK, _dump({"n": g.n, "edges": [list(e) for e in g.edges]})
    return EXIT_OK, graph_core.serialize(g).rstrip("\n")


def _corpus(args) -> list[graph_core.Graph]:
    if args.builtin:
        return list(properties.builtin_corpus())
    path = Path(args.graph)
    files = sorted(p for p in path.iterdir() if p.is_file()) if path.is_dir() else [path]
    return [graph_core.parse_edge_list(p.read_text()) for p in files]


def cmd_check(args, _g) -> tuple[int, str]:
    outcomes = properties.run_checks(_corpus(args), args.limit, args.tol)
    code = EXIT_OK if all(o.passed for o in outcomes) else EXIT_VIOLATION
    if args.format == "json":
        payload = [{"name": o.name, "instances": o.instances, "passed": o.passed,
                    "violations": o.violations} for o in outcomes]
        return code, _dump({"properties": payload})
    lines = []
    for o in outcomes:
        if o.passed:
            lines.append(f"PASS {o.name} ({o.instances} graphs)")
        else:
            lines.append(f"FAIL {o.name}: {len(o.violations)} violations")
            lines.extend(f"    {v}" for v in o.violations[:5])
    return code, "\n".join(lines)


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "profile": cmd_profile,
    "linegraph": cmd_linegraph,
    "mu": cmd_mu,
    "gen": cmd_gen,
    "check": cmd_check,
}


def _glue_ranges(argv: list[str]) -> list[str]:
    # argparse reads "-4:0" as an option; bind it to --k-range explicitly
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--k-range":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_ranges(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        g = None if args.command == "check" else load_graph(args)
        code, text = COMMANDS[args.command](args, g)
    except (solver.SearchLimitError, spectral.ConvergenceError) as exc:
        print(f"kalliance: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, ValueError, OSError) as exc:
        print(f"kalliance: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
