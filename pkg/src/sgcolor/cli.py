"""Command-line front end ``sgc``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import transform as tr
from .coloring import (
    ColoringError,
    KDColoring,
    RColoring,
    format_coloring,
    parse_coloring,
    verify_kd,
    verify_r,
)
from .families import circuit, k_star, random_signed
from .sgraph import GraphError, ParseError, format_graph, parse_graph
from .solve import _chi_with_witness, chi_c, chi_pm, report
from .sweep import COLUMNS, SweepFailure, run_sweep, write_csv, write_failure

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2

SWEEP_HELP = f"""\
Writes one CSV row per random instance, columns:
  {", ".join(COLUMNS)}
Ratios are printed reduced as num/den; booleans as true/false. Instance i
uses seed S+i. The sweep stops at the first failed check and writes the
offending graph to <out>.fail.sg (sweep.fail.sg when writing to stdout).
"""


def _ratio_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _read_graph(path: str):
    return parse_graph(Path(path).read_text(), source=path)


def _read_coloring(path: str):
    return parse_coloring(Path(path).read_text(), source=path)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_chi(args) -> int:
    g = _read_graph(args.graph)
    value, witness = _chi_with_witness(g)
    print(f"{value} (witness k={witness.k} d={witness.d})")
    if args.coloring_out:
        Path(args.coloring_out).write_text(format_coloring(witness))
    return EXIT_OK


def cmd_chic(args) -> int:
    g = _read_graph(args.graph)
    res = chi_c(g)
    print(f"{_ratio_text(res.value)} (witness k={res.witness_k} d={res.witness_d})")
    if args.coloring_out:
        Path(args.coloring_out).write_text(format_coloring(res.witness))
    return EXIT_OK


def cmd_chipm(args) -> int:
    print(chi_pm(_read_graph(args.graph)))
    return EXIT_OK


def cmd_report(args) -> int:
    rep = report(_read_graph(args.graph))
    print(json.dumps(rep.to_dict(), indent=2))
    return EXIT_OK if rep.all_ok else EXIT_INVALID


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    c = _read_coloring(args.coloring)
    bad = verify_kd(g, c) if isinstance(c, KDColoring) else verify_r(g, c)
    if not bad:
        print("valid")
        return EXIT_OK
    for v in bad:
        u, w, s = v.edge
        print(f"violation: edge {u} {w} {'+' if s > 0 else '-'}: distance {v.distance} < {v.bound}")
    return EXIT_INVALID


def _need(value, flag: str):
    if value is None:
        raise tr.TransformError(f"this transform needs {flag}")
    return value


def cmd_transform(args) -> int:
    g = _read_graph(args.graph)
    c = _read_coloring(args.coloring)
    name = args.name
    if name == "r2kd":
        if not isinstance(c, RColoring):
            raise tr.TransformError("r2kd expects an r-coloring")
        out = tr.r_to_kd(g, c)
    else:
        if not isinstance(c, KDColoring):
            raise tr.TransformError(f"{name} expects a (k,d)-coloring")
        if name == "scale":
            out = tr.scale(g, c, _need(args.t, "--t"))
        elif name == "extend":
            out = tr.extend(g, c, _need(args.k, "--k"))
        elif name == "reduce-t":
            t = _need(args.t, "--t")
            if c.k % t or c.d % t:
                raise tr.TransformError(f"({c.k},{c.d}) is not a multiple of t={t}")
            out = tr.reduce_t(g, c, c.k // t, c.d // t, t)
        elif name == "update":
            out = tr.update_steps(g, c, _need(args.x0, "--x0"), args.steps)
        elif name == "halve":
            out = tr.halve(g, c)
        elif name == "descend":
            out = tr.descend(g, c)
        elif name == "retarget":
            out = tr.retarget(g, c, _need(args.k, "--k"), _need(args.d, "--d"))
        else:  # kd2r
            out = tr.kd_to_r(g, c)
    _emit(format_coloring(out), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "circuit":
        neg = [int(x) for x in args.neg.split(",") if x] if args.neg else []
        g = circuit(args.n, neg)
    elif args.family == "kstar":
        sizes = [int(x) for x in args.sizes.split(",")] if args.sizes else [2] * args.n
        g = k_star(args.n, sizes, args.group)
    else:
        g = random_signed(args.n, args.p, args.q, args.seed)
    _emit(format_graph(g), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    rows = run_sweep(
        args.n, args.count, args.seed, args.min_n, args.p, args.q, args.switchings, args.jobs
    )
    fail_path = Path(args.out + ".fail.sg" if args.out else "sweep.fail.sg")
    try:
        if args.out:
            with open(args.out, "w", newline="") as fh:
                write_csv(rows, fh)
        else:
            write_csv(rows, sys.stdout)
    except SweepFailure as exc:
        write_failure(exc, fail_path)
        print(f"sweep aborted: {exc}; graph written to {fail_path}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sgc", description="Circular colorings of signed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, text in (
        ("chi", cmd_chi, "chromatic number (least k with a (k,1)-coloring)"),
        ("chic", cmd_chic, "circular chromatic number with a (k,d) witness"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("graph")
        p.add_argument("--coloring-out", help="write the witness coloring here")
        p.set_defaults(func=func)

    p = sub.add_parser("chipm", help="signed-color chromatic number chi_pm")
    p.add_argument("graph")
    p.set_defaults(func=cmd_chipm)

    p = sub.add_parser("report", help="all invariants and relation checks as JSON")
    p.add_argument("graph")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="check a coloring certificate (exit 1 if invalid)")
    p.add_argument("--coloring", required=True)
    p.add_argument("graph")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="apply a constructive coloring transform")
    p.add_argument(
        "name",
        choices=["scale", "extend", "reduce-t", "update", "halve", "descend", "retarget", "kd2r", "r2kd"],
    )
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--t", type=int, help="factor for scale / reduce-t")
    p.add_argument("--k", type=int, help="target k for extend / retarget")
    p.add_argument("--d", type=int, help="target d for retarget")
    p.add_argument("--x0", type=int, help="start color for update")
    p.add_argument("--steps", type=int, default=1, help="number of update steps")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("gen", help="emit a graph from a named family")
    p.add_argument("family", choices=["circuit", "kstar", "random"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--neg", help="circuit: comma-separated negative edge indices")
    p.add_argument("--sizes", help="kstar: comma-separated group sizes (default all 2)")
    p.add_argument("--group", choices=["path", "clique"], default="path")
    p.add_argument("--p", type=float, default=0.5, help="random: edge probability")
    p.add_argument("--q", type=float, default=0.5, help="random: negative-edge probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser(
        "sweep",
        help="random instances -> CSV of invariants and relation checks",
        description=SWEEP_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--n", type=int, required=True, help="vertex count (maximum with --min-n)")
    p.add_argument("--min-n", type=int, help="cycle vertex counts through min-n..n")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--q", type=float, default=0.5)
    p.add_argument("--switchings", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (tr.TransformError, GraphError, ColoringError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
