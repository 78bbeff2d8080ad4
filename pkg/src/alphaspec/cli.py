"""Command-line entry point.

Exit codes: 0 success, 1 spectral mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .closed_forms import PredictionError, multipartite_graph, named_graph
from .graph import GraphError, build_basic, read_edge_list, write_edge_list
from .groups import GroupError, parse_group_spec, power_graph
from .spectra import DEFAULT_TOL, SpectrumError, spectrum_of
from .verify import ALPHA_GRID, SUITES, VerifyError, format_report, run_cases, suite_cases, summarize

BASIC = ("complete", "empty", "cycle", "path", "star")
NAMED_ARITY = {"wheel": 1, "friendship": 1, "firefly": 2, "cone": 2, "complete_bipartite": 2,
               "complete_split": 2}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"malformed {what} {text!r}") from None


def parse_graph(text: str):
    """Constructor string ``name:params`` or a path to an edge-list file."""
    name, sep, args = text.partition(":")
    if sep and (name in BASIC or name in NAMED_ARITY or name == "multipartite"):
        params = _ints(args, "graph parameters")
        if name in BASIC:
            if len(params) != 1:
                raise UsageError(f"{name} takes one parameter")
            return build_basic(name, params[0])
        if name == "multipartite":
            return multipartite_graph(params)
        if len(params) != NAMED_ARITY[name]:
            raise UsageError(f"{name} takes {NAMED_ARITY[name]} parameter(s)")
        return named_graph(name, *params)
    if not os.path.isfile(text):
        raise UsageError(f"not a constructor string or readable file: {text!r}")
    try:
        with open(text, encoding="utf-8") as fh:
            return read_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {text}: {exc.strerror}") from None


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _values_json(values) -> str:
    return "[" + ", ".join(_num(v) for v in values) + "]"


def _spectrum_text(values, fmt: str, header: dict) -> str:
    if fmt == "csv":
        return "eigenvalue\n" + "".join(_num(v) + "\n" for v in values)
    fields = [f'"{k}": {v}' for k, v in header.items()]
    fields.append(f'"eigenvalues": {_values_json(values)}')
    return "{" + ", ".join(fields) + "}\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from None


def _check_common(args) -> None:
    if not 0.0 <= args.alpha <= 1.0:
        raise UsageError(f"alpha must lie in [0, 1], got {args.alpha}")
    if not args.tol > 0:
        raise UsageError(f"tolerance must be positive, got {args.tol}")


def cmd_spectrum(args) -> int:
    g = parse_graph(args.graph)
    s = spectrum_of(g, args.alpha)
    _emit(_spectrum_text(s.values, args.format, {"n": g.n, "alpha": _num(args.alpha)}), args.out)
    return 0


def cmd_powergraph(args) -> int:
    res = power_graph(parse_group_spec(args.group))
    g = res.graph
    s = spectrum_of(g, args.alpha)
    if args.edges_out:
        _emit(write_edge_list(g), args.edges_out)
    header = {"group": f'"{args.group}"', "n": g.n, "alpha": _num(args.alpha),
              "universal": "[" + ", ".join(map(str, sorted(res.universal))) + "]",
              "edges": "[" + ", ".join(f"[{u}, {v}]" for u, v in g.edges()) + "]"}
    _emit(_spectrum_text(s.values, args.format, header), args.out)
    return 0


# verify --family: how the parameters map onto a suite case
_SINGLE = ("power_cyclic", "dihedral", "dicyclic", "friendship", "wheel", "joined_union_random")
_PAIR = ("elementary_abelian", "nonabelian_pq", "firefly", "complete_bipartite", "complete_split",
         "cone")


def _family_param(args):
    fam = args.family
    if fam in _SINGLE:
        if args.n is None:
            raise UsageError(f"--family {fam} needs --n")
        return args.n
    if fam in _PAIR or fam == "complete_multipartite":
        if args.params is None:
            raise UsageError(f"--family {fam} needs --params")
        params = tuple(_ints(args.params, "--params"))
        if fam in _PAIR and len(params) != 2:
            raise UsageError(f"--family {fam} takes two parameters")
        return params
    raise UsageError(f"unknown family {fam!r}")


def cmd_verify(args) -> int:
    case = suite_cases(args.family, [_family_param(args)], seed=args.seed)
    reports = run_cases(case, [args.alpha], args.tol)
    _emit(format_report(reports, args.format), args.out)
    return 0 if all(r.matched for r in reports) else 1


def cmd_sweep(args) -> int:
    names = args.suite or list(SUITES)
    alphas = ALPHA_GRID if args.alphas is None else [float(a) for a in args.alphas.split(",") if a]
    if any(not 0.0 <= a <= 1.0 for a in alphas):
        raise UsageError("every alpha must lie in [0, 1]")
    reports = []
    for name in names:
        reports += run_cases(suite_cases(name, seed=args.seed), alphas, args.tol, args.workers)
    _emit(format_report(reports, args.format), args.out)
    s = summarize(reports)
    print(f"{s['matched']}/{s['total']} matched", file=sys.stderr)
    return 0 if s["failed"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--alpha", type=float, default=0.5)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--seed", type=int, default=0)

    p = _Parser(prog="alphaspec", description="A_alpha spectra of graphs and power graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sp = sub.add_parser("spectrum", parents=[common], help="eigenvalues of A_alpha(G)")
    sp.add_argument("--graph", required=True, help='constructor like "wheel:7" or edge-list path')
    sp.set_defaults(func=cmd_spectrum)
    pg = sub.add_parser("powergraph", parents=[common], help="power graph of a group")
    pg.add_argument("--group", required=True, help='e.g. "cyclic:6", "dicyclic:8", "elemabelian:3,2"')
    pg.add_argument("--edges-out", default=None, help="also write the edge list here")
    pg.set_defaults(func=cmd_powergraph)
    vp = sub.add_parser("verify", parents=[common], help="check one closed form")
    vp.add_argument("--family", required=True, choices=sorted(SUITES))
    vp.add_argument("--n", type=int, default=None)
    vp.add_argument("--params", default=None, help="comma-separated parameters")
    vp.set_defaults(func=cmd_verify)
    sw = sub.add_parser("sweep", parents=[common], help="run verification suites")
    sw.add_argument("--suite", action="append", choices=sorted(SUITES))
    sw.add_argument("--alphas", default=None, help="comma-separated alpha grid")
    sw.add_argument("--workers", type=int, default=1)
    sw.set_defaults(func=cmd_sweep)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _check_common(args)
        return args.func(args)
    except (UsageError, GraphError, GroupError, PredictionError, SpectrumError, VerifyError) as exc:
        print(f"alphaspec: error: {exc}", file=sys.stderr)
        return 2


run_cli = main
