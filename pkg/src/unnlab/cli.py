"""Command-line front end: ``unnlab <subcommand> ...``.

Exit status is 0 on success, 1 on domain or I/O errors, 2 on usage errors.
``-`` stands for stdin/stdout wherever a file is expected.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import constructions as C
from .experiments import (
    ExperimentConfig,
    format_table1,
    rows_to_csv,
    run_unn_experiment,
    table1_json,
    table1_report,
)
from .graph import PREDICATES, check_unn
from .io import bipartite_header, format_edge_list, parse_edge_list, parse_signing, to_dot
from .spectral import cheeger_exact, spectral_report

FAMILIES = {
    # family: positional parameter names
    "complete": ("n",),
    "cycle": ("n",),
    "complete-bipartite": ("a", "b"),
    "empty": ("n",),
    "twin-cycle": ("m",),
    "random-bipartite": ("n", "m", "p", "seed"),
}


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _emit_graph(args, g, n1=None) -> None:
    _write(args.output, to_dot(g) if args.dot else format_edge_list(g, n1))


def _pair(token: str) -> tuple[int, int]:
    for sep in ("x", ":"):
        if sep in token:
            a, b = token.split(sep, 1)
            try:
                return int(a), int(b)
            except ValueError:
                break
    raise argparse.ArgumentTypeError(f"size {token!r} is not of the form NxM")


def cmd_check(args) -> int:
    g = parse_edge_list(_read(args.file))
    rep = check_unn(g)
    order = [args.predicate] + [p for p in PREDICATES if p != args.predicate]
    for pred in order:
        if rep.holds(pred):
            print(f"UNN: yes ({pred})")
        else:
            u, v = rep.witness(pred)
            rel = "=" if pred == "distinct" else "is a subset of"
            print(f"UNN: no ({pred}); witness {u} {v}: nb({u}) {rel} nb({v})")
    return 0


def cmd_cheeger(args) -> int:
    g = parse_edge_list(_read(args.file))
    rep = spectral_report(g) if args.spectral else cheeger_exact(g)
    print(rep.to_json() if args.json else rep.to_text(), end="\n" if args.json else "")
    return 0


def _num(token: str, kind):
    try:
        return kind(token)
    except ValueError:
        raise UsageError(f"parameter {token!r} is not a valid {kind.__name__}") from None


def cmd_generate(args) -> int:
    names = FAMILIES[args.family]
    params = args.params
    if args.family == "random-bipartite" and len(params) == 3:
        params = params + ["0"]
    if len(params) != len(names):
        raise UsageError(f"{args.family} takes parameters: {' '.join(names)}")
    if args.family == "random-bipartite":
        n, m, seed = _num(params[0], int), _num(params[1], int), _num(params[3], int)
        bg = C.random_bipartite(n, m, _num(params[2], float), seed)
        _emit_graph(args, bg.to_graph(), bg.n1)
        return 0
    ints = [_num(p, int) for p in params]
    build = {
        "complete": C.complete_graph,
        "cycle": C.cycle_graph,
        "complete-bipartite": C.complete_bipartite,
        "empty": C.empty_graph,
        "twin-cycle": C.twin_cycle,
    }[args.family]
    n1 = ints[0] if args.family == "complete-bipartite" else None
    _emit_graph(args, build(*ints), n1)
    return 0


def cmd_lift(args) -> int:
    base = parse_edge_list(_read(args.file))
    if args.signs.startswith("random:"):
        signing = C.random_signing(base, _num(args.signs.split(":", 1)[1], int))
    else:
        signing = C.Signing(base, parse_signing(_read(args.signs), base))
    _emit_graph(args, C.two_lift(signing))
    return 0


def cmd_break(args) -> int:
    g = parse_edge_list(_read(args.file))
    _emit_graph(args, C.break_unn(g, args.x, args.y))
    return 0


def cmd_experiment(args) -> int:
    sizes = [s for group in args.sizes for s in group]
    cfg = ExperimentConfig(tuple(sizes), args.p, args.trials, args.seed, args.predicate)
    _write(args.csv, rows_to_csv(run_unn_experiment(cfg)))
    return 0


def cmd_table1(args) -> int:
    rows = table1_report(args.eps)
    print(table1_json(rows, args.eps) if args.json else format_table1(rows, args.eps), end="\n" if args.json else "")
    return 0


def _sizes(text: str) -> list[tuple[int, int]]:
    return [_pair(tok) for tok in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unnlab", description="Unique-neighbourhood and Cheeger-constant tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_out(p):
        p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
        p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of an edge list")

    p = sub.add_parser("check", help="decide the UNN property")
    p.add_argument("file")
    p.add_argument("--predicate", choices=PREDICATES, default="distinct")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cheeger", help="exact Cheeger constant or spectral bounds")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exhaustive search (default)")
    mode.add_argument("--spectral", action="store_true", help="normalized-Laplacian bounds")
    p.add_argument("--json", action="store_true", help="structured record instead of key=value lines")
    p.set_defaults(func=cmd_cheeger)

    p = sub.add_parser("generate", help="emit a graph family member")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*")
    graph_out(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("lift", help="2-lift under a signing")
    p.add_argument("file")
    p.add_argument("--signs", required=True, help="signing file, or random:<seed>")
    graph_out(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("break-unn", help="give two non-adjacent nodes the same neighbourhood")
    p.add_argument("file")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    graph_out(p)
    p.set_defaults(func=cmd_break)

    p = sub.add_parser("experiment", help="Monte Carlo P(UNN) for random bipartite graphs")
    p.add_argument("--sizes", type=_sizes, nargs="+", required=True, help="e.g. 4x4,8x8,16x16")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--predicate", choices=PREDICATES, default="distinct")
    p.add_argument("--csv", default="-", help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("table1", help="one verified graph per cell of the UNN vs Cheeger table")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"unnlab: error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"unnlab: file not found: {exc.filename}", file=sys.stderr)
        return 1
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"unnlab: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
