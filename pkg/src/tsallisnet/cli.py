"""Command-line interface.

Exit codes: 0 success, 2 unreadable or malformed input, 3 graph without
edges, 4 entropy domain error (e.g. q < 0 with isolated nodes), 5 invalid
q range, 6 invalid generator parameters.  Results go to standard output,
diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .entropy import network_tsallis_entropy, sweep
from .errors import (
    DomainError,
    GraphError,
    InvalidParamsError,
    InvalidRangeError,
    ParseError,
    TsallisNetError,
    ZeroTotalDegreeError,
)
from .generators import example_network, gen_barabasi_albert, gen_erdos_renyi
from .io import (
    format_number,
    read_graph,
    write_edge_list,
    write_pajek,
    write_sweep_csv,
    write_sweep_json,
)

EXIT_PARSE = 2
EXIT_NO_EDGES = 3
EXIT_DOMAIN = 4
EXIT_RANGE = 5
EXIT_GENERATOR = 6

MAX_WARNINGS_SHOWN = 20


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, (ParseError, GraphError, OSError)):
        return EXIT_PARSE
    if isinstance(exc, ZeroTotalDegreeError):
        return EXIT_NO_EDGES
    if isinstance(exc, DomainError):
        return EXIT_DOMAIN
    if isinstance(exc, InvalidRangeError):
        return EXIT_RANGE
    if isinstance(exc, InvalidParamsError):
        return EXIT_GENERATOR
    return 1


def _load(args):
    report = read_graph(args.input, args.input_format)
    shown = report.warnings[:MAX_WARNINGS_SHOWN]
    for w in shown:
        print(f"warning: {w}", file=sys.stderr)
    if len(report.warnings) > len(shown):
        print(f"warning: ... {len(report.warnings) - len(shown)} more", file=sys.stderr)
    return report.graph


def _input_id(args) -> str:
    return "<stdin>" if args.input == "-" else str(args.input)


def cmd_info(args) -> int:
    g = _load(args)
    deg = g.degrees
    print(
        f"nodes: {g.number_of_nodes()}, edges: {g.number_of_edges()}, "
        f"total degree: {sum(deg)}"
    )
    print(f"degree: min {min(deg)}, max {max(deg)}, mean {sum(deg) / len(deg):.6f}")
    return 0


def cmd_entropy(args) -> int:
    g = _load(args)
    point = network_tsallis_entropy(g, args.q, args.k)
    if args.format == "table":
        print(f"{point.value:.6f}")
    elif args.format == "csv":
        sys.stdout.write(f"q,entropy\n{format_number(point.q)},{format_number(point.value)}\n")
    else:
        doc = {"input": _input_id(args), "q": point.q, "k": point.k, "entropy": point.value}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def _sweep_table(result, name: str) -> str:
    header = ["q"] + [format_number(p.q) for p in result.points]
    row = [name] + [f"{p.value:.6f}" for p in result.points]
    widths = [max(len(a), len(b)) for a, b in zip(header, row)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip() for cells in (header, row)]
    return "\n".join(lines) + "\n"


def cmd_sweep(args) -> int:
    g = _load(args)
    result = sweep(g, args.q_min, args.q_max, args.q_step, args.k, source=_input_id(args))
    if args.format == "csv":
        sys.stdout.write(write_sweep_csv(result))
    elif args.format == "json":
        sys.stdout.write(write_sweep_json(result))
    else:
        name = Path(args.input).stem if args.input != "-" else "<stdin>"
        sys.stdout.write(_sweep_table(result, name))
    return 0


def cmd_gen(args) -> int:
    if args.model == "example":
        g = example_network()
    elif args.model == "er":
        g = gen_erdos_renyi(_required(args, "n"), _required(args, "p"), args.seed)
    else:
        g = gen_barabasi_albert(_required(args, "n"), _required(args, "m"), args.seed)
    as_pajek = args.output is not None and args.output.lower().endswith(".net")
    text = write_pajek(g) if as_pajek else write_edge_list(g)
    if args.output is None or args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    return 0


def _required(args, name):
    value = getattr(args, name)
    if value is None:
        raise InvalidParamsError(f"model {args.model!r} needs --{name}")
    return value


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(
        prog="tsallisnet",
        description="Tsallis and Shannon degree entropy of complex networks.",
        formatter_class=fmt,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", help="graph file (.net = Pajek, else edge list); '-' for stdin")
        p.add_argument(
            "--input-format",
            choices=["edgelist", "pajek"],
            default=None,
            help="override the format inferred from the file extension",
        )

    p = sub.add_parser("info", help="node/edge counts and degree summary", formatter_class=fmt)
    graph_input(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("entropy", help="Tsallis entropy at one q", formatter_class=fmt)
    graph_input(p)
    p.add_argument("--q", type=float, required=True, help="entropic index")
    p.add_argument("--k", type=float, default=1.0, help="entropy constant")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("sweep", help="entropy over a q grid", formatter_class=fmt)
    graph_input(p)
    p.add_argument("--q-min", type=float, default=0.0)
    p.add_argument("--q-max", type=float, default=5.0)
    p.add_argument("--q-step", type=float, default=0.1)
    p.add_argument("--k", type=float, default=1.0, help="entropy constant")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="write a generated graph", formatter_class=fmt)
    p.add_argument("model", choices=["example", "er", "ba"])
    p.add_argument("--n", type=int, help="node count (er, ba)")
    p.add_argument("--p", type=float, help="edge probability (er)")
    p.add_argument("--m", type=int, help="edges per new node (ba)")
    p.add_argument("--seed", type=int, default=0, help="random seed, 0 <= seed < 2**64")
    p.add_argument("-o", "--output", help="output file (.net = Pajek, else edge list); default stdout")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TsallisNetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
