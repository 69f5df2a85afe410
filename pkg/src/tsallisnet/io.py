"""Reading graphs from edge-list / Pajek text and writing sweep results.

Parsers take text (``str`` or UTF-8 ``bytes``) and return a
:class:`ParseReport`; file access is left to :func:`read_graph`.
Malformed input always surfaces as a :class:`~tsallisnet.errors.ParseError`
subclass carrying the line number, or as ``SelfLoopError`` /
``EmptyGraphError``.
"""

from __future__ import annotations

import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .entropy import EntropyPoint, SweepResult, SweepSource
from .errors import (
    MalformedLineError,
    MissingVerticesHeaderError,
    SelfLoopError,
    TsallisNetError,
    VertexIdOutOfRangeError,
)
from .graph import Graph, build_graph

__all__ = [
    "ParseReport",
    "parse_edge_list",
    "parse_pajek",
    "read_graph",
    "write_edge_list",
    "write_pajek",
    "format_number",
    "write_sweep_csv",
    "write_sweep_json",
    "read_sweep_csv",
    "read_sweep_json",
]

# guards against absurd "*Vertices" counts allocating unbounded memory
MAX_PAJEK_VERTICES = 10_000_000


@dataclass
class ParseReport:
    graph: Graph
    warnings: list[str] = field(default_factory=list)
    line_count: int = 0


def _decode(text: str | bytes) -> str:
    if isinstance(text, str):
        return text
    try:
        s = bytes(text).decode("utf-8")
    except UnicodeDecodeError as exc:
        line = bytes(text)[: exc.start].count(b"\n") + 1
        raise MalformedLineError("invalid UTF-8", line) from None
    return s


def _lines(text: str):
    text = text.removeprefix("\ufeff")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [ln.rstrip("\r") for ln in lines]


def _collapse_warnings(pairs, pair_lines, warnings, nodes=()):
    dup_pos: list[int] = []
    g = build_graph(nodes, pairs, duplicates=dup_pos)
    for pos in dup_pos:
        warnings.append(f"line {pair_lines[pos]}: duplicate edge collapsed")
    return g


def parse_edge_list(text: str | bytes) -> ParseReport:
    """Parse whitespace-separated ``u v [weight ...]`` lines.

    Blank lines and lines starting with ``#`` or ``%`` are skipped.  Tokens
    past the second are ignored with a warning.
    """
    lines = _lines(_decode(text))
    warnings: list[str] = []
    pairs, pair_lines = [], []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise MalformedLineError("expected two endpoints", lineno)
        u, v = tokens[0], tokens[1]
        if u == v:
            raise SelfLoopError(u, lineno)
        if len(tokens) > 2:
            warnings.append(f"line {lineno}: weight ignored")
        pairs.append((u, v))
        pair_lines.append(lineno)
    g = _collapse_warnings(pairs, pair_lines, warnings)
    return ParseReport(g, warnings, len(lines))


_VERTEX_RE = re.compile(r'\s*(\S+)(?:\s+(?:"([^"]*)"|([^\s"]\S*)))?')


def _pajek_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedLineError(f"{what} must be an integer, got {token!r}", lineno) from None


def parse_pajek(text: str | bytes) -> ParseReport:
    """Parse the ``*Vertices`` / ``*Edges`` / ``*Arcs`` subset of Pajek.

    Vertex ids are 1-based.  A quoted (or bare) name after the id becomes
    the node label, otherwise the id itself is the label.  Arcs are folded
    into undirected edges.  Declared vertices that no edge touches stay in
    the graph as isolated nodes.
    """
    lines = _lines(_decode(text))
    warnings: list[str] = []
    n: int | None = None
    names: dict[int, str] = {}
    section = None
    id_pairs, pair_lines = [], []
    weighted = 0

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line[0] == "%":
            continue
        if line[0] == "*":
            tokens = line.split()
            head = tokens[0].lower()
            if head == "*vertices":
                if n is not None:
                    raise MalformedLineError("repeated *Vertices header", lineno)
                if len(tokens) < 2:
                    raise MalformedLineError("*Vertices needs a vertex count", lineno)
                n = _pajek_int(tokens[1], lineno, "vertex count")
                if not 0 <= n <= MAX_PAJEK_VERTICES:
                    raise MalformedLineError(f"unsupported vertex count {n}", lineno)
                if len(tokens) > 2:
                    warnings.append(f"line {lineno}: extra *Vertices fields ignored")
                section = "vertices"
            elif head in ("*edges", "*arcs"):
                if n is None:
                    raise MissingVerticesHeaderError(f"{tokens[0]} before *Vertices", lineno)
                if head == "*arcs":
                    warnings.append(f"line {lineno}: arcs treated as undirected edges")
                section = head[1:]
            else:
                raise MalformedLineError(f"unsupported section {tokens[0]!r}", lineno)
            continue

        if section is None:
            raise MissingVerticesHeaderError("data before *Vertices", lineno)

        if section == "vertices":
            if line.count('"') % 2:
                raise MalformedLineError("unterminated quoted label", lineno)
            m = _VERTEX_RE.match(line)
            vid = _pajek_int(m.group(1), lineno, "vertex id")
            if not 1 <= vid <= n:
                raise VertexIdOutOfRangeError(f"vertex id {vid} outside 1..{n}", lineno)
            label = m.group(2) if m.group(2) is not None else m.group(3)
            if vid in names:
                warnings.append(f"line {lineno}: vertex {vid} redeclared, keeping first")
            elif label:
                names[vid] = label
            continue

        tokens = line.split()
        if len(tokens) < 2:
            raise MalformedLineError("expected two endpoints", lineno)
        a = _pajek_int(tokens[0], lineno, "endpoint")
        b = _pajek_int(tokens[1], lineno, "endpoint")
        for vid in (a, b):
            if not 1 <= vid <= n:
                raise VertexIdOutOfRangeError(f"vertex id {vid} outside 1..{n}", lineno)
        if a == b:
            raise SelfLoopError(str(a), lineno)
        if len(tokens) > 2:
            weighted += 1
        id_pairs.append((a, b))
        pair_lines.append(lineno)

    if n is None:
        raise MissingVerticesHeaderError("no *Vertices header")

    labels = [names.get(i, str(i)) for i in range(1, n + 1)]
    if len(set(labels)) != n:
        warnings.append("vertex labels are not unique; using vertex ids as labels")
        labels = [str(i) for i in range(1, n + 1)]
    if weighted:
        warnings.append(f"{weighted} edge weight(s) ignored")
    pairs = [(labels[a - 1], labels[b - 1]) for a, b in id_pairs]
    g = _collapse_warnings(pairs, pair_lines, warnings, nodes=labels)
    return ParseReport(g, warnings, len(lines))


def read_graph(path: str | Path, fmt: str | None = None) -> ParseReport:
    """Read a graph file; ``"-"`` reads standard input.

    ``fmt`` is ``"pajek"`` or ``"edgelist"``; by default ``.net`` files are
    Pajek and everything else is an edge list.
    """
    if str(path) == "-":
        data = sys.stdin.buffer.read()
    else:
        data = Path(path).read_bytes()
    if fmt is None:
        fmt = "pajek" if str(path).lower().endswith(".net") else "edgelist"
    if fmt == "pajek":
        return parse_pajek(data)
    if fmt == "edgelist":
        return parse_edge_list(data)
    raise ValueError(f"unknown graph format {fmt!r}")


# -- graph writers ---------------------------------------------------------

def _check_token(label: str) -> str:
    if not label or any(c.isspace() for c in label) or label[0] in "#%":
        raise TsallisNetError(f"label {label!r} cannot be written as an edge-list token")
    return label


def write_edge_list(g: Graph) -> str:
    """One ``u v`` line per edge.  Isolated nodes cannot be represented."""
    return "".join(f"{_check_token(u)} {_check_token(v)}\n" for u, v in g.edges)


def write_pajek(g: Graph) -> str:
    """Pajek text keeping labels, node order and isolated nodes."""
    out = [f"*Vertices {g.number_of_nodes()}\n"]
    for i, label in enumerate(g.nodes, start=1):
        if '"' in label or "\n" in label or "\r" in label:
            raise TsallisNetError(f"label {label!r} cannot be quoted in Pajek")
        out.append(f'{i} "{label}"\n')
    out.append("*Edges\n")
    for u, v in g.edges:
        out.append(f"{g.index_of(u) + 1} {g.index_of(v) + 1}\n")
    return "".join(out)


# -- sweep writers ---------------------------------------------------------

def format_number(x: float) -> str:
    """Shortest round-trip decimal, without a trailing ``.0``."""
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def write_sweep_csv(r: SweepResult) -> str:
    rows = ["q,entropy\n"]
    rows.extend(f"{format_number(p.q)},{format_number(p.value)}\n" for p in r.points)
    return "".join(rows)


def read_sweep_csv(text: str) -> list[tuple[float, float]]:
    lines = text.split("\n")
    if lines[0] != "q,entropy":
        raise MalformedLineError("expected header 'q,entropy'", 1)
    out = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        try:
            q, v = line.split(",")
            out.append((float(q), float(v)))
        except ValueError:
            raise MalformedLineError("expected 'q,entropy' row", lineno) from None
    return out


def write_sweep_json(r: SweepResult) -> str:
    s = r.source
    doc = {
        "source": {
            "input": s.input_id,
            "nodes": s.nodes,
            "edges": s.edges,
            "q_min": s.q_min,
            "q_max": s.q_max,
            "q_step": s.q_step,
            "k": s.k,
        },
        "points": [{"q": p.q, "entropy": p.value} for p in r.points],
    }
    return json.dumps(doc, indent=2) + "\n"


def read_sweep_json(text: str) -> SweepResult:
    doc = json.loads(text)
    s = doc["source"]
    source = SweepSource(
        input_id=s["input"],
        nodes=int(s["nodes"]),
        edges=int(s["edges"]),
        q_min=float(s["q_min"]),
        q_max=float(s["q_max"]),
        q_step=float(s["q_step"]),
        k=float(s["k"]),
    )
    points = tuple(
        EntropyPoint(float(p["q"]), source.k, float(p["entropy"])) for p in doc["points"]
    )
    return SweepResult(source, points)
