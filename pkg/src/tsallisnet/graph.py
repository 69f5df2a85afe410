"""Immutable undirected simple graphs.

Only degrees are needed downstream, so the graph keeps a per-node degree
tuple alongside the edge list and offers no neighbour iteration.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence

import numpy as np

from .errors import EmptyGraphError, GraphError, SelfLoopError, UnknownNodeError

__all__ = [
    "Graph",
    "build_graph",
    "degree",
    "degree_sequence",
    "total_degree",
]


class Graph:
    """Undirected simple graph with string-like node labels.

    Nodes keep their first-occurrence order.  Edges are stored once each
    as ``(u, v)`` label pairs with ``u`` earlier than ``v`` in node order,
    listed in the order they were first seen.  Instances are immutable;
    use :func:`build_graph` to construct one.
    """

    __slots__ = ("_nodes", "_index", "_edges", "_degrees")

    def __init__(self, nodes: tuple, edges: tuple, degrees: tuple, index: dict):
        self._nodes = nodes
        self._edges = edges
        self._index = index
        self._degrees = degrees  # set last: marks the instance frozen

    @property
    def nodes(self) -> tuple:
        return self._nodes

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def number_of_nodes(self) -> int:
        return len(self._nodes)

    def number_of_edges(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, node) -> bool:
        return node in self._index

    def index_of(self, node) -> int:
        try:
            return self._index[node]
        except (KeyError, TypeError):
            raise UnknownNodeError(node) from None

    def degree_array(self) -> np.ndarray:
        return np.asarray(self._degrees, dtype=np.int64)

    def edge_set(self) -> frozenset:
        return frozenset(frozenset(e) for e in self._edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nodes == other._nodes and self.edge_set() == other.edge_set()

    def __hash__(self) -> int:
        return hash((self._nodes, self.edge_set()))

    def __setattr__(self, name, value):
        if hasattr(self, "_degrees"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self) -> str:
        return f"Graph(nodes={len(self._nodes)}, edges={len(self._edges)})"


def build_graph(
    node_labels: Iterable[Hashable] = (),
    edge_pairs: Iterable[Sequence[Hashable]] = (),
    *,
    duplicates: list | None = None,
) -> Graph:
    """Build a :class:`Graph` from node labels and endpoint pairs.

    Endpoints missing from ``node_labels`` are appended in order of first
    appearance.  Repeated edges (in either orientation) collapse into one;
    when ``duplicates`` is a list, the position of every collapsed pair in
    ``edge_pairs`` is appended to it.

    Raises:
        SelfLoopError: a pair has identical endpoints.
        EmptyGraphError: no nodes result.
    """
    index: dict = {}
    nodes: list = []
    for label in node_labels:
        _check_label(label)
        if label not in index:
            index[label] = len(nodes)
            nodes.append(label)

    seen: set[tuple[int, int]] = set()
    edges: list = []
    degrees: list[int] = [0] * len(nodes)
    for pos, (u, v) in enumerate(edge_pairs):
        if u == v:
            raise SelfLoopError(u)
        for label in (u, v):
            if label not in index:
                _check_label(label)
                index[label] = len(nodes)
                nodes.append(label)
                degrees.append(0)
        iu, iv = index[u], index[v]
        if iu > iv:
            iu, iv = iv, iu
        if (iu, iv) in seen:
            if duplicates is not None:
                duplicates.append(pos)
            continue
        seen.add((iu, iv))
        edges.append((nodes[iu], nodes[iv]))
        degrees[iu] += 1
        degrees[iv] += 1

    if not nodes:
        raise EmptyGraphError()
    return Graph(tuple(nodes), tuple(edges), tuple(degrees), index)


def _check_label(label) -> None:
    if not isinstance(label, str) or not label:
        raise GraphError(f"node labels must be non-empty strings, got {label!r}")


def degree(g: Graph, node) -> int:
    return g.degrees[g.index_of(node)]


def degree_sequence(g: Graph) -> list[int]:
    """Degrees in node order."""
    return list(g.degrees)


def total_degree(g: Graph) -> int:
    """Sum of all degrees, i.e. twice the edge count."""
    return sum(g.degrees)
