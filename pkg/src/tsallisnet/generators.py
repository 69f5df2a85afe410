"""Test-graph constructors.

Random models draw exclusively from :meth:`random.Random.random` on a
``random.Random(seed)`` instance (Mersenne Twister MT19937).  Python
guarantees that this method reproduces the same stream for the same seed
across versions and platforms, so a ``(params, seed)`` pair always yields
the same graph.  Nodes are labelled ``"1" .. "n"``.
"""

from __future__ import annotations

import math
import random
from collections.abc import Sequence

from .errors import InvalidParamsError, NonGraphicalSequenceError
from .graph import Graph, build_graph

__all__ = [
    "EXAMPLE_DEGREES",
    "erdos_gallai_violation",
    "realize_degree_sequence",
    "example_network",
    "gen_erdos_renyi",
    "gen_barabasi_albert",
]

#: Degree row of the 21-node example network, nodes 1..21.
EXAMPLE_DEGREES = (3, 3, 3, 2, 5, 3, 5, 3, 1, 4, 2, 3, 2, 2, 6, 2, 3, 4, 4, 3, 3)

MAX_SEED = 2**64 - 1


def _labels(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def _check_seed(seed) -> int:
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed <= MAX_SEED:
        raise InvalidParamsError(f"seed must be an integer in [0, 2**64), got {seed!r}")
    return seed


def erdos_gallai_violation(degrees: Sequence[int]) -> int | None:
    """First 1-based index ``k`` where the Erdos-Gallai inequality fails.

    With ``d`` sorted non-increasingly the condition at ``k`` is
    ``sum(d[:k]) <= k*(k-1) + sum(min(x, k) for x in d[k:])``.
    Returns ``None`` when every index passes.  Parity is not checked here.
    """
    d = sorted(degrees, reverse=True)
    n = len(d)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + d[i]
    # p = first position whose degree is below k; it only moves left as k grows
    p = n
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        while p > 0 and d[p - 1] < k:
            p -= 1
        start = max(p, k)
        tail = (start - k) * k + suffix[start]
        if prefix > k * (k - 1) + tail:
            return k
    return None


def realize_degree_sequence(degrees: Sequence[int]) -> Graph:
    """Havel-Hakimi realization of a graphical degree sequence.

    At each step the node with the largest remaining degree (earliest node
    on ties) is joined to the next-largest remaining nodes, again earliest
    first on ties.  Node ``i`` of the result has degree ``degrees[i]``.

    Raises:
        NonGraphicalSequenceError: odd sum, negative entries, or a failed
            Erdos-Gallai inequality (its index is attached).
    """
    d = [int(x) for x in degrees]
    if not d:
        raise InvalidParamsError("degree sequence is empty")
    if any(x < 0 for x in d):
        raise NonGraphicalSequenceError("degree sequence has negative entries")
    if sum(d) % 2:
        raise NonGraphicalSequenceError(f"degree sum {sum(d)} is odd")
    k = erdos_gallai_violation(d)
    if k is not None:
        raise NonGraphicalSequenceError(
            f"Erdos-Gallai inequality fails at k={k}", index=k
        )

    labels = _labels(len(d))
    remaining = d[:]
    order = sorted(range(len(d)), key=lambda i: (-remaining[i], i))
    edges = []
    while order and remaining[order[0]] > 0:
        hub = order[0]
        need = remaining[hub]
        remaining[hub] = 0
        targets = order[1 : need + 1]
        for t in targets:
            remaining[t] -= 1
            edges.append((labels[min(hub, t)], labels[max(hub, t)]))
        order = sorted(order[1:], key=lambda i: (-remaining[i], i))
    return build_graph(labels, edges)


def example_network() -> Graph:
    """Canonical 21-node, 33-edge realization of :data:`EXAMPLE_DEGREES`."""
    return realize_degree_sequence(EXAMPLE_DEGREES)


def gen_erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p): every unordered pair is an edge independently with prob. ``p``.

    Pairs are visited in lexicographic order with geometric skips between
    successes (Batagelj and Brandes), one ``random()`` draw per edge.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidParamsError(f"n must be a positive integer, got {n!r}")
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise InvalidParamsError(f"p must lie in [0, 1], got {p!r}")
    rng = random.Random(_check_seed(seed))
    labels = _labels(n)
    edges = []
    if p == 1.0:
        edges = [(labels[u], labels[v]) for u in range(n) for v in range(u + 1, n)]
    elif p > 0.0:
        log_q = math.log1p(-p)
        # pair index walks the upper triangle row by row: (v, w) with w < v
        v, w = 1, -1
        while v < n:
            r = rng.random()
            w += 1 + int(math.log1p(-r) / log_q)
            while w >= v and v < n:
                w -= v
                v += 1
            if v < n:
                edges.append((labels[w], labels[v]))
    return build_graph(labels, edges)


def gen_barabasi_albert(n: int, m: int, seed: int = 0) -> Graph:
    """Preferential attachment grown from a complete core on ``m + 1`` nodes.

    Each new node links to ``m`` distinct existing nodes, each picked with
    probability proportional to its current degree.
    """
    for name, v in (("n", n), ("m", m)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidParamsError(f"{name} must be an integer, got {v!r}")
    if m < 1 or n <= m:
        raise InvalidParamsError(f"need n > m >= 1, got n={n}, m={m}")
    rng = random.Random(_check_seed(seed))
    labels = _labels(n)
    edges = [(labels[u], labels[v]) for u in range(m + 1) for v in range(u + 1, m + 1)]
    # each node appears once per unit of degree
    stubs = [i for i in range(m + 1) for _ in range(m)]
    for new in range(m + 1, n):
        chosen: list[int] = []
        picked = set()
        while len(chosen) < m:
            t = stubs[int(rng.random() * len(stubs))]
            if t not in picked:
                picked.add(t)
                chosen.append(t)
        for t in chosen:
            edges.append((labels[t], labels[new]))
            stubs.append(t)
        stubs.extend([new] * m)
    return build_graph(labels, edges)
