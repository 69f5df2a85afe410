"""Degree-based Shannon and Tsallis entropies of networks.

Every node contributes its normalized degree ``d_i = deg(i) / sum(deg)``
as a probability mass.  The Tsallis entropy of that distribution is

    S_q = k * (1 - sum_i d_i**q) / (q - 1)

which tends to the Shannon (degree structure) entropy ``-k sum d_i ln d_i``
as ``q -> 1``.  Entries with zero mass (isolated nodes) are left out of
every sum; they make ``q < 0`` undefined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DomainError,
    InvalidRangeError,
    NegativeQZeroProbError,
    ZeroTotalDegreeError,
)
from .graph import Graph

__all__ = [
    "SHANNON_TOL",
    "ProbabilityVector",
    "EntropyPoint",
    "SweepSource",
    "SweepResult",
    "normalized_degrees",
    "q_log",
    "shannon_entropy",
    "tsallis_entropy",
    "tsallis_entropy_qlog_form",
    "network_tsallis_entropy",
    "q_grid",
    "sweep",
]

#: ``|q - 1|`` at or below this is evaluated with the Shannon formula.
SHANNON_TOL = 1e-12
SUM_TOL = 1e-12
GRID_TOL = 1e-9


@dataclass(frozen=True)
class ProbabilityVector:
    """Non-negative masses summing to one, kept as a read-only array."""

    probs: np.ndarray

    def __post_init__(self):
        a = np.array(self.probs, dtype=np.float64)
        if a.ndim != 1 or a.size == 0:
            raise DomainError("probability vector must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(a)) or np.any(a < 0):
            raise DomainError("probabilities must be finite and non-negative")
        total = math.fsum(a)
        if abs(total - 1.0) > SUM_TOL:
            raise DomainError(f"probabilities sum to {total!r}, not 1")
        a.setflags(write=False)
        object.__setattr__(self, "probs", a)

    @classmethod
    def from_weights(cls, weights) -> ProbabilityVector:
        w = np.asarray(weights, dtype=np.float64)
        return cls(w / w.sum())

    def __len__(self) -> int:
        return self.probs.size

    def __eq__(self, other):
        if not isinstance(other, ProbabilityVector):
            return NotImplemented
        return np.array_equal(self.probs, other.probs)

    __hash__ = None


@dataclass(frozen=True)
class EntropyPoint:
    q: float
    k: float
    value: float


@dataclass(frozen=True)
class SweepSource:
    input_id: str
    nodes: int
    edges: int
    q_min: float
    q_max: float
    q_step: float
    k: float


@dataclass(frozen=True)
class SweepResult:
    source: SweepSource
    points: tuple[EntropyPoint, ...] = field(default_factory=tuple)

    @property
    def qs(self) -> list[float]:
        return [p.q for p in self.points]

    @property
    def values(self) -> list[float]:
        return [p.value for p in self.points]


# -- probability masses ----------------------------------------------------

def _power_sum(values, weights, q):
    return float(np.dot(weights, np.power(values, q)))


def _plogp_sum(values, weights):
    return float(np.dot(weights, values * np.log(values)))


def _qlog_sum(values, weights, q):
    a = 1.0 - q
    return float(np.dot(weights, values * (np.power(1.0 / values, a) - 1.0) / a))


class _Masses:
    """Nonzero masses with multiplicities, plus whether zeros were dropped."""

    __slots__ = ("values", "weights", "has_zero")

    def __init__(self, values, weights, has_zero):
        self.values = np.ascontiguousarray(values, dtype=np.float64)
        self.weights = np.ascontiguousarray(weights, dtype=np.float64)
        self.has_zero = has_zero


def _vector_masses(p) -> _Masses:
    if not isinstance(p, ProbabilityVector):
        p = ProbabilityVector(p)
    probs = p.probs
    nz = probs > 0
    values = probs[nz]
    return _Masses(values, np.ones(values.size), values.size != probs.size)


def _degree_masses(g: Graph) -> _Masses:
    # Equal degrees give equal masses, so the sums run over the degree
    # histogram; the result depends on the degree multiset alone.
    deg = g.degree_array()
    total = int(deg.sum())
    if total == 0:
        raise ZeroTotalDegreeError()
    counts = np.bincount(deg)
    ks = np.flatnonzero(counts)
    ks = ks[ks > 0]
    return _Masses(ks / total, counts[ks], bool(counts[0]))


def normalized_degrees(g: Graph) -> ProbabilityVector:
    """Per-node degree divided by the total degree, in node order."""
    deg = g.degree_array()
    total = int(deg.sum())
    if total == 0:
        raise ZeroTotalDegreeError()
    return ProbabilityVector(deg / total)


# -- scalar formulas -------------------------------------------------------

def _check_k(k) -> float:
    k = float(k)
    if not math.isfinite(k) or k <= 0:
        raise DomainError(f"k must be a positive finite number, got {k!r}")
    return k


def _check_q(q) -> float:
    q = float(q)
    if not math.isfinite(q):
        raise DomainError(f"q must be finite, got {q!r}")
    return q


def q_log(x: float, q: float) -> float:
    """The q-logarithm ``(x**(1-q) - 1) / (1-q)``; ``ln x`` at ``q = 1``."""
    x = float(x)
    q = _check_q(q)
    if not x > 0:
        raise DomainError(f"q_log needs x > 0, got {x!r}")
    if abs(q - 1.0) <= SHANNON_TOL:
        return math.log(x)
    return (x ** (1.0 - q) - 1.0) / (1.0 - q)


def _shannon(m: _Masses, k: float) -> float:
    return k * (0.0 - _plogp_sum(m.values, m.weights)) + 0.0


def _tsallis(m: _Masses, q: float, k: float) -> float:
    if abs(q - 1.0) <= SHANNON_TOL:
        return _shannon(m, k)
    if q < 0 and m.has_zero:
        raise NegativeQZeroProbError(q)
    s = _power_sum(m.values, m.weights, q)
    return k * ((1.0 - s) / (q - 1.0)) + 0.0


def shannon_entropy(p, k: float = 1.0) -> float:
    """``-k * sum p_i ln p_i``, zero entries contributing nothing."""
    return _shannon(_vector_masses(p), _check_k(k))


def tsallis_entropy(p, q: float, k: float = 1.0) -> float:
    """Closed-form Tsallis entropy ``k (1 - sum p_i**q) / (q - 1)``.

    Falls back to :func:`shannon_entropy` when ``|q - 1| <= SHANNON_TOL``.
    Zero entries are skipped for ``q >= 0``.

    Raises:
        NegativeQZeroProbError: ``q < 0`` and ``p`` has a zero entry.
    """
    return _tsallis(_vector_masses(p), _check_q(q), _check_k(k))


def tsallis_entropy_qlog_form(p, q: float, k: float = 1.0) -> float:
    """Tsallis entropy written as ``k * sum p_i ln_q(1/p_i)``.

    Algebraically identical to :func:`tsallis_entropy`; evaluated term by
    term through the q-logarithm so it can serve as a cross-check.
    """
    q, k = _check_q(q), _check_k(k)
    m = _vector_masses(p)
    if m.has_zero:
        raise DomainError("q-log form needs strictly positive probabilities")
    if abs(q - 1.0) <= SHANNON_TOL:
        return _shannon(m, k)
    return k * _qlog_sum(m.values, m.weights, q) + 0.0


# -- networks --------------------------------------------------------------

def network_tsallis_entropy(g: Graph, q: float, k: float = 1.0) -> EntropyPoint:
    """Tsallis entropy of the normalized degree distribution of ``g``."""
    q, k = _check_q(q), _check_k(k)
    return EntropyPoint(q, k, _tsallis(_degree_masses(g), q, k))


def q_grid(q_min: float, q_max: float, q_step: float) -> list[float]:
    """``q_min + i * q_step`` for every ``i`` that stays within ``q_max``.

    Points are computed from the integer index and rounded to 12 decimals
    so that e.g. ``0.1 * 3`` prints as ``0.3``.
    """
    q_min, q_max, q_step = float(q_min), float(q_max), float(q_step)
    for name, v in (("q_min", q_min), ("q_max", q_max), ("q_step", q_step)):
        if not math.isfinite(v):
            raise InvalidRangeError(f"{name} must be finite, got {v!r}")
    if q_min > q_max:
        raise InvalidRangeError(f"q_min={q_min!r} exceeds q_max={q_max!r}")
    if q_step <= 0:
        raise InvalidRangeError(f"q_step must be positive, got {q_step!r}")
    n = math.floor((q_max - q_min + GRID_TOL) / q_step)
    return [round(q_min + i * q_step, 12) for i in range(n + 1)]


def sweep(
    g: Graph,
    q_min: float = 0.0,
    q_max: float = 5.0,
    q_step: float = 0.1,
    k: float = 1.0,
    *,
    source: str = "<graph>",
) -> SweepResult:
    """Evaluate :func:`network_tsallis_entropy` over an evenly spaced q grid."""
    qs = np.asarray(q_grid(q_min, q_max, q_step))
    k = _check_k(k)
    m = _degree_masses(g)
    if m.has_zero and qs[0] < 0:
        raise NegativeQZeroProbError(float(qs[0]))

    values = np.empty(qs.size)
    near_one = np.abs(qs - 1.0) <= SHANNON_TOL
    if near_one.any():
        values[near_one] = _shannon(m, k)
    rest = ~near_one
    if rest.any():
        # per-q sums keep every point identical to network_tsallis_entropy
        s = np.array([_power_sum(m.values, m.weights, q) for q in qs[rest]])
        values[rest] = k * ((1.0 - s) / (qs[rest] - 1.0)) + 0.0

    meta = SweepSource(
        input_id=str(source),
        nodes=g.number_of_nodes(),
        edges=g.number_of_edges(),
        q_min=float(q_min),
        q_max=float(q_max),
        q_step=float(q_step),
        k=k,
    )
    points = tuple(EntropyPoint(float(q), k, float(v)) for q, v in zip(qs, values))
    return SweepResult(meta, points)
