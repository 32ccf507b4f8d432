"""Graph families, the 2-lift, the twin-creating transform, and the random
bipartite model."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import PreconditionError
from .graph import Graph, neighborhood
from .kernels import bernoulli_stream

__all__ = [
    "complete_graph",
    "cycle_graph",
    "complete_bipartite",
    "empty_graph",
    "twin_cycle",
    "Signing",
    "random_signing",
    "two_lift",
    "break_unn",
    "BipartiteGraph",
    "BipartiteModelParams",
    "random_bipartite",
    "q_value",
]


def _positive(name, value, minimum=1):
    value = int(value)
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def complete_graph(n: int) -> Graph:
    n = _positive("n", n)
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    n = _positive("n", n, 3)
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with sides ``0..a-1`` and ``a..a+b-1``."""
    a, b = _positive("a", a), _positive("b", b)
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def empty_graph(n: int) -> Graph:
    return Graph(_positive("n", n))


def twin_cycle(m: int) -> Graph:
    """Cycle on ``0..m-1`` plus nodes ``m`` and ``m+1``, each joined to 0 and 1.

    The added pair are twins, so the graph is never a UNN, while interior arcs
    of the cycle keep its expansion at most ``4 / m``.
    """
    m = _positive("m", m, 4)
    if m % 2:
        raise ValueError(f"m must be even, got {m}")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(0, m), (1, m), (0, m + 1), (1, m + 1)]
    return Graph(m + 2, edges)


@dataclass(frozen=True)
class Signing:
    """A +1/-1 label on every edge of ``base``."""

    base: Graph
    sign: Mapping[tuple[int, int], int]

    def __post_init__(self):
        norm = {}
        for (u, v), s in self.sign.items():
            key = (min(u, v), max(u, v))
            if key in norm:
                raise ValueError(f"edge {key} signed twice")
            if s not in (1, -1):
                raise ValueError(f"sign of {key} must be +1 or -1, got {s!r}")
            norm[key] = int(s)
        if norm.keys() != self.base.edges:
            extra = norm.keys() - self.base.edges
            missing = self.base.edges - norm.keys()
            raise ValueError(
                f"signing domain must equal the edge set ({len(missing)} missing, {len(extra)} extra)"
            )
        object.__setattr__(self, "sign", norm)

    def __hash__(self):
        return hash((self.base, frozenset(self.sign.items())))

    @classmethod
    def constant(cls, base: Graph, value: int = 1) -> Signing:
        return cls(base, {e: value for e in base.edges})


def random_signing(base: Graph, seed: int) -> Signing:
    """Uniform +/-1 per edge, edges taken in sorted order from one seeded stream."""
    edges = base.sorted_edges()
    plus = bernoulli_stream(seed, len(edges), 0.5)
    return Signing(base, {e: 1 if b else -1 for e, b in zip(edges, plus)})


def two_lift(s: Signing) -> Graph:
    """2-lift: node x becomes x and x + n; +1 edges join equal copies,
    -1 edges cross between copies."""
    n = s.base.n
    edges = []
    for (x, y), sign in s.sign.items():
        if sign == 1:
            edges += [(x, y), (x + n, y + n)]
        else:
            edges += [(x, y + n), (x + n, y)]
    return Graph(2 * n, edges)


def break_unn(g: Graph, x: int, y: int) -> Graph:
    """Give non-adjacent ``x`` and ``y`` the union of their neighbourhoods.

    Adds ``{x, w}`` for ``w in nb(y)`` and ``{y, w}`` for ``w in nb(x)``. Only
    adds edges, so no cut shrinks; degrees at most double.
    """
    nbx, nby = neighborhood(g, x), neighborhood(g, y)
    if x == y:
        raise ValueError("x and y must be distinct")
    if not g.edges:
        raise PreconditionError("graph has no edges")
    if y in nbx:
        raise PreconditionError(f"nodes {x} and {y} are adjacent; their open neighbourhoods cannot be equalised")
    added = [(x, w) for w in nby - nbx] + [(y, w) for w in nbx - nby]
    return g.add_edges(added) if added else g


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with sides ``0..n1-1`` and ``0..n2-1``; ``cross_edges``
    holds ``(i, j)`` pairs, one index per side."""

    n1: int
    n2: int
    cross_edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        edges = frozenset((int(i), int(j)) for i, j in self.cross_edges)
        for i, j in edges:
            if not (0 <= i < self.n1 and 0 <= j < self.n2):
                raise ValueError(f"cross edge ({i}, {j}) out of range")
        object.__setattr__(self, "cross_edges", edges)

    def to_graph(self) -> Graph:
        """Side-2 node ``j`` becomes node ``n1 + j``."""
        return Graph(self.n1 + self.n2, ((i, self.n1 + j) for i, j in self.cross_edges))

    def biadjacency(self) -> np.ndarray:
        b = np.zeros((self.n1, self.n2), dtype=np.int64)
        for i, j in self.cross_edges:
            b[i, j] = 1
        return b


def random_bipartite(n: int, m: int, p: float, seed: int) -> BipartiteGraph:
    """Each of the ``n*m`` cross pairs appears independently with probability p.

    Pair ``(i, j)`` uses draw ``i*m + j`` of the SplitMix64 stream for ``seed``.
    """
    n, m = _positive("n", n), _positive("m", m)
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    hits = bernoulli_stream(seed, n * m, p).reshape(n, m)
    ii, jj = np.nonzero(hits)
    return BipartiteGraph(n, m, frozenset(zip(ii.tolist(), jj.tolist())))


@dataclass(frozen=True)
class BipartiteModelParams:
    n: int
    m: int
    p: float

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("side sizes must be >= 1")
        if not 0 < self.p < 1:
            raise ValueError(f"p must lie in (0, 1), got {self.p}")

    @property
    def q(self) -> float:
        return q_value(self)


def q_value(params: BipartiteModelParams) -> float:
    """``r * (1 - r)`` with ``r = n/(n+m) * m/(n+m) * p``."""
    total = params.n + params.m
    r = params.n / total * params.m / total * params.p
    return r * (1 - r)
