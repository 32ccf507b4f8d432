"""Simple undirected graphs and the unique-neighbourhood predicates."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

__all__ = [
    "Graph",
    "UnnReport",
    "neighborhood",
    "b_matrix",
    "check_unn",
    "degree_sequence",
    "PREDICATES",
]

PREDICATES = ("distinct", "antichain")

Edge = tuple[int, int]


def _normalize_edge(u, v, n) -> Edge:
    u, v = int(u), int(v)
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"edge ({u}, {v}) has a node outside 0..{n - 1}")
    if u == v:
        raise ValueError(f"self-loop at node {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes ``0..n-1``.

    ``edges`` holds each edge once as ``(min, max)``. Instances are immutable;
    the cached adjacency matrix is returned read-only.
    """

    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError("node count must be nonnegative")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(_normalize_edge(u, v, n) for u, v in edges))

    @classmethod
    def from_adjacency(cls, adj) -> Graph:
        adj = np.asarray(adj)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(adj)):
            raise ValueError("adjacency matrix has a nonzero diagonal")
        us, vs = np.nonzero(np.triu(adj, 1))
        return cls(adj.shape[0], zip(us.tolist(), vs.tolist()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        if self.edges:
            e = np.array(sorted(self.edges), dtype=np.int64)
            a[e[:, 0], e[:, 1]] = 1
            a[e[:, 1], e[:, 0]] = 1
        a.setflags(write=False)
        return a

    @cached_property
    def _neighbors(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Neighbour lists as ``(indptr, indices)`` with sorted rows."""
        deg = np.array([len(s) for s in self._neighbors], dtype=np.int64)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.fromiter(
            (w for s in self._neighbors for w in sorted(s)), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return Graph(self.n, list(self.edges) + list(edges))

    def add_nodes(self, k: int = 1) -> Graph:
        return Graph(self.n + k, self.edges)

    def relabel(self, perm) -> Graph:
        """Graph with node ``v`` renamed to ``perm[v]``."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self._neighbors[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def _check_node(g: Graph, v) -> int:
    v = int(v)
    if not 0 <= v < g.n:
        raise ValueError(f"node {v} out of range 0..{g.n - 1}")
    return v


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Open neighbourhood of ``v`` (``v`` itself is never included)."""
    return g._neighbors[_check_node(g, v)]


def degree_sequence(g: Graph) -> list[int]:
    return [len(s) for s in g._neighbors]


def b_matrix(g: Graph) -> np.ndarray:
    """Integer matrix with ``B[i, j] = |nb(i) \\ nb(j)|``.

    Computed as ``A @ (1 - A)`` in int64, so ``B[i, j] == 0`` exactly when
    ``nb(i)`` is a subset of ``nb(j)``.
    """
    a = g.adjacency
    return a @ (1 - a)


@dataclass(frozen=True)
class UnnReport:
    """Verdicts for both readings of the unique-neighbourhood property.

    ``distinct_witness`` is the lexicographically smallest pair ``u < v`` with
    ``nb(u) == nb(v)``; ``antichain_witness`` the smallest ordered pair
    ``u != v`` with ``nb(u) <= nb(v)``. Each is ``None`` iff its verdict holds.
    """

    is_unn_distinct: bool
    is_unn_antichain: bool
    distinct_witness: Optional[Edge] = None
    antichain_witness: Optional[Edge] = None

    def holds(self, predicate: str = "distinct") -> bool:
        if predicate == "distinct":
            return self.is_unn_distinct
        if predicate == "antichain":
            return self.is_unn_antichain
        raise ValueError(f"unknown predicate {predicate!r}; expected one of {PREDICATES}")

    def witness(self, predicate: str = "distinct") -> Optional[Edge]:
        self.holds(predicate)
        return self.distinct_witness if predicate == "distinct" else self.antichain_witness


def check_unn(g: Graph) -> UnnReport:
    if g.n < 2:
        return UnnReport(True, True)
    contained = b_matrix(g) == 0
    np.fill_diagonal(contained, False)
    equal = np.triu(contained & contained.T)

    pairs = np.argwhere(equal)
    distinct_witness = tuple(int(x) for x in pairs[0]) if len(pairs) else None
    pairs = np.argwhere(contained)
    antichain_witness = tuple(int(x) for x in pairs[0]) if len(pairs) else None
    return UnnReport(
        is_unn_distinct=distinct_witness is None,
        is_unn_antichain=antichain_witness is None,
        distinct_witness=distinct_witness,
        antichain_witness=antichain_witness,
    )
