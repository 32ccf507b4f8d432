"""Independent oracles and graph samplers shared by the suite.

Nothing here calls into the matrix or bitmask code paths of unnlab; the
oracles work on plain Python sets and itertools enumeration.
"""
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from unnlab import Graph


def nb_sets(g):
    nbrs = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def naive_unn(g):
    """(distinct, antichain) via quadratic set comparison."""
    nbrs = nb_sets(g)
    distinct = all(nbrs[u] != nbrs[v] for u, v in combinations(range(g.n), 2))
    antichain = all(not nbrs[u] <= nbrs[v] for u in range(g.n) for v in range(g.n) if u != v)
    return distinct, antichain


def naive_boundary(g, s):
    return sum((u in s) != (v in s) for u, v in g.edges)


def brute_cheeger(g):
    """Minimum |dS|/|S| with the size-then-lex tie break, by itertools."""
    best = None
    for k in range(1, g.n // 2 + 1):
        for s in combinations(range(g.n), k):
            r = Fraction(naive_boundary(g, set(s)), k)
            if best is None or r < best[0]:
                best = (r, frozenset(s))
    return best


def brute_conductance(g):
    deg = [len(x) for x in nb_sets(g)]
    total = sum(deg)
    best = None
    for k in range(1, g.n):
        for s in combinations(range(g.n), k):
            vol = sum(deg[v] for v in s)
            r = Fraction(naive_boundary(g, set(s)), min(vol, total - vol))
            if best is None or r < best:
                best = r
    return best


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def random_graph(rng, n, p):
    a = np.triu(rng.random((n, n)) < p, 1)
    return Graph.from_adjacency((a | a.T).astype(np.int64))


def random_connected(rng, n, p_lo=0.25, p_hi=0.8):
    while True:
        g = random_graph(rng, n, rng.uniform(p_lo, p_hi))
        if n == 1 or g.is_connected():
            return g


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
