"""Text formats: edge lists, signing files, DOT export.

Edge-list format::

    # comment lines start with '#'
    n 4
    0 1
    1 2

Blank lines are skipped. A duplicated pair, or a pair given in both orders,
is an error. Bipartite graphs carry a ``# bipartite n1=<k>`` comment header.
"""
from __future__ import annotations

import re
from typing import Iterable, Optional

from .graph import Graph

__all__ = [
    "FormatError",
    "parse_edge_list",
    "format_edge_list",
    "bipartite_header",
    "parse_signing",
    "format_signing",
    "to_dot",
]

_BIPARTITE = re.compile(r"^#\s*bipartite\s+n1\s*=\s*(\d+)\s*$")


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise FormatError("missing 'n <node-count>' header") from None
    if len(toks) != 2 or toks[0] != "n":
        raise FormatError(f"line {lineno}: expected 'n <node-count>', got {' '.join(toks)!r}")
    n = _int(toks[1], lineno)
    if n < 0:
        raise FormatError(f"line {lineno}: negative node count")

    seen: set[tuple[int, int]] = set()
    for lineno, toks in lines:
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {' '.join(toks)!r}")
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: node out of range 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at node {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
    return Graph(n, seen)


def bipartite_header(text: str) -> Optional[int]:
    """Value of the ``# bipartite n1=<k>`` header, or None if absent."""
    for raw in text.splitlines():
        m = _BIPARTITE.match(raw.strip())
        if m:
            return int(m.group(1))
    return None


def format_edge_list(g: Graph, n1: Optional[int] = None) -> str:
    lines = []
    if n1 is not None:
        lines.append(f"# bipartite n1={n1}")
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_signing(text: str, base: Graph) -> dict[tuple[int, int], int]:
    """Read ``u v s`` lines; the edge set must match ``base`` exactly."""
    signs: dict[tuple[int, int], int] = {}
    for lineno, toks in _content_lines(text):
        if len(toks) != 3:
            raise FormatError(f"line {lineno}: expected 'u v s', got {' '.join(toks)!r}")
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        s = _int(toks[2], lineno)
        if s not in (1, -1):
            raise FormatError(f"line {lineno}: sign must be +1 or -1")
        key = (min(u, v), max(u, v))
        if key not in base.edges:
            raise FormatError(f"line {lineno}: {key} is not an edge of the base graph")
        if key in signs:
            raise FormatError(f"line {lineno}: duplicate sign for edge {key}")
        signs[key] = s
    missing = base.edges - signs.keys()
    if missing:
        raise FormatError(f"signing misses {len(missing)} edge(s), e.g. {min(missing)}")
    return signs


def format_signing(signs: dict[tuple[int, int], int]) -> str:
    return "".join(f"{u} {v} {s:+d}\n" for (u, v), s in sorted(signs.items()))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
