"""graph6 and plain edge-list interchange.

Only the one-byte size header is supported, so graphs have at most 62
vertices. Edge bits are the upper triangle in column order:
(0,1), (0,2), (1,2), (0,3), ...
"""

from __future__ import annotations

import re
from typing import Iterator

from .errors import (
    DuplicateEdgeError,
    EdgeListSyntaxError,
    Graph6CharacterError,
    Graph6HeaderError,
    Graph6LengthError,
    NegativeIndexError,
    SelfLoopError,
    UnsupportedSizeError,
)
from .graph import Graph

MAX_GRAPH6_N = 62
_HEADER = ">>graph6<<"


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    codes = [ord(c) for c in s]
    for pos, c in enumerate(codes):
        if not 63 <= c <= 126:
            raise Graph6CharacterError(f"character {s[pos]!r} at position {pos} outside '?'..'~'")
    n = codes[0] - 63
    if n == 63:
        raise Graph6HeaderError("extended size header ('~') is not supported (n > 62)")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = codes[1:]
    if len(body) < nbytes:
        raise Graph6LengthError(f"bit field truncated: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6LengthError(f"bit field too long: need {nbytes} bytes, got {len(body)}")
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6LengthError("non-zero padding bits")
    edges = [p for p, b in zip(_pairs(n), bits) if b]
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_N:
        raise UnsupportedSizeError(f"graph6 emission supports n <= {MAX_GRAPH6_N}, got {n}")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _pairs(n)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


_INT = re.compile(r"^-?\d+$")


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (0-based), optionally preceded by ``n <count>``.

    Blank lines and ``#`` comments are ignored.
    """
    declared = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if first and parts[0] == "n":
            first = False
            if len(parts) != 2 or not _INT.match(parts[1]) or int(parts[1]) < 0:
                raise EdgeListSyntaxError(f"line {lineno}: bad vertex-count line {raw!r}")
            declared = int(parts[1])
            continue
        first = False
        if len(parts) != 2 or not all(_INT.match(p) for p in parts):
            raise EdgeListSyntaxError(f"line {lineno}: expected two integers, got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u < 0 or v < 0:
            raise NegativeIndexError(f"line {lineno}: negative vertex index")
        if u == v:
            raise SelfLoopError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    top = max((v for e in edges for v in e), default=-1) + 1
    if declared is None:
        n = top
    elif declared < top:
        raise EdgeListSyntaxError(f"declared n={declared} but edges use vertex {top - 1}")
    else:
        n = declared
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph6_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (line number, graph6 string) for non-blank lines of a corpus file."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s:
            yield lineno, s
