"""Simple undirected graphs on vertices 0..n-1."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    NegativeIndexError,
    SelfLoopError,
    VertexIndexError,
)


class Graph:
    """Immutable simple graph with sorted adjacency tuples.

    Build one with :meth:`from_edges`; the constructor validates symmetry.
    """

    __slots__ = ("n", "adj", "_edges", "_hash")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0:
            raise NegativeIndexError("vertex count must be non-negative")
        if len(adj) != n:
            raise VertexIndexError(f"adjacency has {len(adj)} rows for n={n}")
        rows = tuple(tuple(sorted(set(r))) for r in adj)
        for v, row in enumerate(rows):
            for u in row:
                if not 0 <= u < n:
                    raise VertexIndexError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise SelfLoopError(f"self-loop at {v}")
                if v not in rows[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)
        object.__setattr__(self, "_edges", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        # pickling (worker processes) goes through the validating constructor
        return (Graph, (self.n, self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u < 0 or v < 0:
                raise NegativeIndexError(f"negative vertex in edge ({u}, {v})")
            if u >= n or v >= n:
                raise VertexIndexError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at {u}")
            if v in adj[u]:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges (u, v) with u < v, sorted."""
        if self._edges is None:
            e = tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)
            object.__setattr__(self, "_edges", e)
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise VertexIndexError(f"vertex {v!r} not in 0..{self.n - 1}")

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def add_edges(self, edges: Iterable[tuple[int, int]], new_vertices: int = 0) -> "Graph":
        return Graph.from_edges(self.n + new_vertices, list(self.edges) + list(edges))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph relabelled in increasing vertex order, with the old->new map."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(keep), edges), index

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.adj)))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return min(bfs_distances(g, 0)) >= 0


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph on {g.n} vertices is not connected")


def distance_matrix(g: Graph) -> list[list[int]]:
    require_connected(g)
    return [bfs_distances(g, v) for v in range(g.n)]


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g`` minus ``removed``, each sorted."""
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


# small named graphs used across tests and suites

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
