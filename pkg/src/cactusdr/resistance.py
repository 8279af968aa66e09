"""Exact effective resistances from the graph Laplacian.

Two exact routes are provided and kept independent: per-pair determinant
ratios (matrix-tree theorem) and an all-pairs grounded-Laplacian inverse.
A floating-point spectral Kirchhoff estimate is available as a sanity check
only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DisconnectedGraphError, SingularMatrixError
from .exact import RationalMatrix, determinant_exact, format_rational, inverse_exact
from .graph import Graph, require_connected


@dataclass(frozen=True)
class ResistanceMatrix:
    n: int
    values: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> Fraction:
        u, v = uv
        return self.values[u][v]

    def row_sum(self, v: int) -> Fraction:
        return sum(self.values[v], Fraction(0))

    def to_json(self) -> str:
        return json.dumps([[format_rational(x) for x in row] for row in self.values])


def laplacian(g: Graph) -> RationalMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for v in range(g.n):
        rows[v][v] = g.degree(v)
        for w in g.adj[v]:
            rows[v][w] = -1
    return RationalMatrix.from_rows(rows, cols=g.n)


def spanning_tree_count(g: Graph) -> Fraction:
    """Number of spanning trees, as the determinant of the Laplacian with row/column 0 removed."""
    if g.n == 0:
        raise DisconnectedGraphError("empty graph has no spanning tree")
    count = determinant_exact(laplacian(g).delete([0]))
    if count == 0:
        raise DisconnectedGraphError("graph is disconnected (zero spanning trees)")
    return count


def effective_resistance(g: Graph, u: int, v: int) -> Fraction:
    """R(u, v) = det(L without rows/cols u, v) / det(L without row/col v)."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        require_connected(g)
        return Fraction(0)
    lap = laplacian(g)
    trees = determinant_exact(lap.delete([v]))
    if trees == 0:
        raise DisconnectedGraphError("graph is disconnected")
    return determinant_exact(lap.delete([u, v])) / trees


@lru_cache(maxsize=1 << 15)
def resistance_matrix(g: Graph, ground: int = 0) -> ResistanceMatrix:
    """All-pairs resistances from one exact inverse of the grounded Laplacian."""
    require_connected(g)
    g.check_vertex(ground)
    n = g.n
    keep = [i for i in range(n) if i != ground]
    try:
        inv = inverse_exact(laplacian(g).delete([ground]))
    except SingularMatrixError as exc:  # pragma: no cover - connectivity checked above
        raise DisconnectedGraphError(str(exc)) from exc
    # extend the inverse by a zero row/column at the ground vertex
    pos = {v: i for i, v in enumerate(keep)}
    zero = Fraction(0)

    def m(a: int, b: int) -> Fraction:
        if a == ground or b == ground:
            return zero
        return inv[pos[a], pos[b]]

    diag = [m(v, v) for v in range(n)]
    rows = [[zero] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            r = diag[a] + diag[b] - 2 * m(a, b)
            rows[a][b] = rows[b][a] = r
    return ResistanceMatrix(n, tuple(tuple(r) for r in rows))


def resistance_matrix_by_determinants(g: Graph) -> ResistanceMatrix:
    """Per-pair determinant ratios; slow, used to cross-check :func:`resistance_matrix`."""
    require_connected(g)
    lap = laplacian(g)
    n = g.n
    zero = Fraction(0)
    rows = [[zero] * n for _ in range(n)]
    for v in range(n):
        trees = determinant_exact(lap.delete([v]))
        for u in range(v):
            rows[u][v] = rows[v][u] = determinant_exact(lap.delete([u, v])) / trees
    return ResistanceMatrix(n, tuple(tuple(r) for r in rows))


def kirchhoff_spectral_estimate(g: Graph) -> float:
    """n * sum(1/mu) over the n-1 largest Laplacian eigenvalues (approximate)."""
    require_connected(g)
    if g.n < 2:
        raise ValueError("spectral estimate needs at least two vertices")
    lap = np.zeros((g.n, g.n))
    for v in range(g.n):
        lap[v, v] = g.degree(v)
        for w in g.adj[v]:
            lap[v, w] = -1.0
    mu = np.linalg.eigvalsh(lap)  # ascending; mu[0] is the zero eigenvalue
    return float(g.n * np.sum(1.0 / mu[1:]))
