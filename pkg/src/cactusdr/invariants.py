"""Distance- and resistance-based invariants: W, D, Kf, Kf_v, D_v and D_R."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NotACutVertexError, PartitionError
from .exact import format_rational
from .graph import Graph, components, distance_matrix, require_connected
from .resistance import resistance_matrix


@dataclass(frozen=True)
class InvariantReport:
    wiener: Fraction
    degree_distance: Fraction
    kirchhoff: Fraction
    degree_resistance: Fraction
    per_vertex: tuple[tuple[int, Fraction, Fraction], ...]  # (v, kf_v, d_v)

    def to_dict(self) -> dict:
        return {
            "wiener": format_rational(self.wiener),
            "degree_distance": format_rational(self.degree_distance),
            "kirchhoff": format_rational(self.kirchhoff),
            "degree_resistance": format_rational(self.degree_resistance),
            "per_vertex": [
                {"vertex": v, "kf_v": format_rational(kf), "d_v": format_rational(dv)}
                for v, kf, dv in self.per_vertex
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _pair_sum(n: int, weight) -> Fraction:
    total = Fraction(0)
    for u in range(n):
        for v in range(u + 1, n):
            total += weight(u, v)
    return total


def wiener(g: Graph) -> Fraction:
    d = distance_matrix(g)
    return Fraction(sum(d[u][v] for u in range(g.n) for v in range(u + 1, g.n)))


def degree_distance(g: Graph) -> Fraction:
    d = distance_matrix(g)
    deg = g.degrees
    return Fraction(sum((deg[u] + deg[v]) * d[u][v] for u in range(g.n) for v in range(u + 1, g.n)))


def kirchhoff_index(g: Graph) -> Fraction:
    r = resistance_matrix(g)
    return _pair_sum(g.n, lambda u, v: r[u, v])


def kf_v(g: Graph, v: int) -> Fraction:
    g.check_vertex(v)
    return resistance_matrix(g).row_sum(v)


def d_v(g: Graph, v: int) -> Fraction:
    g.check_vertex(v)
    r = resistance_matrix(g)
    return sum((g.degree(u) * r[u, v] for u in range(g.n)), Fraction(0))


def degree_resistance_distance(g: Graph) -> Fraction:
    """Sum over unordered pairs of (d(u) + d(v)) R(u, v)."""
    r = resistance_matrix(g)
    deg = g.degrees
    return _pair_sum(g.n, lambda u, v: (deg[u] + deg[v]) * r[u, v])


def invariant_report(g: Graph) -> InvariantReport:
    require_connected(g)
    r = resistance_matrix(g)
    dist = distance_matrix(g)
    deg = g.degrees
    n = g.n
    w = dd = 0
    kf = dr = Fraction(0)
    for u in range(n):
        for v in range(u + 1, n):
            w += dist[u][v]
            dd += (deg[u] + deg[v]) * dist[u][v]
            kf += r[u, v]
            dr += (deg[u] + deg[v]) * r[u, v]
    per_vertex = tuple(
        (v, r.row_sum(v), sum((deg[u] * r[u, v] for u in range(n)), Fraction(0)))
        for v in range(n)
    )
    return InvariantReport(Fraction(w), Fraction(dd), kf, dr, per_vertex)


def split_at_vertex(g: Graph, v: int, side: Iterable[int]):
    """Validate a split of ``g`` at ``v`` and return the two pieces.

    ``side`` lists the vertices of the first piece other than ``v``; the
    second piece gets the rest. Each piece is returned as (graph, index of v
    in it). An empty second piece is allowed and gives a single vertex.
    """
    require_connected(g)
    g.check_vertex(v)
    first = set(side)
    for x in first:
        g.check_vertex(x)
    if v in first:
        raise PartitionError("the split vertex must not be listed in side")
    second = set(range(g.n)) - first - {v}
    if first and second:
        if len(components(g, removed=[v])) < 2:
            raise NotACutVertexError(f"vertex {v} is not a cut vertex")
        for a, b in g.edges:
            if (a in first and b in second) or (a in second and b in first):
                raise PartitionError(f"edge ({a}, {b}) crosses the partition")
    g1, idx1 = g.induced_subgraph(first | {v})
    g2, idx2 = g.induced_subgraph(second | {v})
    return (g1, idx1[v]), (g2, idx2[v])


def dr_via_cut_decomposition(g: Graph, v: int, side: Iterable[int]) -> Fraction:
    """D_R of ``g`` assembled from the two pieces glued at ``v``.

    D_R(G) = D_R(G1) + D_R(G2) + 2 m2 Kf_v(G1) + 2 m1 Kf_v(G2)
             + (n2 - 1) D_v(G1) + (n1 - 1) D_v(G2)
    """
    (g1, v1), (g2, v2) = split_at_vertex(g, v, side)
    n1, n2, m1, m2 = g1.n, g2.n, g1.m, g2.m
    return (
        degree_resistance_distance(g1)
        + degree_resistance_distance(g2)
        + 2 * m2 * kf_v(g1, v1)
        + 2 * m1 * kf_v(g2, v2)
        + (n2 - 1) * d_v(g1, v1)
        + (n1 - 1) * d_v(g2, v2)
    )
