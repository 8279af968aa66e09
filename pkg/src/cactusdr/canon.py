"""Canonical certificates for small graphs (n <= 16).

Vertices are first coloured by degree and distance profile, the colouring
is refined to an equitable partition, and the remaining ambiguity is
resolved by individualising vertices of the first non-singleton cell and
recursing. Every leaf yields a labelling; the certificate is the smallest
upper-triangle adjacency encoding over all leaves.

Two kinds of branches are skipped because they provably reach the same
leaf encodings as a branch already explored: twins (vertices with equal
open or closed neighbourhoods) and images under automorphisms discovered
at earlier leaves that fix the current individualised prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UnsupportedSizeError
from .graph import Graph, bfs_distances

MAX_CANON_N = 16


@dataclass(frozen=True, order=True)
class CanonicalForm:
    certificate: bytes

    def hex(self) -> str:
        return self.certificate.hex()

    def __str__(self) -> str:
        return self.hex()


def _rank(keys: list) -> list[int]:
    order = sorted(set(keys))
    index = {k: i for i, k in enumerate(order)}
    return [index[k] for k in keys]


def _refine(adj, colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        keys = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        new = _rank(keys)
        k = len(set(new))
        if k == ncolors:
            return new
        colors, ncolors = new, k


def _pair_bit(n: int):
    """Map (i, j), i < j, to its bit weight (first graph6 pair is most significant)."""
    nbits = n * (n - 1) // 2
    table = {}
    pos = 0
    for j in range(1, n):
        for i in range(j):
            table[(i, j)] = 1 << (nbits - 1 - pos)
            pos += 1
    return table


_PAIR_TABLES = {n: _pair_bit(n) for n in range(MAX_CANON_N + 1)}


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.table = _PAIR_TABLES[g.n]
        self.best_code: int | None = None
        self.best_perm: list[int] | None = None
        self.automorphisms: list[tuple[int, ...]] = []
        open_key = [frozenset(r) for r in g.adj]
        closed_key = [frozenset(r) | {v} for v, r in enumerate(g.adj)]
        self.twin_key = []
        for v in range(g.n):
            # a vertex cannot have both an open and a closed twin
            if any(open_key[u] == open_key[v] for u in range(g.n) if u != v):
                self.twin_key.append(("o", open_key[v]))
            else:
                self.twin_key.append(("c", closed_key[v]))

    def encode(self, perm: list[int]) -> int:
        code = 0
        t = self.table
        for u, v in self.g.edges:
            a, b = perm[u], perm[v]
            code |= t[(a, b) if a < b else (b, a)]
        return code

    def leaf(self, colors: list[int]) -> None:
        code = self.encode(colors)
        if self.best_code is None or code < self.best_code:
            self.best_code, self.best_perm = code, colors
        elif code == self.best_code:
            inv = [0] * self.n
            for v, lab in enumerate(self.best_perm):
                inv[lab] = v
            gamma = tuple(inv[colors[v]] for v in range(self.n))
            if any(gamma[v] != v for v in range(self.n)):
                self.automorphisms.append(gamma)

    def orbit_root(self, prefix: tuple[int, ...]):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[a] = b
        return find

    def search(self, colors: list[int], prefix: tuple[int, ...]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            self.leaf(colors)
            return
        seen_twins = set()
        explored: list[int] = []
        for v in target:
            tk = self.twin_key[v]
            if tk in seen_twins:
                continue
            seen_twins.add(tk)
            if explored:
                find = self.orbit_root(prefix)
                if any(find(v) == find(u) for u in explored):
                    continue
            explored.append(v)
            individualised = _rank([(colors[x], 0 if x == v else 1) for x in range(self.n)])
            self.search(_refine(self.adj, individualised), prefix + (v,))


@lru_cache(maxsize=1 << 17)
def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation ``p`` such that ``g.relabel(p)`` is the canonical representative."""
    if g.n > MAX_CANON_N:
        raise UnsupportedSizeError(f"canonical form supports n <= {MAX_CANON_N}, got {g.n}")
    if g.n == 0:
        return ()
    profiles = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        hist: dict[int, int] = {}
        for d in dist:
            hist[d] = hist.get(d, 0) + 1
        profiles.append((g.degree(v), tuple(sorted(hist.items()))))
    s = _Search(g)
    s.search(_refine(g.adj, _rank(profiles)), ())
    return tuple(s.best_perm)


def canonical_form(g: Graph) -> CanonicalForm:
    perm = canonical_labeling(g)
    n = g.n
    code = _Search(g).encode(list(perm)) if n else 0
    nbits = n * (n - 1) // 2
    return CanonicalForm(bytes([n]) + code.to_bytes((nbits + 7) // 8, "big"))


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        # still validate sizes so oversized input errors consistently
        if a.n > MAX_CANON_N or b.n > MAX_CANON_N:
            raise UnsupportedSizeError(f"canonical form supports n <= {MAX_CANON_N}")
        return False
    return canonical_form(a) == canonical_form(b)
