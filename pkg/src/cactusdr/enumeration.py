"""Exhaustive generation of connected cacti up to isomorphism.

Every cactus is obtained from a single vertex by repeatedly hanging a whole
block (a pendant edge or a cycle) at an existing vertex, so a breadth-first
growth with canonical deduplication at each vertex count reaches all of
Cact(n, t). Partial graphs that cannot reach (n, t) are pruned: a cycle
costs at least two new vertices.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .canon import CanonicalForm, canonical_form
from .errors import InfeasibleParametersError, UnsupportedSizeError
from .graph import Graph

MAX_ENUM_N = 11
MAX_ORACLE_N = 7


@dataclass(frozen=True)
class CactusCorpus:
    n: int
    t: int
    members: tuple[tuple[Graph, CanonicalForm], ...]  # sorted by certificate

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def graphs(self) -> list[Graph]:
        return [g for g, _ in self.members]

    @property
    def certificates(self) -> set[CanonicalForm]:
        return {c for _, c in self.members}


def check_params(n: int, t: int, max_n: int = MAX_ENUM_N) -> None:
    if n < 1 or t < 0 or 2 * t > n - 1:
        raise InfeasibleParametersError(f"no cactus with n={n}, t={t}")
    if n > max_n:
        raise UnsupportedSizeError(f"enumeration supports n <= {max_n}, got {n}")


def _children(item: tuple[Graph, int, int, int]) -> list[tuple[int, int, Graph, CanonicalForm]]:
    """All one-block extensions of a partial cactus that can still reach (n, t)."""
    g, cycles, n, t = item
    out = []
    room = n - g.n
    for at in range(g.n):
        if cycles == t or room - 1 >= 2 * (t - cycles):
            child = g.add_edges([(at, g.n)], new_vertices=1)
            out.append((child.n, cycles, child, canonical_form(child)))
        if cycles < t:
            for k in range(3, room + 2):
                new = k - 1
                if room - new < 2 * (t - cycles - 1):
                    break
                ring = [at] + list(range(g.n, g.n + new))
                child = g.add_edges([(ring[i], ring[(i + 1) % k]) for i in range(k)], new_vertices=new)
                out.append((child.n, cycles + 1, child, canonical_form(child)))
    return out


def _generate(n: int, t: int, workers: int = 1) -> dict[CanonicalForm, Graph]:
    # levels[m] maps certificate -> (graph, cycle count) for partial graphs with m vertices
    levels: list[dict[CanonicalForm, tuple[Graph, int]]] = [dict() for _ in range(n + 1)]
    seed = Graph(1, [()])
    levels[1][canonical_form(seed)] = (seed, 0)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for m in range(1, n):
            # parents are expanded in certificate order so insertion is reproducible
            parents = [(levels[m][c][0], levels[m][c][1], n, t) for c in sorted(levels[m])]
            if pool is not None:
                results = pool.map(_children, parents, chunksize=max(1, len(parents) // (4 * workers)))
            else:
                results = map(_children, parents)
            for batch in results:
                for size, cycles, child, cert in batch:
                    levels[size].setdefault(cert, (child, cycles))
    finally:
        if pool is not None:
            pool.shutdown()
    return {c: g for c, (g, cyc) in levels[n].items() if cyc == t}


@lru_cache(maxsize=None)
def enumerate_cacti(n: int, t: int, workers: int = 1) -> CactusCorpus:
    check_params(n, t)
    found = _generate(n, t, workers)
    members = tuple(sorted(((g, c) for c, g in found.items()), key=lambda gc: gc[1]))
    return CactusCorpus(n, t, members)


def enumerate_all_cacti(n: int) -> list[Graph]:
    """Every connected cactus on n vertices, all cycle counts, in (t, certificate) order."""
    out = []
    for t in range((n - 1) // 2 + 1):
        out.extend(enumerate_cacti(n, t).graphs)
    return out


def _fundamental_cycle_test(n: int, edges) -> bool:
    """Connected, with pairwise edge-disjoint fundamental cycles.

    For any spanning tree, a connected graph is a cactus iff no tree edge
    lies on two fundamental cycles. Testing it this way keeps the oracle
    independent of the block decomposition used elsewhere.
    """
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = [-1] * n
    depth = [-1] * n
    depth[0] = 0
    order = [0]
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                parent[w] = u
                order.append(w)
                stack.append(w)
    if len(order) != n:
        return False
    covered = [0] * n  # covered[x] counts fundamental cycles through the tree edge (x, parent[x])
    for a, b in edges:
        if parent[a] == b or parent[b] == a:
            continue
        lo, hi = (a, b) if depth[a] > depth[b] else (b, a)
        x = lo
        while depth[x] > depth[hi]:
            covered[x] += 1
            if covered[x] > 1:
                return False
            x = parent[x]
        if x != hi:
            # endpoints on different branches: climb both sides to the meeting point
            y = hi
            while x != y:
                for z in (x, y):
                    covered[z] += 1
                    if covered[z] > 1:
                        return False
                x, y = parent[x], parent[y]
    return True


def brute_force_cacti_oracle(n: int, t: int) -> tuple[int, set[CanonicalForm]]:
    """Isomorphism classes of Cact(n, t) by scanning every (n-1+t)-edge subset of K_n."""
    if n > MAX_ORACLE_N:
        raise UnsupportedSizeError(f"brute-force oracle supports n <= {MAX_ORACLE_N}, got {n}")
    check_params(n, t, max_n=MAX_ORACLE_N)
    pairs = list(combinations(range(n), 2))
    certs: set[CanonicalForm] = set()
    for subset in combinations(pairs, n - 1 + t):
        # connected with n - 1 + t edges, so cyclomatic number t; a cactus then has t cycles
        if _fundamental_cycle_test(n, subset):
            certs.add(canonical_form(Graph.from_edges(n, subset)))
    return len(certs), certs


def random_cactus(n: int, t: int, rng: random.Random) -> Graph:
    """A random member of Cact(n, t) (not uniform), grown block by block."""
    check_params(n, t, max_n=10**6)
    lengths = [3] * t
    spare = n - 1 - 2 * t
    # lengthen some cycles, keep the rest of the budget for pendant edges
    for i in range(t):
        extra = rng.randint(0, spare)
        lengths[i] += extra
        spare -= extra
    blocks = lengths + [2] * spare
    rng.shuffle(blocks)
    edges = []
    size = 1
    for k in blocks:
        at = rng.randrange(size)
        if k == 2:
            edges.append((at, size))
            size += 1
        else:
            ring = [at] + list(range(size, size + k - 1))
            edges += [(ring[i], ring[(i + 1) % k]) for i in range(k)]
            size += k - 1
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, edges).relabel(perm)
