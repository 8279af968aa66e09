"""Biconnected blocks, cut vertices and cactus recognition."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotACactusError
from .graph import Graph, require_connected

Edge = tuple[int, int]


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertices: frozenset[int]
    blocks: tuple[tuple[Edge, ...], ...]

    def block_vertices(self, i: int) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.blocks[i] for v in e}))

    @property
    def cycle_blocks(self) -> list[tuple[int, ...]]:
        """Vertex sets of blocks with more than one edge."""
        return [self.block_vertices(i) for i, b in enumerate(self.blocks) if len(b) > 1]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan biconnected components, iterative DFS from vertex 0.

    Blocks are ordered by (smallest vertex, sorted edge list).
    """
    require_connected(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut: set[int] = set()
    blocks: list[tuple[Edge, ...]] = []
    edge_stack: list[Edge] = []
    timer = 0

    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    # frames: (vertex, parent, iterator over neighbours)
    stack = [(0, -1, iter(g.adj[0]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != 0:
                    cut.add(parent)
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append((min(e), max(e)))
                    if e == (parent, v):
                        break
                blocks.append(tuple(sorted(comp)))
    if root_children > 1:
        cut.add(0)
    blocks.sort(key=lambda b: (min(min(e) for e in b), b))
    return BlockDecomposition(frozenset(cut), tuple(blocks))


def cactus_check(g: Graph) -> int:
    """Return the number of cycle blocks; raise NotACactusError otherwise.

    Inside a biconnected block, edge count == vertex count means the block is
    a chordless cycle.
    """
    dec = block_decomposition(g)
    t = 0
    for i, block in enumerate(dec.blocks):
        nv = len(dec.block_vertices(i))
        if len(block) == 1:
            continue
        if len(block) == nv:
            t += 1
            continue
        raise NotACactusError(
            f"block {i} on vertices {dec.block_vertices(i)} has {len(block)} edges",
            block=block,
        )
    return t


def is_cactus(g: Graph) -> bool:
    try:
        cactus_check(g)
    except NotACactusError:
        return False
    return True


def cycle_order(g: Graph, vertices, start: int) -> list[int]:
    """Walk a cycle block (given by its vertex set) starting at ``start``.

    The second vertex is the smaller cycle neighbour of ``start``. In a cactus
    the vertex set of a cycle block induces exactly that cycle.
    """
    vs = set(vertices)
    order = [start]
    prev, cur = None, start
    for _ in range(len(vs) - 1):
        cur, prev = min(w for w in g.adj[cur] if w in vs and w != prev and w not in order[1:]), cur
        order.append(cur)
    return order
