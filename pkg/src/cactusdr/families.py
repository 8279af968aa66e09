"""Extremal cactus families, closed forms, and the two graph transforms.

Layout convention for every constructor: the hub is vertex 0, then the
triangles through the hub, then longer cycles, then pendant vertices (and
pendant paths last).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .blocks import block_decomposition, cactus_check, cycle_order
from .errors import (
    CycleTooShortError,
    DefinitionDomainError,
    InfeasibleParametersError,
    NoPendantEdgesError,
    NonPendantNeighborError,
    NotAnEndCycleError,
)
from .graph import Graph, require_connected

F = Fraction


class Family(Enum):
    G0 = "g0"
    G3 = "g3"
    G4 = "g4"
    G5 = "g5"
    G8 = "g8"
    G10 = "g10"
    CYCLE_PENDANT = "cycle-pendant"

    @property
    def inferred(self) -> bool:
        """Shape reconstructed from difference formulas, not from a drawn figure."""
        return self in (Family.G8, Family.G10)

    @property
    def label(self) -> str:
        return self.name + (" (inferred)" if self.inferred else "")


def _check_params(n: int, t: int) -> None:
    if n < 1 or t < 0 or 2 * t > n - 1:
        raise InfeasibleParametersError(f"no cactus with n={n}, t={t} (need 0 <= t <= (n-1)/2)")


class _Builder:
    """Accumulates blocks hung at the hub (vertex 0)."""

    def __init__(self):
        self.n = 1
        self.edges: list[tuple[int, int]] = []

    def cycle(self, k: int, at: int = 0) -> list[int]:
        new = list(range(self.n, self.n + k - 1))
        self.n += k - 1
        ring = [at] + new
        self.edges += [(ring[i], ring[(i + 1) % k]) for i in range(k)]
        return new

    def pendants(self, count: int, at: int = 0) -> list[int]:
        new = list(range(self.n, self.n + count))
        self.n += count
        self.edges += [(at, v) for v in new]
        return new

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def build_g0(n: int, t: int) -> Graph:
    """t triangles and n - 2t - 1 pendant edges sharing the hub."""
    _check_params(n, t)
    b = _Builder()
    for _ in range(t):
        b.cycle(3)
    b.pendants(n - 2 * t - 1)
    return b.graph()


def build_g3(n: int, t: int) -> Graph:
    """G0 with two hub pendants merged into one pendant path of length 2."""
    _check_params(n, t)
    if n - 2 * t - 1 < 2:
        raise InfeasibleParametersError(f"G3 needs n - 2t - 1 >= 2, got n={n}, t={t}")
    b = _Builder()
    for _ in range(t):
        b.cycle(3)
    b.pendants(n - 2 * t - 3)
    (mid,) = b.pendants(1)
    b.pendants(1, at=mid)
    return b.graph()


def build_g4(n: int, t: int) -> Graph:
    """G0(n-1, t) plus a pendant vertex on a non-hub vertex of the first triangle."""
    if t < 1 or n - 1 < 2 * t + 1:
        raise InfeasibleParametersError(f"G4 needs t >= 1 and n - 1 >= 2t + 1, got n={n}, t={t}")
    b = _Builder()
    first = b.cycle(3)
    for _ in range(t - 1):
        b.cycle(3)
    b.pendants(n - 2 * t - 2)
    b.pendants(1, at=first[0])
    return b.graph()


def build_g5(n: int, t: int) -> Graph:
    """t - 1 triangles, one 4-cycle and n - 2t - 2 pendant edges at the hub."""
    if t < 1 or n < 2 * t + 2:
        raise InfeasibleParametersError(f"G5 needs t >= 1 and n >= 2t + 2, got n={n}, t={t}")
    b = _Builder()
    for _ in range(t - 1):
        b.cycle(3)
    b.cycle(4)
    b.pendants(n - 2 * t - 2)
    return b.graph()


def build_g8(n: int, t: int) -> Graph:
    """Inferred shape: t - 2 triangles, two 4-cycles, n - 2t - 3 pendants at the hub."""
    if t < 2 or n < 2 * t + 3:
        raise InfeasibleParametersError(f"G8 needs t >= 2 and n >= 2t + 3, got n={n}, t={t}")
    b = _Builder()
    for _ in range(t - 2):
        b.cycle(3)
    b.cycle(4)
    b.cycle(4)
    b.pendants(n - 2 * t - 3)
    return b.graph()


def build_g10(n: int, t: int) -> Graph:
    """Inferred shape: t - 1 triangles, one 5-cycle, n - 2t - 3 pendants at the hub."""
    if t < 1 or n < 2 * t + 3:
        raise InfeasibleParametersError(f"G10 needs t >= 1 and n >= 2t + 3, got n={n}, t={t}")
    b = _Builder()
    for _ in range(t - 1):
        b.cycle(3)
    b.cycle(5)
    b.pendants(n - 2 * t - 3)
    return b.graph()


def build_cycle_pendant(h: int) -> Graph:
    """C_{h-1} on vertices 0..h-2 with pendant vertex h-1 attached at 0."""
    if h < 4:
        raise InfeasibleParametersError(f"cycle-with-pendant needs h >= 4, got {h}")
    b = _Builder()
    b.cycle(h - 1)
    b.pendants(1)
    return b.graph()


_BUILDERS = {
    Family.G0: build_g0,
    Family.G3: build_g3,
    Family.G4: build_g4,
    Family.G5: build_g5,
    Family.G8: build_g8,
    Family.G10: build_g10,
}


def build(family: Family, n: int | None = None, t: int | None = None, h: int | None = None) -> Graph:
    if family is Family.CYCLE_PENDANT:
        if h is None:
            raise InfeasibleParametersError("cycle-pendant needs h")
        return build_cycle_pendant(h)
    if n is None or t is None:
        raise InfeasibleParametersError(f"{family.value} needs n and t")
    return _BUILDERS[family](n, t)


def feasible_families(n: int, t: int) -> dict[Family, Graph]:
    """All parametrised families (excluding cycle-pendant) that exist at (n, t)."""
    out = {}
    for fam, fn in _BUILDERS.items():
        try:
            out[fam] = fn(n, t)
        except InfeasibleParametersError:
            pass
    return out


# closed forms

def closed_forms_cycle(k: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(Kf, D_R, Kf_v, D_v) of the cycle C_k."""
    if k < 3:
        raise InfeasibleParametersError(f"cycle needs k >= 3, got {k}")
    return F(k**3 - k, 12), F(k**3 - k, 3), F(k * k - 1, 6), F(k * k - 1, 3)


def closed_forms_cycle_pendant(h: int) -> tuple[Fraction, Fraction, Fraction]:
    """(D_R, Kf_u, D_u) of C_{h-1} with a pendant at u, u being the attachment vertex."""
    if h < 4:
        raise InfeasibleParametersError(f"cycle-with-pendant needs h >= 4, got {h}")
    return F(h**3 - h * h + 7 * h - 6, 3), F(h * h - 2 * h + 6, 6), F(h * h - 2 * h + 3, 3)


def g0_closed_form(n: int, t: int) -> Fraction:
    _check_params(n, t)
    return F(-4, 3) * t * t + (F(4, 3) * n - F(14, 3)) * t + 3 * n * n - 7 * n + 4


def g0_erroneous_form(n: int, t: int, *, as_printed: bool = False) -> Fraction:
    """The earlier, incorrect closed form for D_R(G0(n, t)).

    The sign of the linear-in-t term is ambiguous in transcription. The
    default reading, ``+(8n/3 - 6) t``, reproduces the erroneous value 50 at
    (5, 1); ``as_printed=True`` uses ``-(8n/3 - 6) t``.
    """
    lin = F(8, 3) * n - 6
    if as_printed:
        lin = -lin
    return F(-4, 3) * t * t + lin * t + 3 * n * n - 7 * n + 4


def corollary_closed_forms(family: Family, n: int, t: int) -> Fraction:
    """Closed forms for D_R(G5) (second minimum) and D_R(G4) (third minimum)."""
    if family is Family.G5:
        build_g5(n, t)
        return F(-4, 3) * t * t + (F(4, 3) * n - F(13, 3)) * t + 3 * n * n - F(16, 3) * n - F(19, 3)
    if family is Family.G4:
        build_g4(n, t)
        return F(-4, 3) * t * t + (F(4, 3) * n - F(10, 3)) * t + 3 * n * n - F(13, 3) * n - 8
    raise ValueError(f"no corollary closed form for {family}")


def difference_vs_g0(family: Family, n: int, t: int) -> Fraction:
    """D_R(family(n, t)) - D_R(G0(n, t)) as stated by the difference formulas."""
    forms = {
        Family.G3: 4 * n + 2 * t - 12,
        Family.G4: F(8, 3) * n + F(4, 3) * t - 12,
        Family.G5: F(5, 3) * n + F(t, 3) - F(31, 3),
        Family.G8: F(10, 3) * n + F(2, 3) * t - F(62, 3),
        Family.G10: F(5, 3) * n + F(t, 3) - F(31, 3) + 3 * n + t - 19,
    }
    return F(forms[family])


# transforms

def sigma_transform(g: Graph, v: int) -> Graph:
    """Move every pendant edge at ``v`` to ``v``'s unique non-pendant neighbour.

    When all neighbours of ``v`` are pendant (``g`` is a star centred at
    ``v``) the smallest neighbour plays the role of the non-pendant one.
    """
    require_connected(g)
    g.check_vertex(v)
    nbrs = g.adj[v]
    pendant = [w for w in nbrs if g.degree(w) == 1]
    others = [w for w in nbrs if g.degree(w) != 1]
    if len(others) > 1:
        raise NonPendantNeighborError(f"vertex {v} has {len(others)} non-pendant neighbours")
    if others:
        u = others[0]
    else:
        if len(pendant) < 2:
            raise NoPendantEdgesError(f"vertex {v} has no pendant edge to move")
        u = pendant[0]
        pendant = pendant[1:]
    if not pendant:
        raise NoPendantEdgesError(f"vertex {v} has no pendant neighbours")
    moved = set(pendant)
    edges = [(a, b) for a, b in g.edges if not (a == v and b in moved or b == v and a in moved)]
    edges += [(u, w) for w in pendant]
    return Graph.from_edges(g.n, edges)


def sigma_eligible(g: Graph, v: int) -> bool:
    nbrs = g.adj[v]
    pendant = sum(1 for w in nbrs if g.degree(w) == 1)
    others = len(nbrs) - pendant
    return (others == 1 and pendant >= 1) or (others == 0 and pendant >= 2)


def is_star_centered_at(g: Graph, v: int) -> bool:
    return g.degree(v) == g.n - 1 and g.m == g.n - 1


@dataclass(frozen=True)
class EndCycle:
    cycle_vertices: tuple[int, ...]  # cyclic order, starting at the anchor
    anchor: int

    @property
    def length(self) -> int:
        return len(self.cycle_vertices)


def _end_cycles(g: Graph) -> list[EndCycle]:
    """Cycle blocks with exactly one vertex adjacent to the rest of the graph."""
    cactus_check(g)
    dec = block_decomposition(g)
    out = []
    for vs in dec.cycle_blocks:
        inside = set(vs)
        attached = [x for x in vs if any(w not in inside for w in g.adj[x])]
        if len(attached) == 1:
            anchor = attached[0]
            out.append(EndCycle(tuple(cycle_order(g, vs, anchor)), anchor))
    return out


def find_end_cycles(g: Graph) -> list[EndCycle]:
    t = cactus_check(g)
    if t < 2:
        raise DefinitionDomainError(f"end cycles are defined for t >= 2, got t={t}")
    return _end_cycles(g)


def lemma7_transform(g: Graph, c: EndCycle, v: int | None = None) -> Graph:
    """G* = G - vw + uw for the end cycle ``c`` with anchor u.

    ``v`` must be a cycle neighbour of the anchor (default: the one that
    follows the anchor in ``c.cycle_vertices``); ``w`` is the next vertex
    along the cycle. The h-cycle shrinks to an (h-1)-cycle and ``v`` becomes
    a pendant at the anchor.
    """
    if c.length < 4:
        raise CycleTooShortError(f"cycle of length {c.length}; need h >= 4")
    if c not in _end_cycles(g):
        raise NotAnEndCycleError(f"{c} is not an end cycle of the graph")
    ring = list(c.cycle_vertices)
    u = c.anchor
    if v is None or v == ring[1]:
        v, w = ring[1], ring[2]
    elif v == ring[-1]:
        w = ring[-2]
    else:
        raise NotAnEndCycleError(f"vertex {v} is not a cycle neighbour of the anchor {u}")
    edges = [e for e in g.edges if e != (min(v, w), max(v, w))] + [(u, w)]
    return Graph.from_edges(g.n, edges)


def lemma7_difference(n: int, t: int, h: int) -> Fraction:
    """Stated value of D_R(G) - D_R(G*) for the cycle-shortening transform."""
    return (
        F(h * h - 8 * h + 6, 3)
        + (n - 1 - h) * F(4 * h - 11, 3)
        + t * F(2 * h - 7, 3)
        + F(2 * h - 4, 3)
    )
