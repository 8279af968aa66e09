from __future__ import annotations

from fractions import Fraction

import pytest

from cactusdr.blocks import block_decomposition, cactus_check
from cactusdr.canon import are_isomorphic
from cactusdr.enumeration import enumerate_all_cacti, enumerate_cacti
from cactusdr.errors import (
    CycleTooShortError,
    DefinitionDomainError,
    InfeasibleParametersError,
    NoPendantEdgesError,
    NonPendantNeighborError,
    NotAnEndCycleError,
)
from cactusdr.families import (
    EndCycle,
    Family,
    build,
    build_cycle_pendant,
    build_g0,
    build_g3,
    build_g4,
    build_g5,
    build_g8,
    build_g10,
    closed_forms_cycle,
    closed_forms_cycle_pendant,
    corollary_closed_forms,
    difference_vs_g0,
    feasible_families,
    find_end_cycles,
    g0_closed_form,
    g0_erroneous_form,
    is_star_centered_at,
    lemma7_difference,
    lemma7_transform,
    sigma_eligible,
    sigma_transform,
)
from cactusdr.graph import Graph, cycle_graph, path_graph, star_graph
from cactusdr.invariants import d_v, degree_resistance_distance, kf_v, kirchhoff_index

from conftest import bowtie

F = Fraction
DR = degree_resistance_distance


def feasible(max_n=12):
    return [(n, t) for n in range(1, max_n + 1) for t in range((n - 1) // 2 + 1)]


def test_constructors_have_the_right_size():
    for n, t in feasible():
        for fam, g in feasible_families(n, t).items():
            assert g.n == n, fam
            assert cactus_check(g) == t, fam


def test_constructor_shapes():
    g0 = build_g0(7, 2)
    assert g0.degree(0) == 6 and g0.m == 8
    assert sorted(len(b) for b in block_decomposition(build_g5(7, 2)).cycle_blocks) == [3, 4]
    assert sorted(len(b) for b in block_decomposition(build_g8(9, 3)).cycle_blocks) == [3, 4, 4]
    assert sorted(len(b) for b in block_decomposition(build_g10(8, 2)).cycle_blocks) == [3, 5]
    g3 = build_g3(7, 2)
    assert sorted(g3.degrees) == [1, 2, 2, 2, 2, 2, 5]
    g4 = build_g4(7, 2)
    assert sorted(g4.degrees) == [1, 1, 2, 2, 2, 3, 5]
    assert are_isomorphic(build_g0(2 * 3 + 1, 3), build_g0(7, 3))
    assert build_cycle_pendant(4).n == 4 and build_cycle_pendant(4).m == 4


def test_constructor_examples():
    assert DR(build_g0(5, 1)) == F(134, 3)
    assert DR(build_g0(7, 2)) == 106
    assert DR(build_g0(5, 0)) == DR(star_graph(5)) == 44
    assert DR(build_g0(5, 2)) == DR(bowtie())
    assert DR(build_cycle_pendant(4)) == F(70, 3)
    assert DR(build_cycle_pendant(5)) == 43


def test_infeasible_parameters():
    for fn, n, t in [
        (build_g0, 4, 2), (build_g0, 0, 0), (build_g0, 3, -1),
        (build_g3, 4, 1), (build_g4, 5, 2), (build_g4, 5, 0),
        (build_g5, 5, 2), (build_g8, 7, 1), (build_g8, 6, 2), (build_g10, 6, 2),
    ]:
        with pytest.raises(InfeasibleParametersError):
            fn(n, t)
    with pytest.raises(InfeasibleParametersError):
        build_cycle_pendant(3)
    with pytest.raises(InfeasibleParametersError):
        build(Family.CYCLE_PENDANT)
    with pytest.raises(InfeasibleParametersError):
        build(Family.G0, n=5)


def test_build_dispatch():
    assert build(Family.G5, n=7, t=2) == build_g5(7, 2)
    assert build(Family.CYCLE_PENDANT, h=6) == build_cycle_pendant(6)
    assert Family("cycle-pendant") is Family.CYCLE_PENDANT
    assert Family.G8.inferred and Family.G10.inferred and not Family.G4.inferred
    assert Family.G8.label == "G8 (inferred)"


def test_cycle_closed_forms():
    for k in range(3, 13):
        c = cycle_graph(k)
        assert closed_forms_cycle(k) == (kirchhoff_index(c), DR(c), kf_v(c, 0), d_v(c, 0))
    assert closed_forms_cycle(4) == (5, 20, F(5, 2), 5)
    with pytest.raises(InfeasibleParametersError):
        closed_forms_cycle(2)


def test_cycle_pendant_closed_forms():
    for h in range(4, 13):
        g = build_cycle_pendant(h)
        assert closed_forms_cycle_pendant(h) == (DR(g), kf_v(g, 0), d_v(g, 0))


def test_g0_closed_form_everywhere():
    for n, t in feasible():
        assert g0_closed_form(n, t) == DR(build_g0(n, t))


def test_g0_erroneous_form():
    assert g0_erroneous_form(5, 1) == 50
    assert g0_erroneous_form(5, 1, as_printed=True) == F(106, 3)
    assert g0_erroneous_form(5, 1) != g0_closed_form(5, 1)
    # the two forms agree only when the linear term vanishes
    assert g0_erroneous_form(5, 0) == g0_closed_form(5, 0)


def test_difference_formulas():
    for n, t in feasible():
        fams = feasible_families(n, t)
        d0 = DR(fams[Family.G0])
        for fam, g in fams.items():
            if fam is Family.G0:
                continue
            assert DR(g) - d0 == difference_vs_g0(fam, n, t), (fam, n, t)


def test_corollary_closed_forms():
    for n, t in feasible():
        if n >= 2 * t + 2 and t >= 1:
            assert corollary_closed_forms(Family.G5, n, t) == DR(build_g5(n, t))
            assert corollary_closed_forms(Family.G4, n, t) == DR(build_g4(n, t))
    with pytest.raises(ValueError):
        corollary_closed_forms(Family.G3, 7, 2)


def test_sigma_transform_examples():
    # path 0-1-2-3-5 with pendant 4 at 2: vertex 2 has two non-pendant neighbours
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5)])
    with pytest.raises(NonPendantNeighborError):
        sigma_transform(g, 2)
    # pendants 2, 3 at vertex 1, unique non-pendant neighbour 0 on a triangle
    g = Graph.from_edges(6, [(0, 4), (4, 5), (5, 0), (0, 1), (1, 2), (1, 3)])
    h = sigma_transform(g, 1)
    assert h.has_edge(0, 2) and h.has_edge(0, 3) and not h.has_edge(1, 2)
    assert DR(h) < DR(g)
    s = star_graph(5)
    assert is_star_centered_at(s, 0) and sigma_eligible(s, 0)
    assert DR(sigma_transform(s, 0)) == DR(s)
    with pytest.raises(NoPendantEdgesError):
        sigma_transform(path_graph(4), 0)
    with pytest.raises(NonPendantNeighborError):
        sigma_transform(cycle_graph(4), 0)
    assert not sigma_eligible(path_graph(3), 0)


def test_sigma_never_increases_on_corpus():
    for n in range(2, 9):
        for g in enumerate_all_cacti(n):
            for v in range(n):
                if sigma_eligible(g, v):
                    h = sigma_transform(g, v)
                    assert h.n == g.n and h.m == g.m
                    diff = DR(g) - DR(h)
                    assert diff >= 0
                    assert (diff == 0) == is_star_centered_at(g, v)


def test_end_cycles():
    ends = find_end_cycles(build_g5(7, 2))
    assert sorted(c.length for c in ends) == [3, 4]
    assert all(c.anchor == 0 and c.cycle_vertices[0] == 0 for c in ends)
    with pytest.raises(DefinitionDomainError):
        find_end_cycles(build_g0(5, 1))
    # a cycle with two attachment points is not an end cycle
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5), (4, 6), (6, 0)])
    assert sorted(c.length for c in find_end_cycles(g)) == [3]


def test_lemma7_transform_examples():
    g = build_g5(7, 2)
    (c4,) = [c for c in find_end_cycles(g) if c.length == 4]
    gs = lemma7_transform(g, c4)
    assert cactus_check(gs) == 2
    assert are_isomorphic(gs, build_g0(7, 2))
    other = lemma7_transform(g, c4, v=c4.cycle_vertices[-1])
    assert are_isomorphic(gs, other)
    assert DR(g) - DR(gs) == lemma7_difference(7, 2, 4)
    (c3,) = [c for c in find_end_cycles(g) if c.length == 3]
    with pytest.raises(CycleTooShortError):
        lemma7_transform(g, c3)
    with pytest.raises(NotAnEndCycleError):
        lemma7_transform(g, c4, v=c4.cycle_vertices[2])
    with pytest.raises(NotAnEndCycleError):
        lemma7_transform(g, EndCycle((0, 1, 2, 3), 0))


def test_lemma7_difference_matches_direct_and_is_positive():
    for n in range(7, 10):
        for t in range(3, (n - 1) // 2 + 1):
            for g in enumerate_cacti(n, t).graphs:
                for c in find_end_cycles(g):
                    if c.length < 4:
                        continue
                    diff = DR(g) - DR(lemma7_transform(g, c))
                    assert diff == lemma7_difference(n, t, c.length)
                    assert diff > 0


def test_lemma7_boundary_case():
    g = cycle_graph(4).add_edges([(0, 4)], new_vertices=1)
    (c,) = [c for c in find_end_cycles_unrestricted(g)]
    gs = lemma7_transform(g, c)
    assert DR(g) - DR(gs) == F(-5, 3) == lemma7_difference(5, 1, 4)
    assert are_isomorphic(gs, build_g0(5, 1))


def find_end_cycles_unrestricted(g):
    from cactusdr.families import _end_cycles

    return _end_cycles(g)


def test_g10_fragment_example():
    # C5 against C4 with a pendant at one vertex
    c4p = cycle_graph(4).add_edges([(0, 4)], new_vertices=1)
    assert DR(cycle_graph(5)) - DR(c4p) == -3
