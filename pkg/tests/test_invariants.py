from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cactusdr.blocks import block_decomposition
from cactusdr.enumeration import enumerate_all_cacti, random_cactus
from cactusdr.errors import DisconnectedGraphError, NotACutVertexError, PartitionError, VertexIndexError
from cactusdr.graph import Graph, complete_graph, components, cycle_graph, path_graph, star_graph
from cactusdr.invariants import (
    d_v,
    degree_distance,
    degree_resistance_distance,
    dr_via_cut_decomposition,
    invariant_report,
    kf_v,
    kirchhoff_index,
    split_at_vertex,
    wiener,
)

from conftest import bowtie, random_relabel

F = Fraction


@st.composite
def cacti(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    t = draw(st.integers(0, (n - 1) // 2))
    return random_cactus(n, t, random.Random(draw(st.integers(0, 2**32))))


def test_distance_invariants_examples():
    assert wiener(path_graph(3)) == 4
    assert degree_distance(path_graph(3)) == 10
    assert wiener(cycle_graph(4)) == 8
    assert degree_distance(cycle_graph(4)) == 32
    assert wiener(complete_graph(3)) == 3
    assert degree_distance(complete_graph(3)) == 12


def test_resistance_invariants_examples():
    assert kirchhoff_index(complete_graph(3)) == 2
    assert degree_resistance_distance(complete_graph(3)) == 8
    assert kirchhoff_index(cycle_graph(4)) == 5
    assert degree_resistance_distance(cycle_graph(4)) == 20
    # hub pairs 4 * 6 * 2/3, same-triangle 2 * 4 * 2/3, cross 4 * 4 * 4/3
    assert degree_resistance_distance(bowtie()) == F(128, 3)
    assert degree_resistance_distance(star_graph(5)) == 44
    assert degree_resistance_distance(Graph(1, [()])) == 0


def test_per_vertex_examples():
    c4 = cycle_graph(4)
    assert kf_v(c4, 0) == F(5, 2)
    assert d_v(c4, 0) == 5
    p3 = path_graph(3)
    assert (kf_v(p3, 1), d_v(p3, 1)) == (2, 2)
    assert (kf_v(p3, 0), d_v(p3, 0)) == (3, 4)
    with pytest.raises(VertexIndexError):
        kf_v(p3, 3)


def test_report_fields_and_json():
    rep = invariant_report(path_graph(3))
    d = json.loads(rep.to_json())
    assert set(d) == {"wiener", "degree_distance", "kirchhoff", "degree_resistance", "per_vertex"}
    assert d["wiener"] == "4" and d["degree_resistance"] == "10"
    assert d["per_vertex"][0] == {"vertex": 0, "kf_v": "3", "d_v": "4"}
    assert json.loads(invariant_report(complete_graph(3)).to_json())["per_vertex"][0]["kf_v"] == "4/3"
    with pytest.raises(DisconnectedGraphError):
        invariant_report(Graph.from_edges(3, [(0, 1)]))


def test_report_matches_individual_functions():
    for g in enumerate_all_cacti(7):
        rep = invariant_report(g)
        assert rep.wiener == wiener(g)
        assert rep.degree_distance == degree_distance(g)
        assert rep.kirchhoff == kirchhoff_index(g)
        assert rep.degree_resistance == degree_resistance_distance(g)
        assert all(kf == kf_v(g, v) and dv == d_v(g, v) for v, kf, dv in rep.per_vertex)


@settings(max_examples=60, deadline=None)
@given(cacti(), st.randoms(use_true_random=False))
def test_invariants_are_labelling_independent(g, r):
    h = random_relabel(g, r)
    a, b = invariant_report(g), invariant_report(h)
    assert (a.wiener, a.degree_distance, a.kirchhoff, a.degree_resistance) == (
        b.wiener, b.degree_distance, b.kirchhoff, b.degree_resistance)


@settings(max_examples=60, deadline=None)
@given(cacti())
def test_sum_identities(g):
    rep = invariant_report(g)
    deg = g.degrees
    assert sum((deg[v] * kf for v, kf, _ in rep.per_vertex), F(0)) == rep.degree_resistance
    assert sum((dv for _, _, dv in rep.per_vertex), F(0)) == rep.degree_resistance
    assert sum((kf for _, kf, _ in rep.per_vertex), F(0)) == 2 * rep.kirchhoff
    assert rep.kirchhoff <= rep.wiener
    assert rep.degree_resistance <= rep.degree_distance
    if g.m == g.n - 1:
        assert rep.kirchhoff == rep.wiener
        assert rep.degree_resistance == rep.degree_distance


def test_cycle_dr_is_four_times_kf():
    for k in range(3, 13):
        assert degree_resistance_distance(cycle_graph(k)) == 4 * kirchhoff_index(cycle_graph(k))


def test_cut_decomposition_examples():
    from cactusdr.families import build_g0

    g = build_g0(5, 1)  # triangle 0-1-2, pendants 3, 4
    assert dr_via_cut_decomposition(g, 0, [1, 2]) == F(134, 3)
    assert dr_via_cut_decomposition(g, 0, [3]) == F(134, 3)
    assert dr_via_cut_decomposition(bowtie(), 0, [1, 2]) == F(128, 3)
    # empty second side: the whole graph against a single vertex
    assert dr_via_cut_decomposition(g, 0, [1, 2, 3, 4]) == F(134, 3)
    (g1, v1), (g2, v2) = split_at_vertex(bowtie(), 0, [1, 2])
    assert g1.n == g2.n == 3 and g1.m == g2.m == 3


def test_cut_decomposition_errors():
    with pytest.raises(NotACutVertexError):
        dr_via_cut_decomposition(cycle_graph(5), 0, [1, 2])
    with pytest.raises(PartitionError):
        dr_via_cut_decomposition(bowtie(), 0, [1, 3])
    with pytest.raises(PartitionError):
        dr_via_cut_decomposition(bowtie(), 0, [0, 1, 2])
    with pytest.raises(VertexIndexError):
        dr_via_cut_decomposition(bowtie(), 0, [1, 9])


@settings(max_examples=60, deadline=None)
@given(cacti(max_n=11), st.randoms(use_true_random=False))
def test_cut_decomposition_property(g, r):
    cuts = sorted(block_decomposition(g).cut_vertices)
    if not cuts:
        return
    v = r.choice(cuts)
    parts = components(g, removed=[v])
    chosen = [p for p in parts if r.random() < 0.5] or parts[:1]
    side = [x for p in chosen for x in p]
    assert dr_via_cut_decomposition(g, v, side) == degree_resistance_distance(g)
