from __future__ import annotations

import pytest

from cactusdr.blocks import cactus_check
from cactusdr.canon import canonical_form
from cactusdr.enumeration import (
    brute_force_cacti_oracle,
    enumerate_all_cacti,
    enumerate_cacti,
    random_cactus,
)
from cactusdr.errors import InfeasibleParametersError, UnsupportedSizeError
from cactusdr.families import build_g0

# connected cacti by vertex count, from the published integer sequence
KNOWN_TOTALS = [1, 1, 2, 4, 9, 23, 63, 188, 596, 1979]


def test_small_counts():
    assert len(enumerate_cacti(1, 0)) == 1
    assert len(enumerate_cacti(4, 1)) == 2
    assert len(enumerate_cacti(5, 1)) == 5
    assert len(enumerate_cacti(5, 2)) == 1
    assert canonical_form(enumerate_cacti(5, 2).graphs[0]) == canonical_form(build_g0(5, 2))


def test_totals_match_known_sequence():
    assert [len(enumerate_all_cacti(n)) for n in range(1, 11)] == KNOWN_TOTALS


@pytest.mark.slow
def test_total_at_eleven():
    assert len(enumerate_all_cacti(11)) == 6804


def test_trees_are_counted():
    # unlabelled trees on n vertices
    assert [len(enumerate_cacti(n, 0)) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


def test_members_are_distinct_cacti_of_the_right_type():
    for n in range(1, 10):
        for t in range((n - 1) // 2 + 1):
            corpus = enumerate_cacti(n, t)
            certs = [c for _, c in corpus]
            assert len(set(certs)) == len(certs)
            assert certs == sorted(certs)
            for g, c in corpus:
                assert g.n == n and g.m == n - 1 + t
                assert cactus_check(g) == t
                assert canonical_form(g) == c


def test_brute_force_oracle_agrees():
    for n in range(1, 7):
        for t in range((n - 1) // 2 + 1):
            count, certs = brute_force_cacti_oracle(n, t)
            corpus = enumerate_cacti(n, t)
            assert count == len(corpus)
            assert certs == corpus.certificates


def test_parallel_run_is_identical():
    serial = enumerate_cacti(9, 2, workers=1)
    parallel = enumerate_cacti(9, 2, workers=2)
    assert [c for _, c in serial] == [c for _, c in parallel]
    assert serial.graphs == parallel.graphs


def test_parameter_errors():
    with pytest.raises(InfeasibleParametersError):
        enumerate_cacti(5, 3)
    with pytest.raises(InfeasibleParametersError):
        enumerate_cacti(0, 0)
    with pytest.raises(UnsupportedSizeError):
        enumerate_cacti(12, 1)
    with pytest.raises(UnsupportedSizeError):
        brute_force_cacti_oracle(8, 1)


def test_random_cactus(rng):
    for _ in range(100):
        n = rng.randint(1, 30)
        t = rng.randint(0, (n - 1) // 2)
        g = random_cactus(n, t, rng)
        assert g.n == n
        assert cactus_check(g) == t
