"""Backtracking count of proper 3-edge-colorings."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

import chromatic_bracket as cb
from chromatic_bracket import generators as gen
from chromatic_bracket.errors import PartialColoring

# frozen reference counts, checked against an independent brute-force pass
FIXTURE_COUNTS = {
    "theta": 6,
    "dumbbell": 0,
    "double_dumbbell": 0,
    "k4": 6,
    "prism": 6,
    "k33": 12,
    "petersen": 0,
    "truncated_tetrahedron": 6,
}


def test_fixture_counts():
    for name, want in FIXTURE_COUNTS.items():
        g = getattr(gen, name)()
        assert cb.count_colorings(g) == want, name


def test_flower_snark_counts():
    assert cb.count_colorings(gen.isaacs_j(3)) == 0
    assert cb.count_colorings(gen.isaacs_j(4)) == 96
    assert cb.count_colorings(gen.isaacs_j(5)) == 0


def test_enumeration_matches_count_and_is_sorted():
    for name in ("theta", "k4", "prism", "k33"):
        g = getattr(gen, name)()
        cs = cb.enumerate_colorings(g)
        assert len(cs) == FIXTURE_COUNTS[name]
        assert cs == cb.enumerate_colorings(g)
        assert len(set(cs)) == len(cs)
        for c in cs:
            assert cb.is_proper(g, c)


def test_theta_colorings_are_color_permutations():
    g = gen.theta()
    cs = cb.enumerate_colorings(g)
    assert sorted(cs) == [
        (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0),
    ]


def test_loop_forces_zero():
    assert cb.count_colorings(gen.dumbbell()) == 0
    assert cb.enumerate_colorings(gen.dumbbell()) == []


def test_is_proper_rejects_bad_input():
    g = gen.theta()
    assert not cb.is_proper(g, (0, 0, 1))
    assert not cb.is_proper(g, (0, 1, 1))
    with pytest.raises(PartialColoring):
        cb.is_proper(g, (0, 1))
    with pytest.raises(PartialColoring):
        cb.is_proper(g, (0, 1, 5))


def test_worker_partition_agrees_with_serial():
    for g in (gen.k33(), gen.prism(), gen.isaacs_j(4)):
        assert cb.count_colorings(g, workers=2) == cb.count_colorings(g)
        assert cb.count_colorings(g, workers=3) == cb.count_colorings(g)


def test_color_constants_and_names():
    assert cb.COLORS == (cb.RED, cb.BLUE, cb.PURPLE) == (0, 1, 2)
    assert [cb.color_name(c) for c in cb.COLORS] == ["R", "B", "P"]
    assert cb.coloring_names((2, 0, 1)) == ["P", "R", "B"]


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=5).map(lambda k: 2 * k), st.integers(0, 10_000))
def test_count_is_a_multiple_of_six(n: int, seed: int) -> None:
    # color permutations act freely on proper colorings
    g = gen.random_cubic(n, seed)
    assert cb.count_colorings(g) % 6 == 0


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_enumeration_consistent_on_random_graphs(seed: int) -> None:
    g = gen.random_cubic(8, seed)
    cs = cb.enumerate_colorings(g)
    assert len(cs) == cb.count_colorings(g)
    assert all(cb.is_proper(g, c) for c in cs)
