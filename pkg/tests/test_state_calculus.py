"""States from matchings: switches, loop tracing, and the expansion total."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

import chromatic_bracket as cb
from chromatic_bracket import generators as gen
from chromatic_bracket.errors import NotAMatching
from chromatic_bracket.state_calculus import (
    CROSSED,
    PARALLEL,
    SWITCH_SETTINGS,
    count_state_colorings,
    logical_expansion_count,
    make_state,
    squeeze,
    state_has_isthmus,
)


def test_theta_parallel_splits_into_two_loops():
    g = gen.theta()
    s = make_state(g, {0}, [PARALLEL])
    assert s.loop_count == 2
    assert s.site_graph == ((0, 1),)
    assert count_state_colorings(s) == 6
    assert sorted(map(sorted, s.loops)) == [[1], [2]]


def test_theta_crossed_merges_into_one_loop():
    g = gen.theta()
    s = make_state(g, {0}, [CROSSED])
    assert s.loop_count == 1
    # a site joining a loop to itself can never be colored
    assert s.site_graph == ((0, 0),)
    assert count_state_colorings(s) == 0


def test_theta_expansion_totals_the_coloring_count():
    g = gen.theta()
    for m in cb.enumerate_perfect_matchings(g):
        assert logical_expansion_count(g, m) == 6


def test_every_site_appears_once_in_site_graph():
    g = gen.prism()
    for m in cb.enumerate_perfect_matchings(g):
        for vec in itertools.product(SWITCH_SETTINGS, repeat=len(m)):
            s = make_state(g, m, vec)
            assert len(s.site_graph) == len(m)
            assert len(s.sites) == len(m)
            covered = sorted(e for loop in s.loops for e in loop)
            assert covered == sorted(set(range(g.edge_count)) - set(m))


def test_switch_vector_is_recorded_in_order():
    g = gen.k4()
    m = sorted(cb.enumerate_perfect_matchings(g)[0])
    vec = [PARALLEL, CROSSED][: len(m)] * (len(m) // 2) or [PARALLEL] * len(m)
    vec = vec[: len(m)]
    s = make_state(g, m, vec)
    assert list(s.switches) == list(vec)


def test_dumbbell_state_keeps_its_isthmus():
    g = gen.dumbbell()
    for vec in ([PARALLEL], [CROSSED]):
        s = make_state(g, {1}, vec)
        assert state_has_isthmus(s)
        assert count_state_colorings(s) == 0
        assert squeeze(s) == g
    assert logical_expansion_count(g, {1}) == 0


def test_bridgeless_states_have_no_isthmus():
    for g in (gen.theta(), gen.k4(), gen.petersen()):
        for m in cb.enumerate_perfect_matchings(g):
            for vec in itertools.product(SWITCH_SETTINGS, repeat=len(m)):
                assert not state_has_isthmus(make_state(g, m, vec))


def test_squeeze_returns_the_source_graph_for_every_vector():
    for g in (gen.theta(), gen.k4(), gen.prism(), gen.petersen()):
        for m in cb.enumerate_perfect_matchings(g):
            for vec in itertools.product(SWITCH_SETTINGS, repeat=len(m)):
                assert squeeze(make_state(g, m, vec)) == g


def test_four_touching_fixture_colorable_only_when_all_crossed():
    g, m = gen.four_touching_fixture()
    order = len(m)
    colorable = {}
    for vec in itertools.product(SWITCH_SETTINGS, repeat=order):
        n = count_state_colorings(make_state(g, m, vec))
        if n:
            colorable[vec] = n
    assert colorable == {(CROSSED,) * order: 6}


def test_four_touching_all_parallel_is_the_four_loop_obstruction():
    # four loops, each pair joined by a site: a 3-coloring cannot exist
    g, m = gen.four_touching_fixture()
    s = make_state(g, m, [PARALLEL] * len(m))
    assert s.loop_count == 4
    assert sorted(tuple(sorted(p)) for p in s.site_graph) == [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    ]
    assert count_state_colorings(s) == 0


def test_make_state_validates_input():
    g = gen.k4()
    m = cb.enumerate_perfect_matchings(g)[0]
    with pytest.raises(ValueError):
        make_state(g, m, [PARALLEL])
    with pytest.raises(ValueError):
        make_state(g, m, ["diagonal", PARALLEL])
    with pytest.raises(NotAMatching):
        make_state(g, {0, 1}, [PARALLEL, PARALLEL])


def test_expansion_matches_brute_force_on_fixtures():
    for name in ("theta", "k4", "prism", "k33", "petersen", "truncated_tetrahedron"):
        g = getattr(gen, name)()
        want = cb.count_colorings(g)
        for m in cb.enumerate_perfect_matchings(g):
            assert logical_expansion_count(g, m) == want, name


def test_expansion_workers_agree_with_serial():
    g = gen.k33()
    m = cb.enumerate_perfect_matchings(g)[0]
    assert logical_expansion_count(g, m, workers=2) == logical_expansion_count(g, m)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_expansion_matches_brute_force_on_random_graphs(seed: int) -> None:
    g = gen.random_cubic(8, seed)
    want = cb.count_colorings(g)
    for m in cb.enumerate_perfect_matchings(g):
        assert logical_expansion_count(g, m) == want


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_squeeze_round_trip_on_random_graphs(seed: int) -> None:
    g = gen.random_cubic(8, seed)
    for m in cb.enumerate_perfect_matchings(g):
        vec = [PARALLEL if i % 2 else CROSSED for i in range(len(m))]
        assert squeeze(make_state(g, m, vec)) == g
