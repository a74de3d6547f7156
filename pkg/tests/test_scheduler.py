from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_optimal_unit
from strategies import dags
from workspan import (
    TieBreak,
    build_graph,
    check_bounds,
    critical_path,
    greedy_schedule,
    level_profile,
    optimal_makespan,
    speedup_series,
    total_work,
)
from workspan.scheduler import GraphTooLarge, SeriesSource, make_series

CP = TieBreak.CRITICAL_PATH_PRIORITY


def assert_feasible(g, res):
    placed = {}
    for proc in res.timeline:
        for a, b in zip(proc, proc[1:]):
            assert a.finish <= b.start
        for s in proc:
            assert s.node not in placed
            assert s.finish - s.start == g.weights[s.node]
            placed[s.node] = s
    assert set(placed) == set(g.weights)
    for u, v in g.edges:
        assert placed[u].finish <= placed[v].start
    assert res.makespan == max(s.finish for s in placed.values())


def test_fixture_makespans(fixture_graph):
    assert greedy_schedule(fixture_graph, 1, CP).makespan == 18
    assert greedy_schedule(fixture_graph, 18, CP).makespan == 9
    assert greedy_schedule(fixture_graph, 2, CP).makespan == 11


def test_fixture_two_processor_trace(fixture_graph):
    # Hand simulation with remaining-span priorities, ties by id.
    expected = {
        "a": 0, "b": 1, "c": 2, "d1": 3, "d2": 3, "d3": 4, "e1": 4,
        "e2": 5, "e3": 5, "e4": 6, "f1": 6, "f2": 7, "f3": 7,
        "f4": 8, "g1": 8, "g2": 9, "h": 9, "i": 10,
    }
    res = greedy_schedule(fixture_graph, 2, CP)
    assert res.start_times() == expected
    assert_feasible(fixture_graph, res)


def test_id_order_policy(fixture_graph):
    res = greedy_schedule(fixture_graph, 2, TieBreak.ID_ORDER)
    assert res.tiebreak_policy is TieBreak.ID_ORDER
    assert_feasible(fixture_graph, res)
    assert max(Fraction(18, 2), 9) <= res.makespan <= 18


def test_rational_times():
    g = build_graph([("a", "1/2"), ("b", "1/3"), ("c", "1/6")], [("a", "c"), ("b", "c")])
    res = greedy_schedule(g, 2)
    assert res.makespan == Fraction(2, 3)
    assert_feasible(g, res)


def test_speedup_series_examples(fixture_graph):
    row = speedup_series(fixture_graph, [1]).rows[0]
    assert (row.p, row.t_p, row.s_p, row.e_p) == (1, 18, 1, 1)
    row = speedup_series(fixture_graph, [18]).rows[0]
    assert (row.p, row.t_p, row.s_p, row.e_p) == (18, 9, 2, Fraction(1, 9))
    row = speedup_series(fixture_graph, [2]).rows[0]
    assert (row.p, row.t_p, row.s_p, row.e_p) == (2, 11, Fraction(18, 11), Fraction(9, 11))
    s = speedup_series(fixture_graph, [1, 2, 18])
    assert s.baseline_t1 == 18 and s.source is SeriesSource.SIMULATED


@pytest.mark.parametrize("ps", [[], [2, 1], [1, 1], [0, 2]])
def test_speedup_series_rejects_bad_ps(fixture_graph, ps):
    with pytest.raises(ValueError):
        speedup_series(fixture_graph, ps)


def test_check_bounds(fixture_graph):
    sim = speedup_series(fixture_graph, [1, 2, 3, 5, 18])
    assert check_bounds(fixture_graph, sim).all_satisfied
    rep = check_bounds(fixture_graph, make_series([(2, 8), (4, 5)], 18))
    r2, r4 = rep.rows
    assert (r2.linear_lower, r2.span_lower, r2.satisfied, r2.slack) == (9, 9, False, -1)
    assert (r4.linear_lower, r4.span_lower, r4.satisfied, r4.slack) == (Fraction(9, 2), 9, False, -4)


def test_optimal_examples():
    chain = build_graph([("a", 1), ("b", 1), ("c", 1)], [("a", "b"), ("b", "c")])
    assert optimal_makespan(chain, 2) == 3
    assert optimal_makespan(build_graph([(c, 1) for c in "abcd"]), 2) == 2
    with pytest.raises(GraphTooLarge):
        optimal_makespan(build_graph([(f"n{i}", 1) for i in range(13)]), 2)


def test_optimal_small_weighted():
    # P0: a[0,2] c[2,5]; P1: x[0,3] b[3,5].
    g = build_graph([("a", 2), ("b", 2), ("c", 3), ("x", 3)], [("a", "c")])
    assert optimal_makespan(g, 2) == 5
    # P0: a[0,1] c[1,3]; P1: b[0,2] d[2,3].
    g = build_graph([("a", 1), ("b", 2), ("c", 2), ("d", 1)], [("a", "d")])
    assert optimal_makespan(g, 2) == 3


def test_optimal_beats_both_priority_rules():
    # P0: a[0,3/2] c[3/2,5/2] d[5/2,35/6]; P1: e[0,3] b[3,17/3] f[17/3,37/6].
    g = build_graph([("a", "3/2"), ("b", "8/3"), ("c", 1), ("d", "10/3"), ("e", 3), ("f", "1/2")],
                    [("a", "b"), ("c", "d")])
    assert optimal_makespan(g, 2) == Fraction(37, 6)
    for policy in TieBreak:
        assert greedy_schedule(g, 2, policy).makespan > Fraction(37, 6)


def test_random7_sandwich():
    from workspan.randgraph import random_dag
    import random

    g = random_dag(random.Random(7), 7, 0.3)
    opt = optimal_makespan(g, 2)
    t1, span = total_work(g), critical_path(g).span
    assert max(t1 / 2, span) <= opt <= greedy_schedule(g, 2).makespan


@settings(max_examples=150, deadline=None)
@given(dags(max_nodes=7, unit=True), st.integers(1, 3))
def test_optimal_matches_unit_brute_force(g, p):
    assert optimal_makespan(g, p) == brute_optimal_unit(g, p)


@settings(max_examples=200, deadline=None)
@given(dags(max_nodes=12), st.integers(1, 6), st.sampled_from(list(TieBreak)))
def test_greedy_feasible_and_bounded(g, p, policy):
    res = greedy_schedule(g, p, policy)
    assert_feasible(g, res)
    t1, span = total_work(g), critical_path(g).span
    assert max(t1 / p, span) <= res.makespan <= t1 / p + span
    assert res.makespan <= t1


@settings(max_examples=150, deadline=None)
@given(dags(max_nodes=12, unit=True))
def test_wide_enough_reaches_span(g):
    p = max(level_profile(g).widths)
    assert greedy_schedule(g, p, CP).makespan == critical_path(g).span


@settings(max_examples=100, deadline=None)
@given(dags(max_nodes=7), st.integers(1, 3))
def test_oracle_sandwich(g, p):
    opt = optimal_makespan(g, p)
    assert max(total_work(g) / p, critical_path(g).span) <= opt <= greedy_schedule(g, p).makespan


@settings(max_examples=100, deadline=None)
@given(dags(max_nodes=10))
def test_simulated_efficiency_capped(g):
    s = speedup_series(g, [1, 2, 3, 4, 7])
    assert all(r.e_p <= 1 for r in s.rows)
    assert s.rows[0].t_p == total_work(g)
