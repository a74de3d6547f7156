"""Greedy list scheduling on p identical processors, plus an exact oracle."""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .dag import NodeId, TaskGraph
from .metrics import critical_path, efficiency, remaining_span, speedup, total_work

OPTIMAL_NODE_CAP = 12


class GraphTooLarge(ValueError):
    pass


class TieBreak(enum.Enum):
    CRITICAL_PATH_PRIORITY = "critical_path_priority"
    ID_ORDER = "id_order"


class SeriesSource(enum.Enum):
    SIMULATED = "simulated"
    MEASURED = "measured"


@dataclass(frozen=True)
class Slot:
    node: NodeId
    start: Fraction
    finish: Fraction


@dataclass(frozen=True)
class ScheduleResult:
    p: int
    makespan: Fraction
    timeline: tuple[tuple[Slot, ...], ...]
    tiebreak_policy: TieBreak

    def start_times(self) -> dict[NodeId, Fraction]:
        return {s.node: s.start for proc in self.timeline for s in proc}


@dataclass(frozen=True)
class SeriesRow:
    p: int
    t_p: Fraction
    s_p: Fraction
    e_p: Fraction


@dataclass(frozen=True)
class SpeedupSeries:
    rows: tuple[SeriesRow, ...]
    baseline_t1: Fraction
    source: SeriesSource


@dataclass(frozen=True)
class BoundRow:
    p: int
    t_p: Fraction
    linear_lower: Fraction
    span_lower: Fraction
    satisfied: bool
    slack: Fraction


@dataclass(frozen=True)
class BoundReport:
    rows: tuple[BoundRow, ...]

    @property
    def all_satisfied(self) -> bool:
        return all(r.satisfied for r in self.rows)


def _priority_key(g: TaskGraph, policy: TieBreak):
    if policy is TieBreak.CRITICAL_PATH_PRIORITY:
        rem = remaining_span(g)
        return lambda n: (-rem[n], n)
    if policy is TieBreak.ID_ORDER:
        return lambda n: (n,)
    raise ValueError(f"unknown tie-break policy {policy!r}")


def greedy_schedule(g: TaskGraph, p: int,
                    policy: TieBreak = TieBreak.CRITICAL_PATH_PRIORITY) -> ScheduleResult:
    """Event-driven work-conserving list scheduling.

    At every event time, finished tasks release their successors, then idle
    processors (lowest index first) take the highest-priority ready tasks.
    Priorities are static.
    """
    if p < 1:
        raise ValueError(f"processor count must be >= 1, got {p}")
    key = _priority_key(g, policy)
    waiting = {n: len(g.preds[n]) for n in g.weights}
    ready = [(key(n), n) for n, d in waiting.items() if d == 0]
    heapq.heapify(ready)
    idle = list(range(p))  # heap of free processor indices
    running: list[tuple[Fraction, int, NodeId]] = []  # (finish, proc, node)
    timeline: list[list[Slot]] = [[] for _ in range(p)]
    now = Fraction(0)

    while ready or running:
        while ready and idle:
            _, n = heapq.heappop(ready)
            proc = heapq.heappop(idle)
            finish = now + g.weights[n]
            timeline[proc].append(Slot(n, now, finish))
            heapq.heappush(running, (finish, proc, n))
        now = running[0][0]
        while running and running[0][0] == now:
            _, proc, n = heapq.heappop(running)
            heapq.heappush(idle, proc)
            for s in g.succs[n]:
                waiting[s] -= 1
                if waiting[s] == 0:
                    heapq.heappush(ready, (key(s), s))

    return ScheduleResult(p, now, tuple(tuple(t) for t in timeline), policy)


def _check_ps(ps: Sequence[int]) -> None:
    if not ps:
        raise ValueError("processor list must not be empty")
    if any(p < 1 for p in ps):
        raise ValueError("processor counts must be >= 1")
    if any(b <= a for a, b in zip(ps, ps[1:])):
        raise ValueError("processor counts must be strictly increasing")


def make_series(points: Iterable[tuple[int, object]], baseline_t1,
                source: SeriesSource = SeriesSource.MEASURED) -> SpeedupSeries:
    """Build a series from ``(p, t_p)`` pairs against a given serial baseline."""
    points = [(int(p), Fraction(t)) for p, t in points]
    _check_ps([p for p, _ in points])
    t1 = Fraction(baseline_t1)
    rows = []
    for p, tp in points:
        sp = speedup(t1, tp)
        rows.append(SeriesRow(p, tp, sp, efficiency(sp, p)))
    return SpeedupSeries(tuple(rows), t1, source)


def speedup_series(g: TaskGraph, ps: Sequence[int],
                   policy: TieBreak = TieBreak.CRITICAL_PATH_PRIORITY) -> SpeedupSeries:
    _check_ps(ps)
    points = [(p, greedy_schedule(g, p, policy).makespan) for p in ps]
    return make_series(points, total_work(g), SeriesSource.SIMULATED)


def check_bounds(g: TaskGraph, series: SpeedupSeries) -> BoundReport:
    """Test each row against T_p >= T1/p and T_p >= T_inf, exactly."""
    t1 = total_work(g)
    span = critical_path(g).span
    rows = []
    for r in series.rows:
        if r.t_p <= 0:
            raise ValueError(f"t_p must be positive, got {r.t_p} at p={r.p}")
        lin = t1 / r.p
        floor = max(lin, span)
        rows.append(BoundRow(r.p, r.t_p, lin, span, r.t_p >= floor, r.t_p - floor))
    return BoundReport(tuple(rows))


def optimal_makespan(g: TaskGraph, p: int) -> Fraction:
    """Minimum makespan over all non-preemptive precedence-feasible schedules.

    Exhaustive search over start decisions at completion events. Some optimal
    schedule starts every task at time 0 or at some task's completion, so
    deciding only at those instants (including the choice to leave processors
    idle) covers the optimum.
    """
    if p < 1:
        raise ValueError(f"processor count must be >= 1, got {p}")
    if len(g) > OPTIMAL_NODE_CAP:
        raise GraphTooLarge(f"optimal_makespan is capped at {OPTIMAL_NODE_CAP} nodes, got {len(g)}")
    nodes = g.nodes
    idx = {n: i for i, n in enumerate(nodes)}
    pred_mask = [sum(1 << idx[q] for q in g.preds[n]) for n in nodes]
    weight = [g.weights[n] for n in nodes]
    full = (1 << len(nodes)) - 1

    @lru_cache(maxsize=None)
    def best(done: int, running: tuple[tuple[int, Fraction], ...]) -> Fraction:
        # ``running`` holds (node index, remaining time), sorted.
        if done == full:
            return Fraction(0)
        busy = 0
        for i, _ in running:
            busy |= 1 << i
        ready = [i for i in range(len(nodes))
                 if not (done | busy) >> i & 1 and pred_mask[i] & done == pred_mask[i]]
        free = p - len(running)
        result = None
        for k in range(min(free, len(ready)), -1, -1):
            for chosen in combinations(ready, k):
                now_running = list(running) + [(i, weight[i]) for i in chosen]
                if not now_running:
                    continue
                step = min(r for _, r in now_running)
                new_done = done
                rest = []
                for i, r in now_running:
                    if r == step:
                        new_done |= 1 << i
                    else:
                        rest.append((i, r - step))
                cand = step + best(new_done, tuple(sorted(rest)))
                if result is None or cand < result:
                    result = cand
        return result

    return best(0, ())
