"""Work, span, level decomposition, parallelism, speedup and efficiency."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dag import NodeId, TaskGraph, serial_nodes

PATH_COUNT_CAP = 1000


class NonpositiveTime(ValueError):
    pass


@dataclass(frozen=True)
class CriticalPathReport:
    span: Fraction
    path: tuple[NodeId, ...]
    path_count_hint: int | str  # exact count, or "many" above PATH_COUNT_CAP


@dataclass(frozen=True)
class LevelRow:
    level_index: int
    node_ids: frozenset[NodeId]
    width: int
    row_time: Fraction
    uniform: bool


@dataclass(frozen=True)
class LevelProfile:
    rows: tuple[LevelRow, ...]

    @property
    def depth(self) -> int:
        return len(self.rows)

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(r.width for r in self.rows)

    @property
    def uniform(self) -> bool:
        """True when every row holds nodes of a single weight."""
        return all(r.uniform for r in self.rows)


@dataclass(frozen=True)
class MetricsReport:
    t1: Fraction
    t_inf: Fraction
    work_w: Fraction
    total_time_t: Fraction
    avg_parallelism: Fraction
    parallelism: Fraction
    serial_fraction: Fraction
    serial_nodes: tuple[NodeId, ...]
    critical_path: tuple[NodeId, ...]
    path_count_hint: int | str
    level_widths: tuple[int, ...]
    uniform_rows: bool


def total_work(g: TaskGraph) -> Fraction:
    return sum(g.weights.values(), Fraction(0))


def remaining_span(g: TaskGraph) -> dict[NodeId, Fraction]:
    """Heaviest path weight from each node to a sink, the node included."""
    rem: dict[NodeId, Fraction] = {}
    for n in reversed(g.order):
        rem[n] = g.weights[n] + max((rem[s] for s in g.succs[n]), default=Fraction(0))
    return rem


def critical_path(g: TaskGraph) -> CriticalPathReport:
    rem = remaining_span(g)
    span = max(rem.values())
    # Largest remaining span first, then smallest id.
    key = lambda n: (-rem[n], n)  # noqa: E731
    cur = min(g.weights, key=key)
    path = [cur]
    while g.succs[cur]:
        cur = min(g.succs[cur], key=key)
        path.append(cur)

    # Number of heaviest paths starting at each node; positive weights mean
    # every heaviest path starts at a source.
    count: dict[NodeId, int] = {}
    for n in reversed(g.order):
        tail = rem[n] - g.weights[n]
        count[n] = sum(count[s] for s in g.succs[n] if rem[s] == tail) or 1
    total = sum(count[n] for n in g.weights if rem[n] == span)
    return CriticalPathReport(
        span=span,
        path=tuple(path),
        path_count_hint=total if total <= PATH_COUNT_CAP else "many",
    )


def node_levels(g: TaskGraph) -> dict[NodeId, int]:
    """Earliest-start level: sources at 1, others one past their deepest parent."""
    level: dict[NodeId, int] = {}
    for n in g.order:
        level[n] = 1 + max((level[p] for p in g.preds[n]), default=0)
    return level


def level_profile(g: TaskGraph) -> LevelProfile:
    """Horizontal-row decomposition of the graph.

    A row's time is the largest weight in it, which is the shared weight
    when the row is uniform.
    """
    level = node_levels(g)
    buckets: dict[int, list[NodeId]] = {}
    for n, lv in level.items():
        buckets.setdefault(lv, []).append(n)
    rows = []
    for lv in sorted(buckets):
        ids = buckets[lv]
        ws = {g.weights[n] for n in ids}
        rows.append(LevelRow(lv, frozenset(ids), len(ids), max(ws), len(ws) == 1))
    return LevelProfile(tuple(rows))


def work_from_profile(p: LevelProfile) -> tuple[Fraction, Fraction]:
    """Return ``(W, T)``: the sum of time-node products and the sum of row times."""
    w = sum((r.row_time * r.width for r in p.rows), Fraction(0))
    t = sum((r.row_time for r in p.rows), Fraction(0))
    return w, t


def average_parallelism(g: TaskGraph) -> Fraction:
    w, t = work_from_profile(level_profile(g))
    return w / t


def parallelism(g: TaskGraph) -> Fraction:
    return total_work(g) / critical_path(g).span


def speedup(t1, tp) -> Fraction:
    tp = Fraction(tp)
    if tp <= 0:
        raise NonpositiveTime(f"parallel time must be positive, got {tp}")
    return Fraction(t1) / tp


def efficiency(sp, p: int) -> Fraction:
    if p < 1:
        raise ValueError(f"processor count must be >= 1, got {p}")
    return Fraction(sp) / p


def analyze(g: TaskGraph) -> MetricsReport:
    """Collect every single-graph metric in one report."""
    t1 = total_work(g)
    cp = critical_path(g)
    prof = level_profile(g)
    w, t = work_from_profile(prof)
    serial = serial_nodes(g)
    return MetricsReport(
        t1=t1,
        t_inf=cp.span,
        work_w=w,
        total_time_t=t,
        avg_parallelism=w / t,
        parallelism=t1 / cp.span,
        serial_fraction=sum((g.weights[n] for n in serial), Fraction(0)) / t1,
        serial_nodes=tuple(serial),
        critical_path=cp.path,
        path_count_hint=cp.path_count_hint,
        level_widths=prof.widths,
        uniform_rows=prof.uniform,
    )
