"""Work-span analysis of weighted task DAGs."""

from .amdahl import (
    AmdahlModel,
    ReconciliationReport,
    Unbounded,
    amdahl_asymptote,
    amdahl_speedup,
    reconcile,
    serial_fraction,
)
from .analysis import SuperlinearReport, Verdict, detect_superlinear
from .dag import (
    Comparability,
    CycleDetected,
    GraphError,
    TaskGraph,
    build_graph,
    compare,
    is_serial_node,
    strip_edges,
    topological_order,
)
from .fixtures import fixture_leiserson
from .graphfile import parse_graph, write_graph
from .metrics import (
    analyze,
    average_parallelism,
    critical_path,
    efficiency,
    level_profile,
    parallelism,
    speedup,
    total_work,
    work_from_profile,
)
from .scheduler import (
    TieBreak,
    check_bounds,
    greedy_schedule,
    optimal_makespan,
    speedup_series,
)

__version__ = "0.1.0"
