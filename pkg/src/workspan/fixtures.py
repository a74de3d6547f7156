"""The 18-node unit-weight example graph.

Only its metric profile is known (18 nodes, row widths 1,1,1,3,4,4,2,1,1,
a 9-node critical path, 4 nodes ordered against everything else); the
edges below are one concrete DAG with exactly that profile.
"""

from __future__ import annotations

from .dag import TaskGraph, build_graph

LEISERSON_NODES = (
    "a", "b", "c", "d1", "d2", "d3", "e1", "e2", "e3", "e4",
    "f1", "f2", "f3", "f4", "g1", "g2", "h", "i",
)

LEISERSON_EDGES = (
    ("a", "b"), ("b", "c"),
    ("c", "d1"), ("c", "d2"), ("c", "d3"),
    ("d1", "e1"), ("d1", "e2"), ("d2", "e3"), ("d3", "e4"),
    ("e1", "f1"), ("e2", "f2"), ("e3", "f3"), ("e4", "f4"),
    ("f1", "g1"), ("f2", "g1"), ("f3", "g2"), ("f4", "g2"),
    ("g1", "h"), ("h", "i"), ("g2", "i"),
)


def fixture_leiserson() -> TaskGraph:
    return build_graph([(n, 1) for n in LEISERSON_NODES], LEISERSON_EDGES)


FIXTURES = {"leiserson": fixture_leiserson}
