"""Weighted task graphs: construction, validation, ordering and reachability."""

from __future__ import annotations

import enum
import heapq
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

NodeId = str

NODE_ID_RE = re.compile(r"[A-Za-z0-9_]+")


class GraphError(ValueError):
    """Base class for every graph validation failure.

    ``line`` is filled in when the error originates from a graph file.
    """

    line: int | None = None

    def __str__(self) -> str:
        msg = super().__str__()
        if self.line is not None:
            return f"line {self.line}: {msg}"
        return msg


class CycleDetected(GraphError):
    def __init__(self, cycle: list[NodeId]):
        self.cycle = cycle
        super().__init__("cycle detected: " + " -> ".join(cycle))


class UnknownEndpoint(GraphError):
    def __init__(self, edge: tuple[NodeId, NodeId], node: NodeId):
        self.edge = edge
        self.node = node
        super().__init__(f"edge {edge[0]} -> {edge[1]} references unknown node {node!r}")


class DuplicateNode(GraphError):
    def __init__(self, node: NodeId):
        self.node = node
        super().__init__(f"duplicate node {node!r}")


class DuplicateEdge(GraphError):
    def __init__(self, edge: tuple[NodeId, NodeId]):
        self.edge = edge
        super().__init__(f"duplicate edge {edge[0]} -> {edge[1]}")


class SelfEdge(GraphError):
    def __init__(self, edge: tuple[NodeId, NodeId]):
        self.edge = edge
        super().__init__(f"self edge on {edge[0]!r}")


class NonpositiveWeight(GraphError):
    def __init__(self, node: NodeId, weight):
        self.node = node
        self.weight = weight
        super().__init__(f"node {node!r} has nonpositive weight {weight}")


class InvalidNodeId(GraphError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"invalid node id {node!r} (expected [A-Za-z0-9_]+)")


class EmptyGraph(GraphError):
    def __init__(self):
        super().__init__("graph has no nodes")


class UnknownNode(GraphError, KeyError):
    def __init__(self, node: NodeId):
        self.node = node
        GraphError.__init__(self, f"unknown node {node!r}")

    __str__ = GraphError.__str__


class Comparability(enum.Enum):
    PRECEDES = "precedes"
    SUCCEEDS = "succeeds"
    INCOMPARABLE = "incomparable"
    SAME = "same"


def to_weight(value) -> Fraction:
    """Coerce ``value`` to an exact rational. Strings are parsed as decimal
    (``"2.5"``) or ratio (``"5/2"``) text."""
    if isinstance(value, bool):
        raise TypeError("boolean is not a weight")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True, eq=False)
class TaskGraph:
    """Immutable weighted DAG. Build instances with :func:`build_graph`."""

    weights: Mapping[NodeId, Fraction]
    edges: frozenset[tuple[NodeId, NodeId]]
    succs: Mapping[NodeId, tuple[NodeId, ...]] = field(repr=False)
    preds: Mapping[NodeId, tuple[NodeId, ...]] = field(repr=False)
    order: tuple[NodeId, ...] = field(repr=False)
    descendants: Mapping[NodeId, frozenset[NodeId]] = field(repr=False)

    @property
    def nodes(self) -> tuple[NodeId, ...]:
        return tuple(sorted(self.weights))

    def __len__(self) -> int:
        return len(self.weights)

    def __contains__(self, node) -> bool:
        return node in self.weights

    def __eq__(self, other) -> bool:
        if not isinstance(other, TaskGraph):
            return NotImplemented
        return dict(self.weights) == dict(other.weights) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self.weights.items()), self.edges))

    def weight(self, node: NodeId) -> Fraction:
        try:
            return self.weights[node]
        except KeyError:
            raise UnknownNode(node) from None


def _find_cycle(nodes: Iterable[NodeId], preds: Mapping[NodeId, list[NodeId]]) -> list[NodeId]:
    """Return one cycle among ``nodes`` as ``[x, ..., x]``, rotated so the
    smallest id leads. ``nodes`` are the leftovers of Kahn's algorithm."""
    remaining = set(nodes)
    # Each leftover node keeps at least one leftover predecessor, so walking
    # predecessors must revisit a node.
    seen: dict[NodeId, int] = {}
    walk: list[NodeId] = []
    cur = min(remaining)
    while cur not in seen:
        seen[cur] = len(walk)
        walk.append(cur)
        cur = min(p for p in preds[cur] if p in remaining)
    cycle = walk[seen[cur]:][::-1]
    i = cycle.index(min(cycle))
    cycle = cycle[i:] + cycle[:i]
    return cycle + [cycle[0]]


def build_graph(nodes: Iterable[tuple[NodeId, object]],
                edges: Iterable[tuple[NodeId, NodeId]] = ()) -> TaskGraph:
    """Validate nodes and precedence edges and return a :class:`TaskGraph`.

    Raises a :class:`GraphError` subclass on the first problem found:
    invalid ids, duplicates, nonpositive weights, unknown endpoints,
    self edges, cycles, or an empty node list.
    """
    weights: dict[NodeId, Fraction] = {}
    for node, w in nodes:
        if not isinstance(node, str) or not NODE_ID_RE.fullmatch(node):
            raise InvalidNodeId(node)
        if node in weights:
            raise DuplicateNode(node)
        w = to_weight(w)
        if w <= 0:
            raise NonpositiveWeight(node, w)
        weights[node] = w
    if not weights:
        raise EmptyGraph()

    edge_set: set[tuple[NodeId, NodeId]] = set()
    for u, v in edges:
        e = (u, v)
        for end in e:
            if end not in weights:
                raise UnknownEndpoint(e, end)
        if u == v:
            raise SelfEdge(e)
        if e in edge_set:
            raise DuplicateEdge(e)
        edge_set.add(e)

    succs: dict[NodeId, list[NodeId]] = {n: [] for n in weights}
    preds: dict[NodeId, list[NodeId]] = {n: [] for n in weights}
    for u, v in edge_set:
        succs[u].append(v)
        preds[v].append(u)
    for n in weights:
        succs[n].sort()
        preds[n].sort()

    # Kahn's algorithm, smallest id first among ready nodes.
    indeg = {n: len(preds[n]) for n in weights}
    heap = [n for n, d in indeg.items() if d == 0]
    heapq.heapify(heap)
    order: list[NodeId] = []
    while heap:
        n = heapq.heappop(heap)
        order.append(n)
        for s in succs[n]:
            indeg[s] -= 1
            if indeg[s] == 0:
                heapq.heappush(heap, s)
    if len(order) != len(weights):
        raise CycleDetected(_find_cycle((n for n, d in indeg.items() if d > 0), preds))

    desc: dict[NodeId, frozenset[NodeId]] = {}
    for n in reversed(order):
        acc: set[NodeId] = set()
        for s in succs[n]:
            acc.add(s)
            acc |= desc[s]
        desc[n] = frozenset(acc)

    return TaskGraph(
        weights=dict(sorted(weights.items())),
        edges=frozenset(edge_set),
        succs={n: tuple(v) for n, v in succs.items()},
        preds={n: tuple(v) for n, v in preds.items()},
        order=tuple(order),
        descendants=desc,
    )


def topological_order(g: TaskGraph) -> list[NodeId]:
    """Topological order; among ready nodes the smallest id goes first."""
    return list(g.order)


def _check(g: TaskGraph, *nodes: NodeId) -> None:
    for n in nodes:
        if n not in g.weights:
            raise UnknownNode(n)


def compare(g: TaskGraph, u: NodeId, v: NodeId) -> Comparability:
    _check(g, u, v)
    if u == v:
        return Comparability.SAME
    if v in g.descendants[u]:
        return Comparability.PRECEDES
    if u in g.descendants[v]:
        return Comparability.SUCCEEDS
    return Comparability.INCOMPARABLE


def is_serial_node(g: TaskGraph, v: NodeId) -> bool:
    """True when ``v`` is ordered against every other node, i.e. it runs
    alone under any feasible schedule."""
    _check(g, v)
    ancestors = sum(1 for u in g.weights if v in g.descendants[u])
    return ancestors + len(g.descendants[v]) == len(g) - 1


def serial_nodes(g: TaskGraph) -> list[NodeId]:
    return [v for v in g.order if is_serial_node(g, v)]


def strip_edges(g: TaskGraph) -> TaskGraph:
    """Same nodes and weights with every edge removed (depth-one graph)."""
    if not g.edges:
        return g
    return build_graph(g.weights.items())
