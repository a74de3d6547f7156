"""Line-based graph files and ``p,t_p`` measurement CSVs.

Graph file grammar, one statement per line::

    # comment
    node <id> [<weight>]      weight is decimal ("2.5") or ratio ("1/3"), default 1
    edge <src> <dst>
"""

from __future__ import annotations

import csv
import io
import re
from fractions import Fraction

from .dag import (
    NODE_ID_RE,
    CycleDetected,
    DuplicateEdge,
    DuplicateNode,
    EmptyGraph,
    GraphError,
    TaskGraph,
    build_graph,
)

_WEIGHT_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)(/\d+)?")


class GraphSyntaxError(GraphError):
    def __init__(self, line: int, msg: str):
        super().__init__(msg)
        self.line = line


class MeasurementError(ValueError):
    pass


def parse_number(text: str) -> Fraction:
    text = text.strip()
    if not _WEIGHT_RE.fullmatch(text):
        raise ValueError(f"not a decimal or ratio: {text!r}")
    num, _, den = text.partition("/")
    value = Fraction(num)
    if den:
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        value /= int(den)
    return value


def parse_graph(doc: str) -> TaskGraph:
    """Parse graph file text. Every error carries a 1-based ``line``."""
    nodes: list[tuple[str, Fraction]] = []
    edges: list[tuple[str, str]] = []
    node_line: dict[str, int] = {}
    edge_line: dict[tuple[str, str], int] = {}
    repeat_line: dict = {}
    lines = doc.splitlines()

    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        kind, args = parts[0], parts[1:]
        if kind == "node" and len(args) in (1, 2):
            if not NODE_ID_RE.fullmatch(args[0]):
                raise GraphSyntaxError(lineno, f"invalid node id {args[0]!r}")
            try:
                w = parse_number(args[1]) if len(args) == 2 else Fraction(1)
            except ValueError as exc:
                raise GraphSyntaxError(lineno, str(exc)) from None
            nodes.append((args[0], w))
            _note(args[0], lineno, node_line, repeat_line)
        elif kind == "edge" and len(args) == 2:
            for a in args:
                if not NODE_ID_RE.fullmatch(a):
                    raise GraphSyntaxError(lineno, f"invalid node id {a!r}")
            e = (args[0], args[1])
            _note(e, lineno, edge_line, repeat_line)
            edges.append(e)
        else:
            raise GraphSyntaxError(lineno, f"cannot parse statement {text!r}")

    try:
        return build_graph(nodes, edges)
    except GraphError as exc:
        exc.line = _blame_line(exc, node_line, edge_line, repeat_line, len(lines))
        raise


def _note(key, lineno: int, first: dict, repeat: dict) -> None:
    if key not in first:
        first[key] = lineno
    else:
        repeat.setdefault(key, lineno)


def _blame_line(exc: GraphError, node_line, edge_line, repeat_line, nlines: int) -> int:
    if isinstance(exc, CycleDetected):
        # Report the edge that closes the witness cycle last in the file.
        cyc = exc.cycle
        return max(edge_line[(a, b)] for a, b in zip(cyc, cyc[1:]))
    if isinstance(exc, EmptyGraph):
        return max(nlines, 1)
    if isinstance(exc, (DuplicateNode, DuplicateEdge)):
        return repeat_line[getattr(exc, "edge", None) or exc.node]
    edge = getattr(exc, "edge", None)
    if edge is not None:
        return edge_line[edge]
    return node_line[exc.node]


def format_number(x: Fraction) -> str:
    """Shortest exact text: integer, terminating decimal, or ``num/den``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{x.numerator}/{x.denominator}"
    k = max(twos, fives)
    digits = str(abs(x.numerator) * 10**k // x.denominator).rjust(k + 1, "0")
    sign = "-" if x < 0 else ""
    return f"{sign}{digits[:-k]}.{digits[-k:]}"


def write_graph(g: TaskGraph) -> str:
    """Canonical text: nodes sorted by id, then edges sorted."""
    out = [f"node {n} {format_number(w)}\n" for n, w in sorted(g.weights.items())]
    out += [f"edge {u} {v}\n" for u, v in sorted(g.edges)]
    return "".join(out)


def read_graph(path) -> TaskGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def parse_measurements(text: str) -> list[tuple[int, Fraction]]:
    """Parse a ``p,t_p`` CSV into rows sorted by p."""
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if r and any(c.strip() for c in r)]
    if not rows or [c.strip() for c in rows[0]] != ["p", "t_p"]:
        raise MeasurementError("measurement CSV must start with header 'p,t_p'")
    out: dict[int, Fraction] = {}
    for lineno, row in enumerate(rows[1:], 2):
        if len(row) != 2:
            raise MeasurementError(f"row {lineno}: expected 2 columns, got {len(row)}")
        try:
            p = int(row[0].strip())
            tp = parse_number(row[1])
        except ValueError as exc:
            raise MeasurementError(f"row {lineno}: {exc}") from None
        if p < 1:
            raise MeasurementError(f"row {lineno}: p must be >= 1")
        if tp <= 0:
            raise MeasurementError(f"row {lineno}: t_p must be positive")
        if p in out:
            raise MeasurementError(f"row {lineno}: duplicate p={p}")
        out[p] = tp
    if not out:
        raise MeasurementError("measurement CSV has no rows")
    return sorted(out.items())
