from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import dags, seeded_dags
from workspan import build_graph, fixture_leiserson, parse_graph, write_graph
from workspan.dag import (
    CycleDetected,
    DuplicateEdge,
    DuplicateNode,
    EmptyGraph,
    NonpositiveWeight,
    SelfEdge,
    UnknownEndpoint,
)
from workspan.graphfile import GraphSyntaxError, MeasurementError, format_number, parse_measurements

FIXTURE_FILE = Path(__file__).resolve().parent.parent / "fixtures" / "leiserson.dag"


def test_parse_defaults():
    g = parse_graph("node a\nnode b\nedge a b\n")
    assert g == build_graph([("a", 1), ("b", 1)], [("a", "b")])


def test_parse_decimal_weight():
    assert parse_graph("node a 2.5\n").weights == {"a": Fraction(5, 2)}


def test_parse_comments_and_forward_refs():
    doc = "# header\nedge x y   # before nodes\n\nnode y 1/3\nnode x .5\n"
    g = parse_graph(doc)
    assert g.weights == {"x": Fraction(1, 2), "y": Fraction(1, 3)}
    assert g.edges == {("x", "y")}


@pytest.mark.parametrize("doc, exc, line", [
    ("node a\nbogus\n", GraphSyntaxError, 2),
    ("node a b c\n", GraphSyntaxError, 1),
    ("node a 1e3\n", GraphSyntaxError, 1),
    ("node a-b\n", GraphSyntaxError, 1),
    ("node a\n\nnode a 2\n", DuplicateNode, 3),
    ("node a\nnode b\nedge a b\nedge a b\n", DuplicateEdge, 4),
    ("node a\nedge a a\n", SelfEdge, 2),
    ("node a\nedge a q\n", UnknownEndpoint, 2),
    ("node a\nnode b 0\n", NonpositiveWeight, 2),
    ("node a\nnode b -2\n", NonpositiveWeight, 2),
    ("# nothing\n\n", EmptyGraph, 2),
    ("node a\nnode b\nnode c\nedge a b\nedge b c\nedge c a\n", CycleDetected, 6),
])
def test_parse_errors_carry_lines(doc, exc, line):
    with pytest.raises(exc) as info:
        parse_graph(doc)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_write_examples():
    assert write_graph(build_graph([("a", 1)])) == "node a 1\n"
    chain = build_graph([("b", 1), ("a", 1)], [("a", "b")])
    assert write_graph(chain) == "node a 1\nnode b 1\nedge a b\n"


@pytest.mark.parametrize("x, text", [
    (Fraction(3), "3"), (Fraction(5, 2), "2.5"), (Fraction(13, 4), "3.25"),
    (Fraction(1, 3), "1/3"), (Fraction(1, 80), "0.0125"), (Fraction(-7, 4), "-1.75"),
])
def test_format_number(x, text):
    assert format_number(x) == text


def test_fixture_file_round_trip():
    text = FIXTURE_FILE.read_text()
    g = parse_graph(text)
    assert g == fixture_leiserson()
    assert write_graph(g) == text
    assert write_graph(fixture_leiserson()) == write_graph(fixture_leiserson())


@settings(max_examples=200, deadline=None)
@given(dags(max_nodes=10))
def test_round_trip(g):
    text = write_graph(g)
    assert parse_graph(text) == g
    assert write_graph(parse_graph(text)) == text


def test_round_trip_rational_batch():
    for g in seeded_dags(100, 20, "rational", seed=11):
        assert parse_graph(write_graph(g)) == g


def test_parse_measurements():
    rows = parse_measurements("p,t_p\n4,6\n1,36\n2,11.5\n")
    assert rows == [(1, 36), (2, Fraction(23, 2)), (4, 6)]


@pytest.mark.parametrize("text", [
    "", "p,t\n1,2\n", "p,t_p\n", "p,t_p\n0,3\n", "p,t_p\n1,0\n",
    "p,t_p\n1,2\n1,3\n", "p,t_p\nx,3\n", "p,t_p\n1,2,3\n",
])
def test_bad_measurements(text):
    with pytest.raises(MeasurementError):
        parse_measurements(text)
