"""Amdahl modeling and its reconciliation with the span-based parallelism bound."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .dag import TaskGraph, serial_nodes
from .metrics import parallelism, total_work


class _Unbounded:
    """Asymptote of a graph with no serial work. Compares above every number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unbounded"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("Unbounded")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


Unbounded = _Unbounded()


class Source(enum.Enum):
    FROM_GRAPH = "from_graph"
    USER_SUPPLIED = "user_supplied"


class Governing(enum.Enum):
    LINEAR = "linear"
    AMDAHL = "amdahl"
    SPAN = "span"


@dataclass(frozen=True)
class AmdahlModel:
    sigma: Fraction
    source: Source = Source.USER_SUPPLIED

    def __post_init__(self):
        sigma = Fraction(self.sigma)
        if not 0 <= sigma <= 1:
            raise ValueError(f"serial fraction must lie in [0, 1], got {sigma}")
        object.__setattr__(self, "sigma", sigma)


@dataclass(frozen=True)
class CurvePoint:
    p: int
    linear_bound: Fraction
    amdahl_value: Fraction
    span_bound: Fraction
    governing: Governing


@dataclass(frozen=True)
class ReconciliationReport:
    parallelism: Fraction
    amdahl_asymptote: Fraction | _Unbounded
    sigma: Fraction
    curve: tuple[CurvePoint, ...]
    consistent: bool


def serial_fraction(g: TaskGraph) -> AmdahlModel:
    """Share of the total work carried by nodes that always run alone."""
    serial = sum((g.weights[n] for n in serial_nodes(g)), Fraction(0))
    return AmdahlModel(serial / total_work(g), Source.FROM_GRAPH)


def amdahl_speedup(m: AmdahlModel, p: int) -> Fraction:
    if p < 1:
        raise ValueError(f"processor count must be >= 1, got {p}")
    return Fraction(p) / (1 + m.sigma * (p - 1))


def amdahl_asymptote(m: AmdahlModel) -> Fraction | _Unbounded:
    if m.sigma == 0:
        return Unbounded
    return 1 / m.sigma


def reconcile(g: TaskGraph, p_max: int) -> ReconciliationReport:
    """Tabulate the linear, Amdahl and span speedup bounds for p = 1..p_max.

    ``governing`` names the smallest of the three at each p; ties resolve
    in the order linear, span, amdahl.
    """
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max}")
    s_inf = parallelism(g)
    model = serial_fraction(g)
    curve = []
    for p in range(1, p_max + 1):
        lin = Fraction(p)
        amd = amdahl_speedup(model, p)
        candidates = [(lin, 0, Governing.LINEAR), (s_inf, 1, Governing.SPAN),
                      (amd, 2, Governing.AMDAHL)]
        curve.append(CurvePoint(p, lin, amd, s_inf, min(candidates)[2]))
    asym = amdahl_asymptote(model)
    return ReconciliationReport(
        parallelism=s_inf,
        amdahl_asymptote=asym,
        sigma=model.sigma,
        curve=tuple(curve),
        consistent=asym >= s_inf,
    )


@dataclass(frozen=True)
class AmdahlPoint:
    p: int
    speedup: Fraction


@dataclass(frozen=True)
class AmdahlTable:
    sigma: Fraction
    source: Source
    amdahl_asymptote: Fraction | _Unbounded
    curve: tuple[AmdahlPoint, ...]


def amdahl_table(m: AmdahlModel, p_max: int) -> AmdahlTable:
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max}")
    curve = tuple(AmdahlPoint(p, amdahl_speedup(m, p)) for p in range(1, p_max + 1))
    return AmdahlTable(m.sigma, m.source, amdahl_asymptote(m), curve)
