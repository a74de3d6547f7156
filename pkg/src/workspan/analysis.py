"""Superlinear-speedup diagnosis by rebaselining."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .scheduler import SpeedupSeries, make_series


class Verdict(enum.Enum):
    NO_SUPERLINEARITY = "no_superlinearity"
    BASELINE_ARTIFACT = "baseline_artifact"


@dataclass(frozen=True)
class SuperlinearReport:
    flagged: tuple[tuple[int, Fraction], ...]
    corrected_baseline: Fraction
    corrected_series: SpeedupSeries
    verdict: Verdict


def detect_superlinear(series: SpeedupSeries) -> SuperlinearReport:
    """Flag rows with efficiency above 1 and rebuild the series on the
    baseline min_p(p * t_p), the largest serial time that keeps every
    efficiency at or below 1.
    """
    if not series.rows:
        raise ValueError("series has no rows")
    flagged = tuple((r.p, r.e_p) for r in series.rows if r.e_p > 1)
    baseline = min(r.p * r.t_p for r in series.rows)
    corrected = make_series(((r.p, r.t_p) for r in series.rows), baseline, series.source)
    verdict = Verdict.BASELINE_ARTIFACT if flagged else Verdict.NO_SUPERLINEARITY
    return SuperlinearReport(flagged, baseline, corrected, verdict)
