"""Rendering of reports as aligned text tables, JSON, or CSV.

Rationals appear in two forms everywhere: exact ``num/den`` text and a
decimal with 12 significant digits. The unbounded asymptote renders as
``inf`` in both.
"""

from __future__ import annotations

import csv
import dataclasses
import decimal
import enum
import io
import json
from fractions import Fraction

from .amdahl import AmdahlTable, ReconciliationReport, _Unbounded
from .analysis import SuperlinearReport
from .metrics import MetricsReport
from .scheduler import BoundReport, SpeedupSeries

FORMATS = ("table", "json", "csv")


def _is_rational(x) -> bool:
    return isinstance(x, (Fraction, _Unbounded))


def exact(x) -> str:
    return "inf" if isinstance(x, _Unbounded) else str(Fraction(x))


def to_decimal(x, digits: int = 12) -> str:
    if isinstance(x, _Unbounded):
        return "inf"
    x = Fraction(x)
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        d = decimal.Decimal(x.numerator) / decimal.Decimal(x.denominator)
    return format(d, "f") if -6 <= d.adjusted() < digits else str(d)


def jsonable(obj):
    if _is_rational(obj):
        return {"exact": exact(obj), "decimal": to_decimal(obj)}
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, (frozenset, set)):
        return [jsonable(x) for x in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return obj


def _cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, (frozenset, set)):
        return " ".join(sorted(x))
    if isinstance(x, (list, tuple)):
        return " ".join(_cell(v) for v in x)
    return str(x)


def _kv(obj, skip=()) -> tuple[str, list[str], list[list]]:
    rows = [[f.name, getattr(obj, f.name)] for f in dataclasses.fields(obj)
            if f.name not in skip]
    return ("summary", ["field", "value"], rows)


def _rows(name: str, items) -> tuple[str, list[str], list[list]]:
    items = list(items)
    cols = [f.name for f in dataclasses.fields(items[0])] if items else []
    return (name, cols, [[getattr(it, c) for c in cols] for it in items])


def sections(report) -> list[tuple[str, list[str], list[list]]]:
    """Split a report into named tables of raw cell values."""
    if isinstance(report, MetricsReport):
        return [_kv(report)]
    if isinstance(report, SpeedupSeries):
        return [_kv(report, skip={"rows"}), _rows("series", report.rows)]
    if isinstance(report, BoundReport):
        return [_rows("bounds", report.rows)]
    if isinstance(report, (ReconciliationReport, AmdahlTable)):
        return [_kv(report, skip={"curve"}), _rows("curve", report.curve)]
    if isinstance(report, SuperlinearReport):
        summary = [["verdict", report.verdict],
                   ["corrected_baseline", report.corrected_baseline]]
        flagged = [[p, e] for p, e in report.flagged]
        return [("summary", ["field", "value"], summary),
                ("flagged", ["p", "e_p"], flagged),
                _rows("corrected_series", report.corrected_series.rows)]
    raise TypeError(f"cannot render {type(report).__name__}")


def render_json(report) -> str:
    return json.dumps(jsonable(report), indent=2, sort_keys=False) + "\n"


def render_csv(report) -> str:
    buf = io.StringIO()
    for k, (name, cols, rows) in enumerate(sections(report)):
        if k:
            buf.write("\n")
        rational_cols = {i for i, _ in enumerate(cols) if any(_is_rational(r[i]) for r in rows)}
        header = []
        for i, c in enumerate(cols):
            header.append(c)
            if i in rational_cols:
                header.append(c + "_decimal")
        w = csv.writer(buf, lineterminator="\n")
        buf.write(f"# {name}\n")
        w.writerow(header)
        for r in rows:
            out = []
            for i, x in enumerate(r):
                if _is_rational(x):
                    out += [exact(x), to_decimal(x)]
                else:
                    out.append(_cell(x))
                    if i in rational_cols:
                        out.append("")
            w.writerow(out)
    return buf.getvalue()


def _text_cell(x) -> str:
    if _is_rational(x):
        e = exact(x)
        return e if "/" not in e else f"{e} ({to_decimal(x)})"
    return _cell(x)


def render_table(report) -> str:
    out = []
    for name, cols, rows in sections(report):
        cells = [[_text_cell(x) for x in r] for r in rows]
        widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(cols)]
        out.append(f"[{name}]")
        out.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        out.append("  ".join("-" * w for w in widths))
        for r in cells:
            out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        out.append("")
    return "\n".join(out)


def render(report, fmt: str = "table") -> str:
    if fmt == "json":
        return render_json(report)
    if fmt == "csv":
        return render_csv(report)
    if fmt == "table":
        return render_table(report)
    raise ValueError(f"unknown format {fmt!r}")
