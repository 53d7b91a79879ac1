"""CSV datasets in, JSON reports out."""

from __future__ import annotations

import json
import math
import re

from .errors import CsvParseError, EmptyDataset
from .model import R_DEFINITION, Dataset, FitReport

_DECIMAL = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_NONFINITE = re.compile(r"[+-]?(nan|inf|infinity)", re.IGNORECASE)


def _number(field: str, line: int, column: int) -> float:
    if _DECIMAL.fullmatch(field):
        return float(field)
    if _NONFINITE.fullmatch(field):
        raise CsvParseError(line, column, f"non-finite value {field!r}")
    raise CsvParseError(line, column, f"cannot parse {field!r} as a number")


def parse_csv(text: str | bytes) -> Dataset:
    """Parse ``x,y`` rows.

    Blank lines and lines starting with ``#`` are skipped.  A single ``x,y``
    header (any case) is accepted before the first data row.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    xs, ys = [], []
    header_allowed = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 2:
            raise CsvParseError(lineno, None, f"expected 2 fields, found {len(fields)}")
        if header_allowed and not _DECIMAL.fullmatch(fields[0]) and not _NONFINITE.fullmatch(fields[0]):
            if [f.lower() for f in fields] != ["x", "y"]:
                raise CsvParseError(lineno, 1, f"unrecognised header {line!r}")
            header_allowed = False
            continue
        header_allowed = False
        xs.append(_number(fields[0], lineno, 1))
        ys.append(_number(fields[1], lineno, 2))
    if len(xs) < 2:
        raise EmptyDataset(f"need at least 2 data rows, found {len(xs)}")
    return Dataset(xs, ys)


def format_csv(dataset: Dataset, header: bool = True) -> str:
    rows = ["x,y"] if header else []
    rows += [f"{_num(x)},{_num(y)}" for x, y in dataset.points]
    return "\n".join(rows) + "\n"


def _num(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"cannot serialise non-finite value {value!r}")
    text = format(value, ".17g")
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def _dump(obj) -> str:
    # json.dumps formats floats with repr; the output format wants %.17g.
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _num(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_dump(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_dump(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def report_to_dict(report: FitReport) -> dict:
    return {
        "degree": report.degree,
        "backend": report.backend.value,
        "coefficients": [float(c) for c in report.coefficients],
        "sse": float(report.sse),
        "r": float(report.r),
        "n_points": int(report.n_points),
        "r_definition": R_DEFINITION,
    }


def emit_report(report) -> str:
    """JSON document for a :class:`FitReport` or a ``BothReport``."""
    if isinstance(report, FitReport):
        doc = report_to_dict(report)
    else:
        doc = {
            "reports": [report_to_dict(report.normal), report_to_dict(report.qr)],
            "max_coef_discrepancy": float(report.max_coef_discrepancy),
        }
    return _dump(doc) + "\n"


def emit_bench(report) -> str:
    doc = {k: (float(v) if isinstance(v, float) else v) for k, v in report.to_dict().items()}
    return _dump(doc) + "\n"
