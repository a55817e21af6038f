"""Persisting reports as JSON or CSV."""
from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

TIMING_KEYS = ("timing",)


def _clean(obj):
    """JSON-safe copy: NaN/inf become None, numpy scalars become Python numbers."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        obj = obj.item()
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    return obj


def as_dict(report) -> dict:
    return _clean(report.to_dict() if hasattr(report, "to_dict") else report)


def strip_timing(d: dict) -> dict:
    """Drop wall-clock fields so two reports can be compared byte for byte."""
    return {k: v for k, v in d.items() if k not in TIMING_KEYS}


def to_json(report, indent: int | None = 2) -> str:
    return json.dumps(as_dict(report), indent=indent, sort_keys=False)


def csv_rows(d: dict) -> tuple[list[str], list[list]]:
    """Header and rows for the CSV form: a histogram if present, else a moment table."""
    if d.get("histogram"):
        return ["bin_left", "bin_right", "density"], [
            [b["bin_left"], b["bin_right"], b["density"]] for b in d["histogram"]]
    if "empirical" in d and d["empirical"]:
        return ["h", "beta_hat", "stderr", "z", "theoretical"], [
            [m["h"], m["beta_hat"], m["stderr"], m["z"], d["theoretical"]["moments"].get(str(m["h"]))]
            for m in d["empirical"]["moments"]]
    if "points" in d:
        hs = list(d["limit"])
        return ["size"] + [f"beta_{h}" for h in hs] + [f"gap_{h}" for h in hs], [
            [p["size"]] + [p["theoretical"][h] for h in hs] + [p["gap"][h] for h in hs] for p in d["points"]]
    if "moments" in d:
        return ["h", "theoretical"], [[h, v] for h, v in d["moments"].items()]
    if all(not isinstance(v, (dict, list)) for v in d.values()):
        return list(d), [list(d.values())]
    raise ValueError("report has no tabular content for CSV output")


def emit_report(report, fmt: str = "json", path=None) -> str:
    """Serialize ``report``; write to ``path`` when given.  Returns the text."""
    if fmt == "json":
        text = to_json(report) + "\n"
    elif fmt == "csv":
        header, rows = csv_rows(as_dict(report))
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(["" if v is None else v for v in row] for row in rows)
        text = buf.getvalue()
    else:
        raise ValueError(f"unknown format {fmt!r}; expected json or csv")
    if path is not None:
        Path(path).write_text(text)
    return text
