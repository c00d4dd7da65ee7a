"""Campaign reports as sorted-key JSON and pandas text tables."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, List, Sequence, Union

import numpy as np
import pandas as pd

from src.campaign.base import Report
from src.errors import ParseError

TABLE_COLUMNS = ["suite", "expected", "met", "trials", "failures", "max_residual", "seconds"]


def _json_default(value: Any) -> Any:
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, complex):
        return [value.real, value.imag]
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def reports_to_json(reports: Sequence[Report]) -> str:
    """Deterministic JSON: sorted keys, round-trip float precision."""
    return json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2, default=_json_default)


def write_reports(path: Union[str, Path], reports: Sequence[Report]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(reports_to_json(reports) + "\n", encoding="utf-8")
    return path


def load_reports(path: Union[str, Path]) -> List[Report]:
    """Read a JSON report file.

    Raises:
        ParseError: If the file is not a list of report objects.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, position=exc.pos) from exc
    if not isinstance(data, list):
        raise ParseError("Report file must hold a list", position="$")
    try:
        return [Report.from_dict(item) for item in data]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"Malformed report entry: {exc}", position="$") from exc


def reports_frame(reports: Sequence[Report]) -> pd.DataFrame:
    return pd.DataFrame([{k: r.to_dict()[k] for k in TABLE_COLUMNS} for r in reports], columns=TABLE_COLUMNS)


def render_text(reports: Sequence[Report]) -> str:
    """Table of suite verdicts followed by a one-line summary."""
    if not reports:
        return "No suites run."
    frame = reports_frame(reports)
    frame["met"] = frame["met"].map({True: "yes", False: "NO"})
    table = frame.to_string(index=False, float_format=lambda v: f"{v:.3e}")
    met = sum(r.met for r in reports)
    return f"{table}\n\n{met}/{len(reports)} suites met their expectation"
