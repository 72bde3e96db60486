# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2026, iwasawa contributors

"""
Machine readable reports. JSON output is byte-stable for a given input:
sorted keys, fixed indentation, exact floats and an optional timestamp.
"""
import csv
import io
import json
import math

from datetime import datetime, timezone
from typing import Any, Dict, Iterable, Mapping

from iwasawa.reports.codec import to_jsonable

CSV_COLUMNS = (
    "p",
    "element_id",
    "kind",
    "q",
    "norm_closed",
    "se_closed",
    "norm_direct",
    "se_direct",
    "agree",
    "unitary",
    "opnorm",
    "verdict",
)


def _finite(obj: Any) -> Any:
    # NaN and infinity are not JSON; report them as strings
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    if isinstance(obj, dict):
        return {key: _finite(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(value) for value in obj]
    return obj


def render_json(report: Mapping[str, Any], timestamp: bool = True) -> str:
    payload: Dict[str, Any] = json.loads(json.dumps(report, default=to_jsonable))
    if timestamp:
        payload["generated_at"] = datetime.now(timezone.utc).isoformat()
    return (
        json.dumps(_finite(payload), sort_keys=True, indent=2, allow_nan=False) + "\n"
    )


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_csv(rows: Iterable[Mapping[str, Any]]) -> str:
    """One line per row with the fixed CSV_COLUMNS header"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in CSV_COLUMNS])
    return buffer.getvalue()
