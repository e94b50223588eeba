"""
Output for CLI commands: CSV with a header row, JSON documents of the form
{"command", "params", "rows"} (plus "sequences" of
{"meaning", "values"} for exact counts), or a rich table for the terminal.

Counts are always written as decimal strings; they overflow 64-bit integers early.
"""

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from rich.console import Console
from rich.table import Table

from asymptotics import LogEstimate, log_count
from egf_engine import CountSequence
from error_handler import PreconditionError

FORMATS = ("csv", "json", "table")

Row = Dict[str, Any]


def sequence_rows(sequence: CountSequence, start: int = 0) -> List[Row]:
    return [
        {"n": n, "meaning": sequence.meaning, "value": str(sequence[n])}
        for n in range(start, len(sequence))
    ]


def comparison_row(n: float, estimate: LogEstimate, exact: Optional[int] = None) -> Row:
    """One line of an exact-vs-estimate comparison; ratio = estimate / exact."""
    row: Row = {
        "n": n,
        "exact": "" if exact is None else str(exact),
        "log_estimate": estimate.log_value,
        "ratio": "",
        "form": estimate.form,
        "parts": estimate.parts_dict(),
    }
    if exact is not None and exact > 0:
        row["log_exact"] = log_count(exact)
        row["ratio"] = math.exp(estimate.log_value - row["log_exact"])
    if estimate.details:
        row["details"] = dict(estimate.details)
    return row


def _flat(row: Row) -> Row:
    """CSV cells: nested parts/details are dropped, floats printed with full precision."""
    return {
        k: repr(v) if isinstance(v, float) else v
        for k, v in row.items()
        if not isinstance(v, dict)
    }


def _columns(rows: Sequence[Row]) -> List[str]:
    columns: List[str] = []
    for row in rows:
        for key, value in row.items():
            if key not in columns and not isinstance(value, dict):
                columns.append(key)
    return columns


def render_csv(rows: Sequence[Row]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=_columns(rows), lineterminator="\n", restval="")
    writer.writeheader()
    for row in rows:
        writer.writerow(_flat(row))
    return buffer.getvalue()


def render_json(
    command: str, params: Dict[str, Any], rows: Sequence[Row], sequences: Sequence[CountSequence] = ()
) -> str:
    document = {"command": command, "params": params, "rows": list(rows)}
    if sequences:
        document["sequences"] = [s.to_dict() for s in sequences]
    return json.dumps(document, indent=2, default=str) + "\n"


def render_table(command: str, rows: Sequence[Row]) -> str:
    table = Table(title=command)
    columns = _columns(rows)
    for column in columns:
        table.add_column(column, overflow="fold")
    for row in rows:
        table.add_row(*(str(_flat(row).get(c, "")) for c in columns))
    console = Console(file=io.StringIO(), width=160, color_system=None)
    console.print(table)
    return console.file.getvalue()


def render(
    command: str,
    params: Dict[str, Any],
    rows: Sequence[Row],
    fmt: str = "csv",
    sequences: Sequence[CountSequence] = (),
) -> str:
    """Rows in the requested format; whole sequences are attached to JSON documents only."""
    fmt = fmt.lower()
    if fmt == "csv":
        return render_csv(rows)
    if fmt == "json":
        return render_json(command, params, rows, sequences)
    if fmt == "table":
        return render_table(command, rows)
    raise PreconditionError(f"unknown output format '{fmt}' (expected one of {', '.join(FORMATS)})")


def write_output(text: str, out: Optional[str] = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
