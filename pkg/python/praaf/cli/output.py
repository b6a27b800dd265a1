import csv
import io
import json
from typing import Any, Dict, Iterable, List, Optional, Sequence

from praaf.config import OutputFormat


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "T" if value else "F"
    if value is None:
        return ""
    return str(value)


def _json_value(column: str, value: Any, numeric: Iterable[str]) -> Any:
    if column in numeric and isinstance(value, str) and value:
        return float(value)
    return value


def render(
        columns: Sequence[str],
        rows: List[Dict[str, Any]],
        output: OutputFormat = "table",
        footer: Optional[Dict[str, Any]] = None,
        numeric: Iterable[str] = ("probability",)
) -> str:
    """
    Render rows as an aligned table, CSV or JSON lines.

    All three formats carry the same cells; `numeric` columns hold formatted
    numbers that are written as JSON numbers.
    """
    numeric = set(numeric)
    if output == "jsonl":
        lines = [
            json.dumps({c: _json_value(c, row.get(c), numeric) for c in columns if c in row})
            for row in rows
        ]
        if footer:
            lines.append(json.dumps({c: _json_value(c, v, numeric) for c, v in footer.items()}))
        return "".join(line + "\n" for line in lines)

    body = [[_cell(row.get(c)) for c in columns] for row in rows]
    if footer:
        body.append([_cell(footer.get(c)) for c in columns])

    if output == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(body)
        return buffer.getvalue()

    widths = [max([len(c)] + [len(line[i]) for line in body]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip() for line in body)
    return "".join(line + "\n" for line in lines)
