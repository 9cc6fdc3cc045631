"""Output formatting for CLI records"""
import csv
import io
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from cyclonorm.core.models import SweepRecord

FIELDS = ("command", "n", "poly", "value", "unit", "method", "ok")


class ResultLine(BaseModel):
    """One JSON line; integers beyond n are carried as decimal strings"""
    command: str
    n: Optional[int] = None
    poly: Optional[str] = None
    value: Any = None
    unit: Optional[bool] = None
    method: Optional[str] = None
    ok: Optional[bool] = None


def to_plain(value: Any) -> Any:
    """
    Convert a record value into JSON-safe data.

    Example:
        >>> to_plain([1, 11, 44])
        ['1', '11', '44']
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return str(value)
    if hasattr(value, "to_dict"):
        return to_plain(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    return str(value)


def to_text(value: Any) -> str:
    """
    Human-readable value.

    Example:
        >>> to_text([1, 11, 44, 77, 55, 11])
        '[1,11,44,77,55,11]'
    """
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(to_text(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}={to_text(v)}" for k, v in value.items()) + "}"
    return str(value)


def format_json(record: SweepRecord) -> str:
    data: Dict[str, Any] = record.to_dict()
    data["value"] = to_plain(data["value"])
    return ResultLine(**data).model_dump_json()


def format_text(record: SweepRecord) -> str:
    """command followed by key=value pairs, skipping absent fields"""
    parts: List[str] = [record.command]
    for key, value in record.to_dict().items():
        if key == "command" or value is None:
            continue
        text = to_text(value)
        if key == "poly":
            text = f"'{text}'"
        parts.append(f"{key}={text}")
    return " ".join(parts)


def format_csv(record: SweepRecord) -> str:
    buffer = io.StringIO()
    row = ["" if v is None else to_text(v) for v in record.to_dict().values()]
    csv.writer(buffer, lineterminator="").writerow(row)
    return buffer.getvalue()


def csv_header() -> str:
    return ",".join(FIELDS)


class RecordFormatter:
    """Renders records line by line in one output format"""

    _RENDERERS = {"text": format_text, "json": format_json, "csv": format_csv}

    def __init__(self, output_format: str = "text"):
        if output_format not in self._RENDERERS:
            raise ValueError(f"Unknown output format: {output_format}")
        self.output_format = output_format
        self._render = self._RENDERERS[output_format]

    def header(self) -> Optional[str]:
        """Leading line, csv only"""
        return csv_header() if self.output_format == "csv" else None

    def format(self, record: SweepRecord) -> str:
        return self._render(record)
