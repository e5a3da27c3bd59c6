import json
from collections.abc import Iterator
from pathlib import Path
from typing import Any

from components.domain__meme.errors import DatasetNotFoundError, RecordParseError


def iter_json_lines(path: Path) -> Iterator[tuple[int, dict[str, Any]]]:
    if not path.is_file():
        raise DatasetNotFoundError(f"Record file not found: {path}")
    with path.open("r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as exc:
                raise RecordParseError(str(path), line_number, f"invalid JSON ({exc.msg})") from exc
            if not isinstance(payload, dict):
                raise RecordParseError(str(path), line_number, "record is not a JSON object")
            yield line_number, payload


def coerce_binary_label(value: Any, path: Path, line_number: int) -> int | None:
    if value is None:
        return None
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, (int, float)) and value in (0, 1):
        return int(value)
    if isinstance(value, str) and value.strip() in {"0", "1"}:
        return int(value.strip())
    raise RecordParseError(str(path), line_number, f"label {value!r} is not binary")


def require_field(payload: dict[str, Any], key: str, path: Path, line_number: int) -> Any:
    if key not in payload or payload[key] is None:
        raise RecordParseError(str(path), line_number, f"missing field {key!r}")
    return payload[key]
